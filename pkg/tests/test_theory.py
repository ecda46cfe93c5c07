import dataclasses
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
import sympy

from srd.config import canonical_relabel, structure_constants, wl_closure
from srd.errors import InfeasibleParameters, TypeMismatchError
from srd.exact import Matrix, QuadValue, squarefree_decomposition
from srd.models import example_configuration, petersen_adjacency
from srd.theory import (
    SrdParams,
    character_table,
    choose_labeling,
    expected_structure_constants,
    extract_srd_params,
    multiplication_vectors,
    srg_spectrum,
)


def quad_to_sympy(q: QuadValue):
    c0, c1, c2, c3 = (sympy.Rational(x.numerator, x.denominator) for x in q.coefficients)
    r1, r2 = q.radicands
    expr = c0
    if r1:
        expr += c1 * sympy.sqrt(r1)
    if r2:
        expr += c2 * sympy.sqrt(r2)
        expr += c3 * sympy.sqrt(squarefree_decomposition(r1 * r2)[1])
    return expr


def sympy_spectrum(adjacency) -> dict:
    """Exact eigenvalues with multiplicities via the characteristic polynomial."""
    return sympy.Matrix(np.asarray(adjacency).tolist()).eigenvals()


def assert_spectrum_matches(srg, adjacency):
    eigs = sympy_spectrum(adjacency)
    expected = {
        sympy.Integer(srg.k): 1,
        quad_to_sympy(srg.r): srg.f,
        quad_to_sympy(srg.s): srg.g,
    }
    assert sum(eigs.values()) == srg.n
    for value, mult in expected.items():
        match = [m for e, m in eigs.items() if sympy.simplify(e - value) == 0]
        assert match == [mult], f"eigenvalue {value}: expected multiplicity {mult}, got {match}"


def pentagon_adjacency():
    a = np.zeros((5, 5), dtype=np.int64)
    for i in range(5):
        a[i, (i + 1) % 5] = a[(i + 1) % 5, i] = 1
    return a


def gq22_collinearity_adjacency():
    """Disjointness graph on the 2-subsets of a 6-set."""
    duads = list(combinations(range(6), 2))
    a = np.zeros((15, 15), dtype=np.int64)
    for i, d in enumerate(duads):
        for j, e in enumerate(duads):
            if i != j and not set(d) & set(e):
                a[i, j] = 1
    return a


# -- spectra ----------------------------------------------------------------------


def test_spectrum_petersen():
    s = srg_spectrum(10, 3, 0, 1)
    assert (s.r, s.s, s.f, s.g) == (QuadValue(1), QuadValue(-2), 5, 4)
    assert_spectrum_matches(s, petersen_adjacency())


def test_spectrum_gq22_collinearity():
    s = srg_spectrum(15, 6, 1, 3)
    assert (s.r, s.s, s.f, s.g) == (QuadValue(1), QuadValue(-3), 9, 5)
    assert_spectrum_matches(s, gq22_collinearity_adjacency())


def test_spectrum_pentagon_conference():
    s = srg_spectrum(5, 2, 0, 1)
    assert s.conference
    assert s.f == s.g == 2
    assert str(s.r) == "-1/2+1/2√5"
    assert_spectrum_matches(s, pentagon_adjacency())


def test_spectrum_trace_identity_exact():
    for tup in [(10, 3, 0, 1), (15, 6, 1, 3), (5, 2, 0, 1), (16, 5, 0, 2)]:
        s = srg_spectrum(*tup)
        assert (QuadValue(s.k) + s.f * s.r + s.g * s.s).is_zero
        assert 1 + s.f + s.g == s.n
        assert s.r + s.s == s.lam - s.mu
        assert s.r * s.s == -(s.k - s.mu)


@pytest.mark.parametrize(
    "tup,message",
    [
        ((10, 3, 0, 2), "counting identity"),
        ((10, 10, 0, 1), "0 < k < n-1"),
        ((10, 3, 3, 1), "lambda"),
        ((10, 3, 0, 0), "mu"),
        ((13, 4, 1, 1), "conference condition"),
        ((5, 3, 1, 3), "multiplicities infeasible"),
    ],
)
def test_spectrum_rejections(tup, message):
    with pytest.raises(InfeasibleParameters) as err:
        srg_spectrum(*tup)
    assert message in str(err.value)


# -- derived tensor -----------------------------------------------------------------


def test_expected_tensor_matches_brute_force(gq_params, gq_counted_tensor):
    assert expected_structure_constants(gq_params) == gq_counted_tensor


def test_flag_product_identity_coefficient_is_valency(gq_params):
    t = expected_structure_constants(gq_params)
    assert t.entry(7, 9, 1) == gq_params.S2 == t.valency(7)


def test_expected_tensor_row_sums(gq_params):
    t = expected_structure_constants(gq_params)
    assert t.row_sum_violations() == []
    assert t.intersection_identity_violations() == []
    assert t.transpose_symmetry_violations() == []


def test_expected_tensor_rejects_negative_entry(gq_params):
    bad = dataclasses.replace(gq_params, N1=3)
    with pytest.raises(InfeasibleParameters) as err:
        expected_structure_constants(bad)
    assert "p[3][7][7]" in str(err.value)


def test_identity_relation_rows(gq_params):
    t = expected_structure_constants(gq_params)
    for j in range(1, 11):
        for k in range(1, 11):
            if t.composable(1, j):
                assert t.entry(1, j, k) == (1 if j == k else 0)


def test_multiplication_vectors_zero_off_composable(gq_params):
    vectors = multiplication_vectors(gq_params)
    assert vectors[(2, 5)] == [0] * 11
    assert vectors[(7, 7)] == [0] * 11
    assert vectors[(7, 2)] == [0] * 11


# -- extraction ---------------------------------------------------------------------


def test_extract_round_trip(gq_canonical, gq_counted_tensor):
    params = extract_srd_params(gq_canonical)
    assert params.as_tuple() == (15, 6, 1, 3, 15, 6, 1, 3, 3, 3, 2, 1, 2, 1, 1, 0, 1, 0)
    assert expected_structure_constants(params) == gq_counted_tensor


def test_extract_rejects_single_fiber():
    closed = wl_closure(example_configuration("petersen"))
    with pytest.raises(TypeMismatchError):
        extract_srd_params(closed)


def test_extract_rejects_non_canonical(gq_closure):
    with pytest.raises(TypeMismatchError):
        extract_srd_params(gq_closure)


def test_extract_under_alternate_designation(gq_closure):
    vals = structure_constants(gq_closure)
    fat1 = next(k for k in range(1, 11) if vals.valency(k) == 8 and vals.signatures[k] == (1, 1))
    fat2 = next(k for k in range(1, 11) if vals.valency(k) == 8 and vals.signatures[k] == (2, 2))
    config, _ = canonical_relabel(gq_closure, fiber1_color=fat1, fiber2_color=fat2)
    params = extract_srd_params(config)
    assert (params.n1, params.k1, params.lam1, params.mu1) == (15, 8, 4, 4)
    assert expected_structure_constants(params) == structure_constants(config)


# -- character tables ----------------------------------------------------------------


def test_character_table_gq22(gq_params):
    table = character_table(gq_params)
    assert table.labeling == "direct"
    paired = table.row("paired")
    assert [str(v) for v in paired.values] == ["1", "1", "-2", "1", "1", "-2"]
    assert paired.multiplicity == 9
    fiber1 = table.row("fiber1")
    assert [str(v) for v in fiber1.values] == ["1", "-3", "2", "0", "0", "0"]
    assert fiber1.multiplicity == 5
    mults = {row.name: row.multiplicity for row in table.rows}
    assert 1 + mults["paired"] + mults["fiber1"] == gq_params.n1
    assert 1 + mults["paired"] + mults["fiber2"] == gq_params.n2


def test_identical_fibers_use_direct_labeling(gq_params):
    assert choose_labeling(gq_params)[0] == "direct"


def test_mixed_fibers_force_swapped_labeling():
    srg1 = srg_spectrum(10, 3, 0, 1)   # f = 5
    srg2 = srg_spectrum(16, 5, 0, 2)   # multiplicities {10, 5}
    p = SrdParams(
        srg1=srg1, srg2=srg2, S1=5, S2=8,
        N1=0, P1=0, N2=0, P2=0, a1=0, b1=0, a2=0, b2=0,
    )
    labeling, r2, s2, f2 = choose_labeling(p)
    assert labeling == "swapped"
    assert f2 == 5
    assert r2 == srg2.s and s2 == srg2.r
    table = character_table(p)
    assert table.labeling == "swapped"
    assert table.row("paired").multiplicity == 5


def test_no_labeling_matches():
    srg1 = srg_spectrum(10, 3, 0, 1)   # f = 5, g = 4
    srg2 = srg_spectrum(9, 4, 1, 2)    # f = g = 4
    p = SrdParams(
        srg1=srg1, srg2=srg2, S1=5, S2=4,
        N1=0, P1=0, N2=0, P2=0, a1=0, b1=0, a2=0, b2=0,
    )
    with pytest.raises(InfeasibleParameters):
        character_table(p)


def test_character_projectors_orthogonal_on_gq22_model(gq_params, gq_canonical):
    """Blockwise idempotents built from the table rows on the real model."""
    table = character_table(gq_params)
    n = 30
    indicators = {}
    for rel in range(1, 7):
        indicators[rel] = Matrix.from_rows(
            (gq_canonical.colors == rel).astype(int).tolist()
        )
    tensor = structure_constants(gq_canonical)
    projectors = []
    for row in table.rows:
        acc = Matrix.zeros(n, n)
        for rel, fiber_size in ((1, 15), (2, 15), (3, 15), (4, 15), (5, 15), (6, 15)):
            value = row.value(rel).as_fraction()
            if value:
                weight = Fraction(row.multiplicity, fiber_size) * value / tensor.valency(rel)
                acc = acc + weight * indicators[rel]
        projectors.append(acc)
    total = Matrix.zeros(n, n)
    for i, e in enumerate(projectors):
        assert e @ e == e, f"row {table.rows[i].name} is not idempotent"
        total = total + e
        for other in projectors[i + 1 :]:
            assert (e @ other).is_zero
    assert total == Matrix.identity(n)


def test_conference_character_arithmetic_is_exact():
    s = srg_spectrum(5, 2, 0, 1)
    # a fiber-local row value pattern evaluated in Q(sqrt 5)
    value = 3 + 1 * s.s - 0 * (s.s + 1)
    assert value == QuadValue(3) + s.s
    assert ((value - 3) * (value - 3)).is_rational is False
    assert (s.r * s.s + 1).is_zero
