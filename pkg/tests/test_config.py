import random

import numpy as np
import pytest

from srd.config import (
    CoherentConfiguration,
    canonical_relabel,
    detect_type,
    format_matrix_text,
    from_adjacency,
    from_color_matrix,
    from_incidence,
    intersection_counts,
    intersection_identity_violations,
    parse_matrix_text,
    structure_constants,
    verify_axioms,
    wl_closure,
)
from srd.errors import CoherenceError, TypeMismatchError
from srd.models import example_configuration, gq22_incidence, petersen_adjacency
from srd.theory import extract_srd_params


def brute_force_counts(colors):
    """Independent per-cell intersection counting over all triples."""
    n = len(colors)
    out = {}
    for x in range(n):
        for y in range(n):
            k = colors[x][y]
            for w in range(n):
                key = (colors[x][w], colors[w][y], k)
                out.setdefault(key, {}).setdefault((x, y), 0)
                out[key][(x, y)] += 1
    return out


# -- initial colorings ---------------------------------------------------------


def test_one_by_one_incidence_has_three_colors():
    c = from_incidence(1, 1, [[1]])
    assert c.color_count == 3


def test_gq22_initial_coloring_has_six_colors():
    assert example_configuration("gq22").color_count == 6


def test_design_6_3_2_initial_coloring_well_formed():
    c = example_configuration("design_6_3_2")
    assert (c.n1, c.n2) == (6, 10)
    assert c.colors.shape == (16, 16)


def test_non_binary_incidence_rejected():
    with pytest.raises(ValueError):
        from_incidence(2, 2, [[0, 2], [1, 0]])
    with pytest.raises(ValueError):
        from_adjacency([[0, 3], [1, 0]])


# -- closure -------------------------------------------------------------------


def test_k4_closure_two_colors():
    closed = wl_closure(example_configuration("k4"))
    assert closed.color_count == 2
    assert detect_type(closed) == (2,)


def test_petersen_closure_three_colors():
    closed = wl_closure(example_configuration("petersen"))
    assert closed.color_count == 3
    assert detect_type(closed) == (3,)


def test_gq22_closure_ten_colors_type_3_2_3(gq_closure):
    assert gq_closure.color_count == 10
    assert detect_type(gq_closure) == (3, 2, 3)


def test_design_6_3_2_closure_type_rejected_downstream():
    closed = wl_closure(example_configuration("design_6_3_2"))
    assert detect_type(closed) == (2, 2, 3)
    with pytest.raises(TypeMismatchError):
        canonical_relabel(closed)


def test_closure_idempotent(gq_closure):
    again = wl_closure(gq_closure)
    assert np.array_equal(again.colors, gq_closure.colors)
    for name in ("petersen", "design_6_3_2", "k4"):
        closed = wl_closure(example_configuration(name))
        assert np.array_equal(wl_closure(closed).colors, closed.colors)


def test_closure_color_count_invariant_under_vertex_relabeling():
    rng = random.Random(3)
    inc = gq22_incidence()
    base = wl_closure(from_incidence(15, 15, inc)).color_count
    for _ in range(3):
        rows = list(range(15))
        cols = list(range(15))
        rng.shuffle(rows)
        rng.shuffle(cols)
        permuted = inc[np.ix_(rows, cols)]
        assert wl_closure(from_incidence(15, 15, permuted)).color_count == base


# -- axiom verification -----------------------------------------------------------


def test_closure_output_passes_axioms(gq_closure):
    assert verify_axioms(gq_closure).passed


def test_initial_gq22_coloring_fails_axioms_with_witness():
    report = verify_axioms(example_configuration("gq22"))
    assert not report.passed
    assert report.triple_violations
    v = report.triple_violations[0]
    assert v.count_a != v.count_b and v.cell_a != v.cell_b


def test_hand_built_directed_triangle_passes():
    # identity, directed 3-cycle, reverse 3-cycle
    colors = [[1, 2, 3], [3, 1, 2], [2, 3, 1]]
    c = from_color_matrix(3, 0, colors)
    report = verify_axioms(c)
    assert report.passed
    # independent brute force: every (i, j, k) count constant over cells
    for cells in brute_force_counts(colors).values():
        assert len(set(cells.values())) == 1


def test_verify_axioms_flags_structural_breakage():
    # color 1 straddles the diagonal, so its transpose class is mixed too
    c = from_color_matrix(2, 0, [[1, 1], [2, 1]])
    report = verify_axioms(c)
    assert not report.passed
    assert any("diagonal" in s for s in report.structural_issues)
    assert any("transpose" in s for s in report.structural_issues)


# -- structure constants ------------------------------------------------------------


def test_k4_structure_constants():
    closed = wl_closure(example_configuration("k4"))
    t = structure_constants(closed)
    rest = 2
    assert t.valency(rest) == 3
    assert t.entry(rest, rest, 1) == 3


def test_petersen_structure_constants():
    closed = wl_closure(example_configuration("petersen"))
    t = structure_constants(closed)
    edge = next(k for k in (2, 3) if t.valency(k) == 3)
    non_edge = 5 - edge
    assert t.entry(edge, edge, edge) == 0
    assert t.entry(edge, edge, non_edge) == 1


def test_gq22_structure_constants(gq_counted_tensor):
    t = gq_counted_tensor
    assert t.entry(2, 7, 7) == 2
    assert t.entry(2, 7, 8) == 1
    assert t.valencies[1:] == (1, 6, 8, 1, 6, 8, 3, 12, 3, 12)


def test_gq22_tensor_invariants(gq_counted_tensor):
    assert gq_counted_tensor.row_sum_violations() == []
    assert gq_counted_tensor.intersection_identity_violations() == []
    assert gq_counted_tensor.transpose_symmetry_violations() == []


def test_structure_constants_precondition_error():
    with pytest.raises(CoherenceError) as err:
        structure_constants(example_configuration("gq22"))
    assert "triple" in str(err.value)


def test_sparse_counts_match_brute_force():
    closed = wl_closure(example_configuration("petersen"))
    sparse = intersection_counts(closed)
    brute = brute_force_counts(closed.colors.tolist())
    for (i, j, k), cells in brute.items():
        counts = set(cells.values())
        assert counts == {sparse.get((i, j, k), 0)}
    assert intersection_identity_violations(closed) == []


# -- canonical relabeling -------------------------------------------------------------


def test_canonical_relabel_gq22(gq_closure):
    config, mapping = canonical_relabel(gq_closure)
    t = structure_constants(config)
    # relation 2 is the smaller-valency fiber-1 graph: collinearity, valency 6
    assert t.valency(2) == 6
    assert t.valency(7) == 3
    assert sorted(mapping.values()) == list(range(1, 11))


def test_canonical_relabel_idempotent(gq_canonical):
    again, mapping = canonical_relabel(gq_canonical)
    assert np.array_equal(again.colors, gq_canonical.colors)
    assert mapping == {k: k for k in range(1, 11)}


def test_canonical_relabel_swapped_fibers():
    closed = wl_closure(from_incidence(15, 15, gq22_incidence().T))
    config, _ = canonical_relabel(closed)
    t = structure_constants(config)
    assert t.transposes[7] == 9 and t.transposes[8] == 10
    # self-dual model: same parameters either way around
    assert extract_srd_params(config).as_tuple() == (
        15, 6, 1, 3, 15, 6, 1, 3, 3, 3, 2, 1, 2, 1, 1, 0, 1, 0,
    )


def test_canonical_relabel_caller_designation(gq_closure):
    vals = structure_constants(gq_closure).valencies
    fat = next(
        k for k in range(1, 11)
        if vals[k] == 8 and structure_constants(gq_closure).signatures[k] == (1, 1)
    )
    config, mapping = canonical_relabel(gq_closure, fiber1_color=fat)
    assert mapping[fat] == 2
    t = structure_constants(config)
    assert t.valency(2) == 8


def test_canonical_relabel_rejects_single_fiber():
    closed = wl_closure(example_configuration("petersen"))
    with pytest.raises(TypeMismatchError):
        canonical_relabel(closed)


# -- text format ----------------------------------------------------------------------


def test_text_roundtrip_incidence():
    text = format_matrix_text("incidence", gq22_incidence(), comment="model")
    c = parse_matrix_text(text)
    assert (c.n1, c.n2) == (15, 15)
    assert c.color_count == 6


def test_text_roundtrip_adjacency():
    text = format_matrix_text("adjacency", petersen_adjacency())
    c = parse_matrix_text(text)
    assert (c.n1, c.n2) == (10, 0)
    assert wl_closure(c).color_count == 3


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only a comment\n",
        "2\n0 1\n1 0\n",
        "2 2\n0 1\n",
        "2 0\n0 1\n1\n",
        "2 0\n0 x\n1 0\n",
        "2 0\n0 2\n1 0\n",
    ],
)
def test_text_parse_errors(text):
    with pytest.raises(ValueError):
        parse_matrix_text(text)


def test_color_matrix_validation():
    with pytest.raises(ValueError):
        CoherentConfiguration(2, 0, np.array([[1, 3], [3, 1]]), 3)
