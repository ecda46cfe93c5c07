import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from srd.exact import Matrix, QuadValue, mat_mul, quad_roots, squarefree_decomposition
from srd.models import petersen_adjacency


def naive_mat_mul(a, b):
    """Independent triple-loop reference for the matrix product."""
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            acc = 0
            for t in range(k):
                acc += a[i][t] * b[t][j]
            out[i][j] = acc
    return out


def test_squarefree_decomposition_examples():
    assert squarefree_decomposition(0) == (0, 1)
    assert squarefree_decomposition(1) == (1, 1)
    assert squarefree_decomposition(12) == (2, 3)
    assert squarefree_decomposition(45) == (3, 5)
    with pytest.raises(ValueError):
        squarefree_decomposition(-4)


@given(st.integers(min_value=0, max_value=10_000))
def test_squarefree_decomposition_reconstructs(n):
    m, d = squarefree_decomposition(n)
    assert m * m * d == n or (n == 0 and (m, d) == (0, 1))
    for p in range(2, 40):
        assert d % (p * p), f"{d} has square divisor {p}^2"


# -- quadratic values ---------------------------------------------------------

_CONTEXTS = [(0, 0), (2, 0), (5, 0), (2, 3), (2, 5), (3, 5), (6, 10)]
_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def _build(coeffs, rads):
    d1, d2 = rads
    v = QuadValue(coeffs[0])
    if d1:
        v = v + coeffs[1] * QuadValue.sqrt(d1)
    if d2:
        v = v + coeffs[2] * QuadValue.sqrt(d2) + coeffs[3] * QuadValue.sqrt(d1 * d2)
    return v


@st.composite
def quad_triples(draw):
    rads = draw(st.sampled_from(_CONTEXTS))
    return tuple(
        _build(tuple(draw(_fractions) for _ in range(4)), rads) for _ in range(3)
    )


@given(quad_triples())
def test_quad_ring_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + 0 == a and a * 1 == a
    assert a - a == QuadValue(0)


def test_quad_cross_context_equality():
    assert QuadValue.sqrt(2) * QuadValue.sqrt(6) == 2 * QuadValue.sqrt(3)
    assert QuadValue.sqrt(8) == 2 * QuadValue.sqrt(2)
    assert QuadValue.sqrt(Fraction(1, 4)) == Fraction(1, 2)
    a = QuadValue.sqrt(2) + QuadValue.sqrt(3)
    assert a * a == 5 + 2 * QuadValue.sqrt(6)


def test_quad_three_independent_radicals_rejected():
    with pytest.raises(ValueError):
        (QuadValue.sqrt(2) + QuadValue.sqrt(3)) + QuadValue.sqrt(5)


def test_quad_division_and_str():
    golden = (QuadValue.sqrt(5) + 1) / 2
    assert golden * golden == golden + 1
    assert str(golden) == "1/2+1/2√5"
    assert str(QuadValue(0)) == "0"
    assert str(QuadValue(Fraction(-3, 2))) == "-3/2"
    with pytest.raises(ZeroDivisionError):
        golden / 0


def test_quad_roots_rational_case():
    r, s = quad_roots(-1, 2)
    assert (r, s) == (1, -2)
    assert r.is_rational and s.is_rational


def test_quad_roots_symmetric_case():
    assert quad_roots(0, 1) == (QuadValue(1), QuadValue(-1))


def test_quad_roots_pentagon_case():
    r, s = quad_roots(-1, 1)
    assert str(r) == "-1/2+1/2√5"
    assert (r * r + r - 1).is_zero
    assert (s * s + s - 1).is_zero
    assert r + s == -1 and r * s == -1


@given(
    st.fractions(min_value=-6, max_value=6, max_denominator=4),
    st.fractions(min_value=0, max_value=9, max_denominator=4),
)
def test_quad_roots_satisfy_polynomial(p, q):
    r, s = quad_roots(p, q)
    assert (r * r - p * r - q).is_zero
    assert (s * s - p * s - q).is_zero
    assert r + s == p and r * s == -q


def test_quad_roots_negative_discriminant():
    with pytest.raises(ValueError):
        quad_roots(0, -1)


# -- matrices -----------------------------------------------------------------


def test_identity_product_is_identity_case():
    m = Matrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert mat_mul(Matrix.identity(3), m) == m
    assert mat_mul(m, Matrix.identity(3)) == m


def test_all_ones_rank_one_product():
    j = Matrix.ones(2, 2)
    assert mat_mul(j, j) == 2 * j


def test_petersen_quadratic_relation():
    a = Matrix.from_rows(petersen_adjacency().tolist())
    expected = naive_mat_mul(a.to_rows(), a.to_rows())
    assert mat_mul(a, a).to_rows() == expected
    lhs = mat_mul(a, a) + a - 2 * Matrix.identity(10)
    assert lhs == Matrix.ones(10, 10)


def test_dimension_mismatch_raises():
    with pytest.raises(ValueError):
        mat_mul(Matrix.ones(2, 3), Matrix.ones(2, 3))


def test_mat_mul_matches_naive_reference_on_random_matrices():
    rng = random.Random(20260810)
    for _ in range(25):
        n, k, m = rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 5)
        a = [[rng.randint(-9, 9) for _ in range(k)] for _ in range(n)]
        b = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(k)]
        got = mat_mul(Matrix.from_rows(a), Matrix.from_rows(b))
        assert got.to_rows() == naive_mat_mul(a, b)


def test_matrix_over_fractions_and_quads():
    half = Fraction(1, 2)
    m = Matrix.from_rows([[half, 0], [0, half]])
    assert mat_mul(m, m) == Matrix.from_rows([[Fraction(1, 4), 0], [0, Fraction(1, 4)]])
    q = QuadValue.sqrt(2)
    mq = Matrix.from_rows([[q, 0], [0, q]])
    assert mat_mul(mq, mq) == Matrix.from_rows([[QuadValue(2), 0], [0, QuadValue(2)]])


def test_matrix_transpose_trace_row_sums():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert m.transpose().to_rows() == [[1, 3], [2, 4]]
    assert m.trace() == 5
    assert m.row_sums() == [3, 7]
