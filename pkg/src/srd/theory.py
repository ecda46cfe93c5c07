"""Parameter-level theory of strongly regular designs.

A strongly regular design links two strongly regular graphs (one per
fiber) through a flag relation; its ten-relation product structure is
determined by the eighteen integers

    n1 k1 lambda1 mu1   n2 k2 lambda2 mu2   S1 S2 N1 P1 N2 P2 a1 b1 a2 b2

where S are the flag valencies, (N, P) the flag counts of adjacent and
non-adjacent point pairs, and (a, b) the flag-composition counts.  This
module derives the full intersection-number tensor from those integers,
extracts them back out of concrete configurations, and builds exact
spectra and character tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .config import CoherentConfiguration, is_canonical_3_2_3, structure_constants
from .errors import InfeasibleParameters, TypeMismatchError
from .exact import QuadValue, quad_roots
from .tensor import SIGNATURES_3_2_3, TRANSPOSES_3_2_3, StructureTensor


@dataclass(frozen=True)
class SrgParams:
    """One strongly regular graph's parameters and spectrum.

    Plain record; the validating constructor is :func:`srg_spectrum`.
    r > s are the non-principal eigenvalues, f and g their multiplicities.
    """

    n: int
    k: int
    lam: int
    mu: int
    r: QuadValue
    s: QuadValue
    f: int
    g: int

    @property
    def ell(self) -> int:
        return self.n - self.k - 1

    @property
    def conference(self) -> bool:
        return not self.r.is_rational

    def __str__(self) -> str:
        return f"srg({self.n},{self.k},{self.lam},{self.mu})"


def srg_spectrum(n: int, k: int, lam: int, mu: int) -> SrgParams:
    """Validated parameters and exact spectrum of an SRG.

    Enforces 0 < k < n-1, 0 <= lam < k, 0 < mu <= k, the counting identity
    k(k-lam-1) = (n-k-1) mu, and integral eigenvalue multiplicities (with
    the conference branch f = g = (n-1)/2 when the eigenvalues are
    irrational).  Raises InfeasibleParameters otherwise.
    """
    for name, v in (("n", n), ("k", k), ("lambda", lam), ("mu", mu)):
        if not isinstance(v, int):
            raise InfeasibleParameters(f"{name} must be an integer")
    if not 0 < k < n - 1:
        raise InfeasibleParameters(f"need 0 < k < n-1, got k={k}, n={n}")
    if not 0 <= lam < k:
        raise InfeasibleParameters(f"need 0 <= lambda < k, got lambda={lam}, k={k}")
    if not 0 < mu <= k:
        raise InfeasibleParameters(f"need 0 < mu <= k, got mu={mu}, k={k}")
    if k * (k - lam - 1) != (n - k - 1) * mu:
        raise InfeasibleParameters(
            f"counting identity fails: k(k-lambda-1)={k * (k - lam - 1)} "
            f"but (n-k-1)mu={(n - k - 1) * mu}"
        )
    r, s = quad_roots(lam - mu, k - mu)
    if r.is_rational:
        rq, sq = r.as_fraction(), s.as_fraction()
        f = Fraction(-k - (n - 1) * sq, rq - sq)
        g = n - 1 - f
        if f.denominator != 1 or f < 1 or g < 1:
            raise InfeasibleParameters(
                f"multiplicities infeasible: f={f}, g={g} must be positive integers"
            )
        f = int(f)
        g = int(g)
    else:
        if 2 * k + (n - 1) * (lam - mu) != 0:
            raise InfeasibleParameters(
                "irrational eigenvalues require the conference condition "
                f"2k + (n-1)(lambda-mu) = 0, got {2 * k + (n - 1) * (lam - mu)}"
            )
        if (n - 1) % 2:
            raise InfeasibleParameters("conference multiplicities (n-1)/2 not integral")
        f = g = (n - 1) // 2
    return SrgParams(n, k, lam, mu, r, s, f, g)


@dataclass(frozen=True)
class SrdParams:
    """Full strongly-regular-design parameter tuple over two fibers."""

    srg1: SrgParams
    srg2: SrgParams
    S1: int
    S2: int
    N1: int
    P1: int
    N2: int
    P2: int
    a1: int
    b1: int
    a2: int
    b2: int

    def __post_init__(self):
        for name in ("S1", "S2", "N1", "P1", "N2", "P2", "a1", "b1", "a2", "b2"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise InfeasibleParameters(f"{name} must be a non-negative integer, got {v}")
        if not 0 < self.S1 < self.n1:
            raise InfeasibleParameters(f"need 0 < S1 < n1, got S1={self.S1}, n1={self.n1}")
        if not 0 < self.S2 < self.n2:
            raise InfeasibleParameters(f"need 0 < S2 < n2, got S2={self.S2}, n2={self.n2}")

    n1 = property(lambda self: self.srg1.n)
    k1 = property(lambda self: self.srg1.k)
    lam1 = property(lambda self: self.srg1.lam)
    mu1 = property(lambda self: self.srg1.mu)
    ell1 = property(lambda self: self.srg1.ell)
    n2 = property(lambda self: self.srg2.n)
    k2 = property(lambda self: self.srg2.k)
    lam2 = property(lambda self: self.srg2.lam)
    mu2 = property(lambda self: self.srg2.mu)
    ell2 = property(lambda self: self.srg2.ell)

    def as_tuple(self) -> tuple[int, ...]:
        return (
            self.n1, self.k1, self.lam1, self.mu1,
            self.n2, self.k2, self.lam2, self.mu2,
            self.S1, self.S2, self.N1, self.P1, self.N2, self.P2,
            self.a1, self.b1, self.a2, self.b2,
        )

    def as_dict(self) -> dict[str, int]:
        keys = (
            "n1", "k1", "lambda1", "mu1", "n2", "k2", "lambda2", "mu2",
            "S1", "S2", "N1", "P1", "N2", "P2", "a1", "b1", "a2", "b2",
        )
        return dict(zip(keys, self.as_tuple()))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.as_tuple())


# -- tensor derivation -------------------------------------------------------
#
# Products of the six generator relations (identities, the two fiber graphs,
# the flag relation and its transpose) are definitional in the parameters.
# Every product involving a complement relation (3, 6, 8, 10) is derived by
# substituting complement = (all-ones block) - (generators) and expanding
# bilinearly, never transcribed, so the whole table is forced by the
# completeness identities.

_EXPANSIONS = {
    1: ((1, ("s", 1)),),
    2: ((1, ("s", 2)),),
    4: ((1, ("s", 4)),),
    5: ((1, ("s", 5)),),
    7: ((1, ("s", 7)),),
    9: ((1, ("s", 9)),),
    3: ((1, ("J", 1, 1)), (-1, ("s", 1)), (-1, ("s", 2))),
    6: ((1, ("J", 2, 2)), (-1, ("s", 4)), (-1, ("s", 5))),
    8: ((1, ("J", 1, 2)), (-1, ("s", 7))),
    10: ((1, ("J", 2, 1)), (-1, ("s", 9))),
}

_BLOCK_RELATIONS = {(1, 1): (1, 2, 3), (2, 2): (4, 5, 6), (1, 2): (7, 8), (2, 1): (9, 10)}


def multiplication_vectors(p) -> dict[tuple[int, int], list]:
    """Coefficient vectors of all 100 relation products, derived exactly.

    ``p`` only needs the eighteen parameter attributes (n1..b2), so both
    integer SrdParams and symbolic stand-ins work.  Entry (i, j) is a
    length-11 list (index 0 unused); non-composable products are zero.
    """
    n1, k1, lam1, mu1 = p.n1, p.k1, p.lam1, p.mu1
    n2, k2, lam2, mu2 = p.n2, p.k2, p.lam2, p.mu2
    S1, S2 = p.S1, p.S2
    N1, P1, N2, P2 = p.N1, p.P1, p.N2, p.P2
    a1, b1, a2, b2 = p.a1, p.b1, p.a2, p.b2

    primary = {
        (1, 1): ((1, 1),),
        (1, 2): ((2, 1),),
        (2, 1): ((2, 1),),
        (2, 2): ((1, k1), (2, lam1), (3, mu1)),
        (1, 7): ((7, 1),),
        (2, 7): ((7, N1), (8, P1)),
        (4, 4): ((4, 1),),
        (4, 5): ((5, 1),),
        (5, 4): ((5, 1),),
        (5, 5): ((4, k2), (5, lam2), (6, mu2)),
        (4, 9): ((9, 1),),
        (5, 9): ((9, N2), (10, P2)),
        (7, 4): ((7, 1),),
        (7, 5): ((7, N2), (8, P2)),
        (7, 9): ((1, S2), (2, a2), (3, b2)),
        (9, 1): ((9, 1),),
        (9, 2): ((9, N1), (10, P1)),
        (9, 7): ((4, S1), (5, a1), (6, b1)),
    }
    valency = {1: 1, 2: k1, 4: 1, 5: k2, 7: S2, 9: S1}
    valency_t = {1: 1, 2: k1, 4: 1, 5: k2, 7: S1, 9: S2}
    fiber_size = {1: n1, 2: n2}

    def atom_product(left, right):
        """Product of two expansion atoms (generators or all-ones blocks)."""
        terms = None
        if left[0] == "s" and right[0] == "s":
            terms = primary.get((left[1], right[1]))
        elif left[0] == "s":
            i = left[1]
            src, tgt = SIGNATURES_3_2_3[i]
            if tgt == right[1]:
                scale = valency[i]
                terms = tuple((k, scale) for k in _BLOCK_RELATIONS[(src, right[2])])
        elif right[0] == "s":
            j = right[1]
            src, tgt = SIGNATURES_3_2_3[j]
            if left[2] == src:
                scale = valency_t[j]
                terms = tuple((k, scale) for k in _BLOCK_RELATIONS[(left[1], tgt)])
        elif left[2] == right[1]:
            scale = fiber_size[left[2]]
            terms = tuple((k, scale) for k in _BLOCK_RELATIONS[(left[1], right[2])])
        return terms or ()

    out = {}
    for i in range(1, 11):
        for j in range(1, 11):
            vec = [0] * 11
            for ci, ai in _EXPANSIONS[i]:
                for cj, aj in _EXPANSIONS[j]:
                    scale = ci * cj
                    for k, coeff in atom_product(ai, aj):
                        vec[k] = vec[k] + scale * coeff
            out[(i, j)] = vec
    return out


def design_valencies(p) -> list:
    """Valencies of relations 1..10 (index 0 unused)."""
    return [0, 1, p.k1, p.ell1, 1, p.k2, p.ell2, p.S2, p.n2 - p.S2, p.S1, p.n1 - p.S1]


def _derived_tensor(p: SrdParams, check: bool = True) -> StructureTensor:
    vectors = multiplication_vectors(p)
    tensor = np.zeros((11, 11, 11), dtype=np.int64)
    for (i, j), vec in vectors.items():
        for k in range(1, 11):
            if check and vec[k] < 0:
                raise InfeasibleParameters(
                    f"derived intersection number p[{i}][{j}][{k}] = {vec[k]} is negative"
                )
            tensor[i, j, k] = vec[k]
    vals = design_valencies(p)
    if check and any(v < 0 for v in vals[1:]):
        bad = next(i for i in range(1, 11) if vals[i] < 0)
        raise InfeasibleParameters(f"valency v{bad} = {vals[bad]} is negative")
    sigs = tuple([None] + [SIGNATURES_3_2_3[i] for i in range(1, 11)])
    trans = tuple([0] + [TRANSPOSES_3_2_3[i] for i in range(1, 11)])
    return StructureTensor(
        count=10, p=tensor, valencies=tuple(vals), signatures=sigs, transposes=trans
    )


def expected_structure_constants(p: SrdParams) -> StructureTensor:
    """The 10x10x10 tensor a design with parameters ``p`` must have.

    Raises InfeasibleParameters naming the first derived entry that comes
    out negative (integrality holds by construction).
    """
    return _derived_tensor(p, check=True)


def extract_srd_params(c: CoherentConfiguration) -> SrdParams:
    """Read the eighteen design parameters off a canonical configuration.

    Requires the canonical 1..10 layout (apply canonical_relabel first).
    The extracted tuple is cross-checked: its derived tensor must equal the
    counted tensor in every entry, else CoherenceError-grade mismatch is
    reported via InfeasibleParameters.
    """
    if not is_canonical_3_2_3(c):
        raise TypeMismatchError(
            "configuration is not in canonical type-(3,2,3) layout; run "
            "wl_closure and canonical_relabel first"
        )
    t = structure_constants(c)
    srg1 = srg_spectrum(c.n1, t.valency(2), t.entry(2, 2, 2), t.entry(2, 2, 3))
    srg2 = srg_spectrum(c.n2, t.valency(5), t.entry(5, 5, 5), t.entry(5, 5, 6))
    params = SrdParams(
        srg1=srg1,
        srg2=srg2,
        S1=t.valency(9),
        S2=t.valency(7),
        N1=t.entry(2, 7, 7),
        P1=t.entry(2, 7, 8),
        N2=t.entry(5, 9, 9),
        P2=t.entry(5, 9, 10),
        a1=t.entry(9, 7, 5),
        b1=t.entry(9, 7, 6),
        a2=t.entry(7, 9, 2),
        b2=t.entry(7, 9, 3),
    )
    expected = expected_structure_constants(params)
    if not np.array_equal(expected.p, t.p):
        diff = np.argwhere(expected.p != t.p)
        i, j, k = (int(x) for x in diff[0])
        raise InfeasibleParameters(
            f"configuration is not a strongly regular design: counted "
            f"p[{i}][{j}][{k}] = {t.entry(i, j, k)} but parameters force "
            f"{expected.entry(i, j, k)}"
        )
    return params


# -- character table ---------------------------------------------------------


@dataclass(frozen=True)
class CharacterRow:
    """One character of the design algebra, evaluated on relations 1..6."""

    name: str
    values: tuple[QuadValue, ...]
    multiplicity: int

    def value(self, relation: int) -> QuadValue:
        return self.values[relation - 1]

    def evaluate(self, coefficients: dict[int, int]) -> QuadValue:
        """Character value of an integer combination of relations 1..6."""
        acc = QuadValue(0)
        for rel, coeff in coefficients.items():
            acc = acc + self.value(rel) * coeff
        return acc


@dataclass(frozen=True)
class CharacterTable:
    """The four characters of a type-(3,2,3) design algebra.

    Rows: principal (multiplicity 1), paired (the common non-principal
    eigenspace, multiplicity f1 = f2), fiber1 and fiber2 (each vanishing on
    the other fiber).  ``labeling`` records whether the fiber-2 eigenvalues
    were taken in direct (r2, s2) or swapped order to match multiplicities.
    """

    rows: tuple[CharacterRow, ...]
    labeling: str

    def row(self, name: str) -> CharacterRow:
        for row in self.rows:
            if row.name == name:
                return row
        raise KeyError(name)


def choose_labeling(p: SrdParams) -> tuple[str, QuadValue, QuadValue, int]:
    """Fiber-2 eigenvalue labeling making the paired multiplicities equal.

    Returns (labeling, r2, s2, f2) where r2 is the fiber-2 eigenvalue
    paired with r1 (multiplicity f2 = f1).  Tries the direct order first,
    then the swap; raises InfeasibleParameters when neither matches, or
    when both spectra are irrational over different fields.
    """
    s1, s2 = p.srg1, p.srg2
    if s1.conference and s2.conference and s1.r.radicands != s2.r.radicands:
        raise InfeasibleParameters(
            "paired multiplicities cannot match across different quadratic fields"
        )
    if s2.f == s1.f:
        return "direct", s2.r, s2.s, s2.f
    if s2.g == s1.f:
        return "swapped", s2.s, s2.r, s2.g
    raise InfeasibleParameters(
        f"no fiber-2 eigenvalue labeling gives equal paired multiplicities "
        f"(f1={s1.f}, fiber-2 multiplicities {{{s2.f}, {s2.g}}})"
    )


def character_table(p: SrdParams) -> CharacterTable:
    """Exact character table of the design algebra.

    Entries are the eigenvalues of relations 1..6 on the four irreducible
    constituents; multiplicities satisfy 1 + f + g1 = n1 and
    1 + f + g2 = n2.
    """
    labeling, r2, s2, f2 = choose_labeling(p)
    s1 = p.srg1
    one, zero = QuadValue(1), QuadValue(0)
    g2 = p.srg2.f + p.srg2.g - f2
    rows = (
        CharacterRow(
            "principal",
            (one, QuadValue(p.k1), QuadValue(p.ell1), one, QuadValue(p.k2), QuadValue(p.ell2)),
            1,
        ),
        CharacterRow(
            "paired",
            (one, s1.r, -1 - s1.r, one, r2, -1 - r2),
            s1.f,
        ),
        CharacterRow("fiber1", (one, s1.s, -1 - s1.s, zero, zero, zero), s1.g),
        CharacterRow("fiber2", (zero, zero, zero, one, s2, -1 - s2), g2),
    )
    assert 1 + s1.f + s1.g == p.n1 and 1 + f2 + g2 == p.n2
    return CharacterTable(rows, labeling)
