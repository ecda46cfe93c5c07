"""The fifteen parameter identities and their three verification routes.

Every feasible strongly regular design satisfies identities (1)-(15) over
its eighteen parameters; identity (15) exists in two variants, the
corrected form (default everywhere) and the historically printed form,
kept so its failure can be demonstrated.  The identities are evaluated
directly from the parameters so each residual is attributable; three
independent routes re-confirm them:

    A  the valency-weighted intersection identity p[i][j][k] v_k =
       p[k][j*][i] v_i over all composable triples,
    B  associativity of the right regular representation of the
       ten-dimensional adjacency algebra,
    C  character sums over the two decompositions of the flag products.

All checks are exact; a report never contains a rounded value.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InfeasibleParameters, SpectrumInfeasible
from .exact import Matrix, QuadValue
from .tensor import TRANSPOSES_3_2_3, StructureTensor
from .theory import (
    CharacterTable,
    SrdParams,
    SrgParams,
    _derived_tensor,
    character_table,
    choose_labeling,
    design_valencies,
    expected_structure_constants,
    multiplication_vectors,
    srg_spectrum,
)

VARIANTS = ("corrected", "as_printed")

FORMULAS = {
    1: "f1 = f2",
    2: "n1*S2 = n2*S1",
    3: "P1*(n1-S1) = (k1-N1)*S1",
    4: "a2*k1 = N1*S2",
    5: "b2*ell1 = (S1-N1-1)*S2",
    6: "N1^2+P1*(k1-N1) = k1+lambda1*N1+mu1*(S1-N1-1)",
    7: "N1*P1+P1*(k1-P1) = lambda1*P1+mu1*(S1-P1)",
    8: "N1*a2+P1*(S2-a2) = S2+a2*lambda1+b2*(k1-lambda1-1)",
    9: "N1*b2+P1*(S2-b2) = a2*mu1+b2*(k1-mu1)",
    10: "S1+a1*N2+b1*(S2-N2-1) = S2+a2*N1+b2*(S1-N1-1)",
    11: "a1*P2+b1*(S2-P2) = a2*P1+b2*(S1-P1)",
    12: "P1*(k2-N2) = P2*(k1-N1)",
    13: "S1+a1*k2+b1*ell2 = S2+a2*k1+b2*ell1 = S1*S2",
    14: "S1+a1*r2-b1*(r2+1) = S2+a2*r1-b2*(r1+1)",
    15: "S1+a1*s2-b1*(s2+1) = S2+a2*s1-b2*(s1+1) = 0",
}
FORMULA_15_PRINTED = "S1+a1*S2-b1*(s2+1) = S2+a2*S1-b2*(s1+1) = 0"


def fmt_exact(x) -> str:
    """Decimal string for rationals, a+b√d string for quadratic values."""
    if isinstance(x, QuadValue):
        return str(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


@dataclass(frozen=True)
class EquationResult:
    """One evaluated identity: chained equalities carry several residuals."""

    id: int
    variant: str
    formula: str
    lhs: object
    rhs: tuple
    residuals: tuple
    passed: bool
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "variant": self.variant,
            "lhs": fmt_exact(self.lhs),
            "rhs": [fmt_exact(x) for x in self.rhs],
            "residual": [fmt_exact(x) for x in self.residuals],
            "pass": self.passed,
        }


@dataclass(frozen=True)
class RouteInstance:
    """A named single-entry witness inside a route, tied to an identity."""

    equation: int
    description: str
    lhs: object
    rhs: object
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "equation": self.equation,
            "description": self.description,
            "lhs": fmt_exact(self.lhs),
            "rhs": fmt_exact(self.rhs),
            "pass": self.passed,
        }


@dataclass(frozen=True)
class RouteReport:
    """Outcome of one verification route."""

    name: str
    passed: bool
    checked: int
    first_failure: str | None
    instances: tuple[RouteInstance, ...] = ()
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "first_failure": self.first_failure,
            "instances": [ins.to_json_dict() for ins in self.instances],
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class FeasibilityReport:
    """Verdict plus per-identity and per-route evidence for one tuple."""

    params: SrdParams
    equations: tuple[EquationResult, ...]
    routes: dict[str, RouteReport]
    labeling: str
    integrality: tuple[str, ...]
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "verdict": "pass" if self.passed else "fail",
            "params": self.params.as_dict(),
            "equations": [eq.to_json_dict() for eq in self.equations],
            "routes": {name: rep.to_json_dict() for name, rep in self.routes.items()},
            "labeling": self.labeling,
            "integrality": list(self.integrality),
        }


def _labeled_eigenvalues(p: SrdParams):
    """(labeling, r1, s1, r2, s2, f2) under the multiplicity-matching labeling."""
    labeling, r2, s2, f2 = choose_labeling(p)
    return labeling, p.srg1.r, p.srg1.s, r2, s2, f2


def check_equations(p: SrdParams, variant15: str = "corrected") -> tuple[tuple[EquationResult, ...], str]:
    """Evaluate identities (1)-(15) exactly; returns (results, labeling).

    Identity (15) is evaluated in the requested variant.  If no eigenvalue
    labeling equalises the paired multiplicities, identity (1) is reported
    failed with the reason and (14)/(15) are evaluated under the direct
    labeling.
    """
    if variant15 not in VARIANTS:
        raise ValueError(f"variant15 must be one of {VARIANTS}")
    note = ""
    try:
        labeling, r1, s1, r2, s2, f2 = _labeled_eigenvalues(p)
        eq1_pass = True
    except InfeasibleParameters as exc:
        labeling, note = "direct", str(exc)
        r1, s1, r2, s2, f2 = p.srg1.r, p.srg1.s, p.srg2.r, p.srg2.s, p.srg2.f
        eq1_pass = False

    out = []

    def simple(idx, lhs, rhs):
        out.append(
            EquationResult(idx, "corrected", FORMULAS[idx], lhs, (rhs,), (lhs - rhs,), lhs == rhs)
        )

    f1 = p.srg1.f
    out.append(
        EquationResult(1, "corrected", FORMULAS[1], f1, (f2,), (f1 - f2,), eq1_pass, note)
    )
    simple(2, p.n1 * p.S2, p.n2 * p.S1)
    simple(3, p.P1 * (p.n1 - p.S1), (p.k1 - p.N1) * p.S1)
    simple(4, p.a2 * p.k1, p.N1 * p.S2)
    simple(5, p.b2 * p.ell1, (p.S1 - p.N1 - 1) * p.S2)
    simple(6, p.N1 ** 2 + p.P1 * (p.k1 - p.N1), p.k1 + p.lam1 * p.N1 + p.mu1 * (p.S1 - p.N1 - 1))
    simple(7, p.N1 * p.P1 + p.P1 * (p.k1 - p.P1), p.lam1 * p.P1 + p.mu1 * (p.S1 - p.P1))
    simple(8, p.N1 * p.a2 + p.P1 * (p.S2 - p.a2), p.S2 + p.a2 * p.lam1 + p.b2 * (p.k1 - p.lam1 - 1))
    simple(9, p.N1 * p.b2 + p.P1 * (p.S2 - p.b2), p.a2 * p.mu1 + p.b2 * (p.k1 - p.mu1))
    simple(
        10,
        p.S1 + p.a1 * p.N2 + p.b1 * (p.S2 - p.N2 - 1),
        p.S2 + p.a2 * p.N1 + p.b2 * (p.S1 - p.N1 - 1),
    )
    simple(11, p.a1 * p.P2 + p.b1 * (p.S2 - p.P2), p.a2 * p.P1 + p.b2 * (p.S1 - p.P1))
    simple(12, p.P1 * (p.k2 - p.N2), p.P2 * (p.k1 - p.N1))

    x13 = p.S1 + p.a1 * p.k2 + p.b1 * p.ell2
    y13 = p.S2 + p.a2 * p.k1 + p.b2 * p.ell1
    t13 = p.S1 * p.S2
    out.append(
        EquationResult(
            13, "corrected", FORMULAS[13],
            x13, (y13, t13), (x13 - t13, y13 - t13),
            x13 == t13 and y13 == t13,
        )
    )

    x14 = p.S1 + p.a1 * r2 - p.b1 * (r2 + 1)
    y14 = p.S2 + p.a2 * r1 - p.b2 * (r1 + 1)
    out.append(
        EquationResult(14, "corrected", FORMULAS[14], x14, (y14,), (x14 - y14,), x14 == y14)
    )

    if variant15 == "corrected":
        x15 = p.S1 + p.a1 * s2 - p.b1 * (s2 + 1)
        y15 = p.S2 + p.a2 * s1 - p.b2 * (s1 + 1)
        formula = FORMULAS[15]
    else:
        x15 = p.S1 + p.a1 * p.S2 - p.b1 * (s2 + 1)
        y15 = p.S2 + p.a2 * p.S1 - p.b2 * (s1 + 1)
        formula = FORMULA_15_PRINTED
    zero = QuadValue(0)
    out.append(
        EquationResult(
            15, variant15, formula,
            x15, (y15, zero), (x15, y15),
            x15 == zero and y15 == zero,
        )
    )
    return tuple(out), labeling


# -- route A: intersection-number identity -----------------------------------

_ROUTE_A_INSTANCES = {
    3: (9, 2, 10, "p[9][2][10]*v10 = p[10][2][9]*v9"),
    4: (7, 9, 2, "p[7][9][2]*v2 = p[2][7][7]*v7"),
    5: (7, 9, 3, "p[7][9][3]*v3 = p[3][7][7]*v7"),
}


def route_A_intersection(p: SrdParams) -> RouteReport:
    """Valency-weighted identity over all composable triples of the tensor.

    When the non-negativity gate rejects the derived tensor (possible for
    mutated tuples), the scan still runs on the ungated derivation so every
    failure stays attributable; the gate message is kept as a note.
    """
    notes: tuple[str, ...] = ()
    try:
        tensor = expected_structure_constants(p)
    except InfeasibleParameters as exc:
        tensor = _derived_tensor(p, check=False)
        notes = (f"non-negativity gate failed, scanning ungated derivation: {exc}",)
    violations = tensor.intersection_identity_violations()
    first = None
    if violations:
        i, j, k, lhs, rhs = violations[0]
        first = f"p[{i}][{j}][{k}]*v{k} = {lhs} but p[{k}][{TRANSPOSES_3_2_3[j]}][{i}]*v{i} = {rhs}"
    instances = []
    for eq, (i, j, k, desc) in sorted(_ROUTE_A_INSTANCES.items()):
        jt = TRANSPOSES_3_2_3[j]
        lhs = tensor.entry(i, j, k) * tensor.valency(k)
        rhs = tensor.entry(k, jt, i) * tensor.valency(i)
        instances.append(RouteInstance(eq, desc, lhs, rhs, lhs == rhs))
    return RouteReport(
        name="intersection",
        passed=not violations and not notes and all(ins.passed for ins in instances),
        checked=1000,
        first_failure=first,
        instances=tuple(instances),
        notes=notes,
    )


# -- route B: regular representation ------------------------------------------


@dataclass(frozen=True)
class RegularRep:
    """Right regular representation: relation i -> the 10x10 integer matrix
    of right multiplication by i on the relation basis."""

    matrices: tuple[Matrix, ...]

    def matrix(self, i: int) -> Matrix:
        return self.matrices[i - 1]

    def entry(self, i: int, s: int, t: int) -> int:
        return self.matrix(i).entry(s - 1, t - 1)

    @property
    def identity_consistent(self) -> bool:
        """The two fiber identities together act as the algebra identity."""
        return (self.matrix(1) + self.matrix(4)) == Matrix.identity(10)


def build_regular_representation(tensor: StructureTensor) -> RegularRep:
    mats = []
    for i in range(1, 11):
        mats.append(
            Matrix(10, 10, [tensor.entry(s, i, t) for s in range(1, 11) for t in range(1, 11)])
        )
    return RegularRep(tuple(mats))


_ROUTE_B_ENTRIES = {
    6: (2, 2, 9, 9),
    7: (2, 2, 9, 10),
    8: (7, 9, 2, 2),
    9: (7, 9, 2, 3),
    10: (7, 9, 9, 9),
    11: (7, 9, 9, 10),
    12: (9, 2, 5, 9),
}


def _associativity_first_failure(tensor: StructureTensor) -> str | None:
    """First (i, j, s, t) where M(i)M(j) differs from the p-expansion.

    Entries are bounded by the square of the largest valency, so the
    contraction is exact in 64-bit integers at any desk scale; a magnitude
    guard falls back to arbitrary-precision matrices just in case.
    """
    if int(tensor.p.max()) < 2 ** 20:
        P = tensor.p[1:, 1:, 1:]
        lhs = np.einsum("siu,ujt->ijst", P, P)
        rhs = np.einsum("ijk,skt->ijst", P, P)
        bad = np.argwhere(lhs != rhs)
        if not len(bad):
            return None
        i, j, s, t = (int(x) + 1 for x in bad[0])
        return (
            f"(M({i})M({j}))[{s}][{t}] = {int(lhs[i - 1, j - 1, s - 1, t - 1])} "
            f"but expansion gives {int(rhs[i - 1, j - 1, s - 1, t - 1])}"
        )
    rep = build_regular_representation(tensor)
    for i in range(1, 11):
        for j in range(1, 11):
            lhs_m = rep.matrix(i) @ rep.matrix(j)
            rhs_m = Matrix.zeros(10, 10)
            for k in range(1, 11):
                coeff = tensor.entry(i, j, k)
                if coeff:
                    rhs_m = rhs_m + coeff * rep.matrix(k)
            if lhs_m != rhs_m:
                s, t = next(
                    (s, t)
                    for s in range(10)
                    for t in range(10)
                    if lhs_m.entry(s, t) != rhs_m.entry(s, t)
                )
                return (
                    f"(M({i})M({j}))[{s + 1}][{t + 1}] = {lhs_m.entry(s, t)} "
                    f"but expansion gives {rhs_m.entry(s, t)}"
                )
    return None


def route_B_regular_rep(p: SrdParams) -> RouteReport:
    """Full associativity of the regular representation, exactly.

    Checks M(i) M(j) = sum_k p[i][j][k] M(k) for every ordered pair and
    reports the seven named matrix entries individually, each mapped to the
    identity it witnesses.  The named entries are recomputed independently
    with arbitrary-precision matrices.
    """
    tensor = expected_structure_constants(p)
    rep = build_regular_representation(tensor)
    first = _associativity_first_failure(tensor)
    checked = 100
    instances = []
    for eq, (i, j, s, t) in sorted(_ROUTE_B_ENTRIES.items()):
        lhs = sum(rep.entry(i, s, u) * rep.entry(j, u, t) for u in range(1, 11))
        rhs = sum(tensor.entry(i, j, k) * rep.entry(k, s, t) for k in range(1, 11))
        instances.append(
            RouteInstance(eq, f"(M({i})M({j}))[{s}][{t}]", lhs, rhs, lhs == rhs)
        )
    return RouteReport(
        name="regular-representation",
        passed=first is None and all(ins.passed for ins in instances),
        checked=checked,
        first_failure=first,
        instances=tuple(instances),
        notes=("products expanded over the full 10-relation basis",),
    )


# -- route C: characters -------------------------------------------------------

_ROW_EQUATION = {"principal": 13, "paired": 14, "fiber1": 15, "fiber2": 15}


def route_C_characters(p: SrdParams) -> RouteReport:
    """Character values of the two flag-product decompositions must agree.

    Each character row is evaluated on both decompositions (over fiber-1
    relations and over fiber-2 relations); the two fiber-local rows must
    additionally vanish.
    """
    table = character_table(p)
    forward = {1: p.S2, 2: p.a2, 3: p.b2}
    backward = {4: p.S1, 5: p.a1, 6: p.b1}
    instances = []
    for row in table.rows:
        lhs = row.evaluate(forward)
        rhs = row.evaluate(backward)
        ok = lhs == rhs
        if row.name in ("fiber1", "fiber2"):
            ok = ok and lhs.is_zero and rhs.is_zero
        instances.append(
            RouteInstance(
                _ROW_EQUATION[row.name],
                f"{row.name} character on both flag products",
                lhs, rhs, ok,
            )
        )
    failures = [ins for ins in instances if not ins.passed]
    first = None
    if failures:
        ins = failures[0]
        first = f"{ins.description}: {fmt_exact(ins.lhs)} vs {fmt_exact(ins.rhs)}"
    return RouteReport(
        name="characters",
        passed=not failures,
        checked=len(instances),
        first_failure=first,
        instances=tuple(instances),
        notes=(f"labeling: {table.labeling}",),
    )


ROUTE_RUNNERS = {
    "A": route_A_intersection,
    "B": route_B_regular_rep,
    "C": route_C_characters,
}


def check_params(
    p: SrdParams,
    variant15: str = "corrected",
    routes: tuple[str, ...] = ("A", "B", "C"),
) -> FeasibilityReport:
    """Evaluate the identities plus the requested routes; exact verdict."""
    equations, labeling = check_equations(p, variant15)
    integrality = []
    for label, srg in (("fiber 1", p.srg1), ("fiber 2", p.srg2)):
        kind = "conference (irrational eigenvalues)" if srg.conference else "rational eigenvalues"
        integrality.append(f"{label} {srg}: {kind}, multiplicities f={srg.f}, g={srg.g}")
    try:
        expected_structure_constants(p)
        integrality.append("derived tensor entries are all non-negative integers")
        tensor_ok = True
    except InfeasibleParameters as exc:
        integrality.append(str(exc))
        tensor_ok = False
    route_reports: dict[str, RouteReport] = {}
    for name in routes:
        runner = ROUTE_RUNNERS[name]
        try:
            route_reports[name] = runner(p)
        except InfeasibleParameters as exc:
            route_reports[name] = RouteReport(
                name={"A": "intersection", "B": "regular-representation", "C": "characters"}[name],
                passed=False,
                checked=0,
                first_failure=str(exc),
            )
    passed = (
        all(eq.passed for eq in equations)
        and tensor_ok
        and all(rep.passed for rep in route_reports.values())
    )
    return FeasibilityReport(
        params=p,
        equations=equations,
        routes=route_reports,
        labeling=labeling,
        integrality=tuple(integrality),
        passed=passed,
    )


# -- completion and enumeration -------------------------------------------------


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise InfeasibleParameters(f"{what}: {num} is not divisible by {den}")
    return num // den


def complete_params(srg1: SrgParams, srg2: SrgParams, S1: int, N1: int, N2: int) -> SrdParams:
    """Fill in S2, P1, P2, a1, a2, b1, b2 from the divisibility identities.

    S2 comes from (2), P1/a2/b2 from (3)/(4)/(5), and P2/a1/b1 from their
    fiber-swapped counterparts.  Raises InfeasibleParameters naming the
    failing identity.
    """
    n1, k1, ell1 = srg1.n, srg1.k, srg1.ell
    n2, k2, ell2 = srg2.n, srg2.k, srg2.ell
    if not 0 < S1 < n1:
        raise InfeasibleParameters(f"need 0 < S1 < n1, got S1={S1}")
    S2 = _exact_div(n2 * S1, n1, "identity (2) n1*S2 = n2*S1")
    if not 0 < S2 < n2:
        raise InfeasibleParameters(f"identity (2) forces S2={S2}, outside 0..n2")
    if N1 > S1 - 1:
        raise InfeasibleParameters("identity (5) forces b2 < 0 when N1 > S1-1")
    if N2 > S2 - 1:
        raise InfeasibleParameters("swapped identity (5) forces b1 < 0 when N2 > S2-1")
    P1 = _exact_div((k1 - N1) * S1, n1 - S1, "identity (3) P1*(n1-S1) = (k1-N1)*S1")
    a2 = _exact_div(N1 * S2, k1, "identity (4) a2*k1 = N1*S2")
    b2 = _exact_div((S1 - N1 - 1) * S2, ell1, "identity (5) b2*ell1 = (S1-N1-1)*S2")
    P2 = _exact_div((k2 - N2) * S2, n2 - S2, "swapped identity (3) P2*(n2-S2) = (k2-N2)*S2")
    a1 = _exact_div(N2 * S1, k2, "swapped identity (4) a1*k2 = N2*S1")
    b1 = _exact_div((S2 - N2 - 1) * S1, ell2, "swapped identity (5) b1*ell2 = (S2-N2-1)*S1")
    if min(P1, P2, a1, a2, b1, b2) < 0 or N1 > k1 or N2 > k2:
        raise InfeasibleParameters("completion produced a negative parameter")
    return SrdParams(
        srg1=srg1, srg2=srg2, S1=S1, S2=S2,
        N1=N1, P1=P1, N2=N2, P2=P2, a1=a1, b1=b1, a2=a2, b2=b2,
    )


def feasible_srg_params(max_n: int) -> list[SrgParams]:
    """All arithmetically feasible SRG parameter tuples with n <= max_n.

    Feasibility is parameter-level (counting identity plus integral or
    conference multiplicities); graph existence is not decided here.
    """
    out = []
    for n in range(5, max_n + 1):
        for k in range(1, n - 1):
            for lam in range(0, k):
                num = k * (k - lam - 1)
                if num % (n - k - 1):
                    continue
                mu = num // (n - k - 1)
                if not 0 < mu <= k:
                    continue
                try:
                    out.append(srg_spectrum(n, k, lam, mu))
                except InfeasibleParameters:
                    continue
    return out


def enumerate_feasible(max_n1: int, max_n2: int) -> list[tuple[SrdParams, FeasibilityReport]]:
    """All design tuples within bounds passing every corrected identity.

    Scans ordered pairs of feasible SRG parameter tuples, all S1 compatible
    with identity (2) and all N1, N2 in range; keeps tuples surviving
    completion, tensor non-negativity and identities (1)-(15) (corrected).
    Output is sorted lexicographically by the eighteen-integer tuple and is
    identical across runs.
    """
    if max_n1 < 1 or max_n2 < 1:
        raise ValueError("bounds must be at least 1")
    fibers1 = feasible_srg_params(max_n1)
    fibers2 = feasible_srg_params(max_n2)
    results = []
    for srg1 in fibers1:
        for srg2 in fibers2:
            n1, n2 = srg1.n, srg2.n
            for S1 in range(1, n1):
                if (n2 * S1) % n1:
                    continue
                S2 = n2 * S1 // n1
                if not 0 < S2 < n2:
                    continue
                for N1 in range(0, min(srg1.k, S1 - 1) + 1):
                    if ((srg1.k - N1) * S1) % (n1 - S1) or (N1 * S2) % srg1.k:
                        continue
                    if ((S1 - N1 - 1) * S2) % srg1.ell:
                        continue
                    for N2 in range(0, min(srg2.k, S2 - 1) + 1):
                        try:
                            params = complete_params(srg1, srg2, S1, N1, N2)
                        except InfeasibleParameters:
                            continue
                        try:
                            expected_structure_constants(params)
                        except InfeasibleParameters:
                            continue
                        equations, _ = check_equations(params, "corrected")
                        if not all(eq.passed for eq in equations):
                            continue
                        results.append(params)
    results.sort(key=lambda p: p.as_tuple())
    return [(p, check_params(p)) for p in results]


# -- documented mutations ---------------------------------------------------------


@dataclass(frozen=True)
class Mutation:
    """A single-field perturbation documented to break one identity.

    ``witness`` names where the failure shows up: the identity's own
    residual for (2), a route-A instance for (3)-(5), a route-B matrix
    entry for (6)-(12).  Dependent fields are deliberately not re-derived.
    """

    equation: int
    field: str
    delta: int
    witness: str


MUTATIONS = {
    2: Mutation(2, "S1", +1, "residual of identity (2) itself"),
    3: Mutation(3, "P1", +1, "route A instance p[9][2][10]*v10 = p[10][2][9]*v9"),
    4: Mutation(4, "a2", +1, "route A instance p[7][9][2]*v2 = p[2][7][7]*v7"),
    5: Mutation(5, "b2", +1, "route A instance p[7][9][3]*v3 = p[3][7][7]*v7"),
    6: Mutation(6, "lam1", +1, "route B entry (M(2)M(2))[9][9]"),
    7: Mutation(7, "mu1", +1, "route B entry (M(2)M(2))[9][10]"),
    8: Mutation(8, "N1", -1, "route B entry (M(7)M(9))[2][2]"),
    9: Mutation(9, "S2", +1, "route B entry (M(7)M(9))[2][3]"),
    10: Mutation(10, "N2", -1, "route B entry (M(7)M(9))[9][9]"),
    11: Mutation(11, "P2", +1, "route B entry (M(7)M(9))[9][10]"),
    12: Mutation(12, "k2", +1, "route B entry (M(9)M(2))[5][9]"),
}

_SRG1_FIELDS = {"n1": "n", "k1": "k", "lam1": "lam", "mu1": "mu"}
_SRG2_FIELDS = {"n2": "n", "k2": "k", "lam2": "lam", "mu2": "mu"}


def mutate_params(p: SrdParams, field: str, delta: int) -> SrdParams:
    """Perturb one parameter field without re-deriving anything else.

    Spectra of a mutated fiber go stale on purpose; the tensor and route
    machinery only read the raw fields.
    """
    if field in _SRG1_FIELDS:
        srg = dataclasses.replace(p.srg1, **{_SRG1_FIELDS[field]: getattr(p.srg1, _SRG1_FIELDS[field]) + delta})
        return dataclasses.replace(p, srg1=srg)
    if field in _SRG2_FIELDS:
        srg = dataclasses.replace(p.srg2, **{_SRG2_FIELDS[field]: getattr(p.srg2, _SRG2_FIELDS[field]) + delta})
        return dataclasses.replace(p, srg2=srg)
    return dataclasses.replace(p, **{field: getattr(p, field) + delta})


# -- JSON parameter interface -----------------------------------------------------

_REQUIRED_KEYS = (
    "n1", "k1", "lambda1", "mu1", "n2", "k2", "lambda2", "mu2", "S1", "S2", "N1", "N2",
)
_DERIVABLE_KEYS = ("P1", "P2", "a1", "a2", "b1", "b2")


def params_from_dict(data: dict) -> SrdParams:
    """Build SrdParams from the JSON object form.

    The derivable fields P1, P2, a1, a2, b1, b2 may be omitted and are then
    computed from identities (3), (4), (5) and their fiber-swapped
    counterparts; supplied values conflicting with the derived ones are a
    ValueError (malformed input).  Spectrum infeasibility raises
    SpectrumInfeasible; divisibility failures raise InfeasibleParameters.
    """
    if not isinstance(data, dict):
        raise ValueError("parameter JSON must be an object")
    unknown = set(data) - set(_REQUIRED_KEYS) - set(_DERIVABLE_KEYS)
    if unknown:
        raise ValueError(f"unknown parameter keys: {sorted(unknown)}")
    missing = [k for k in _REQUIRED_KEYS if k not in data]
    if missing:
        raise ValueError(f"missing parameter keys: {missing}")
    for key, value in data.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"parameter {key} must be an integer, got {value!r}")
    try:
        srg1 = srg_spectrum(data["n1"], data["k1"], data["lambda1"], data["mu1"])
    except InfeasibleParameters as exc:
        raise SpectrumInfeasible(f"fiber 1: {exc}") from exc
    try:
        srg2 = srg_spectrum(data["n2"], data["k2"], data["lambda2"], data["mu2"])
    except InfeasibleParameters as exc:
        raise SpectrumInfeasible(f"fiber 2: {exc}") from exc
    S1, S2, N1, N2 = data["S1"], data["S2"], data["N1"], data["N2"]
    if not 0 < S1 < srg1.n or not 0 < S2 < srg2.n:
        raise InfeasibleParameters("flag valencies must satisfy 0 < S1 < n1 and 0 < S2 < n2")
    if N1 > S1 - 1 or N2 > S2 - 1:
        raise InfeasibleParameters("identity (5) forces a negative parameter when N >= S")
    derived = {
        "P1": _exact_div((srg1.k - N1) * S1, srg1.n - S1, "identity (3) P1*(n1-S1) = (k1-N1)*S1"),
        "a2": _exact_div(N1 * S2, srg1.k, "identity (4) a2*k1 = N1*S2"),
        "b2": _exact_div((S1 - N1 - 1) * S2, srg1.ell, "identity (5) b2*ell1 = (S1-N1-1)*S2"),
        "P2": _exact_div((srg2.k - N2) * S2, srg2.n - S2, "swapped identity (3) P2*(n2-S2) = (k2-N2)*S2"),
        "a1": _exact_div(N2 * S1, srg2.k, "swapped identity (4) a1*k2 = N2*S1"),
        "b1": _exact_div((S2 - N2 - 1) * S1, srg2.ell, "swapped identity (5) b1*ell2 = (S2-N2-1)*S1"),
    }
    for key in _DERIVABLE_KEYS:
        if key in data and data[key] != derived[key]:
            raise ValueError(
                f"supplied {key}={data[key]} conflicts with derived {key}={derived[key]}"
            )
    return SrdParams(srg1=srg1, srg2=srg2, S1=S1, S2=S2, N1=N1, N2=N2, **derived)


def load_params_json(text: str) -> SrdParams:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from exc
    return params_from_dict(data)
