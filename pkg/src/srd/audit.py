"""Audit of the published multiplication table against derived values.

The historically published table of the ten relation products contains
coefficients that fail the completeness identities (the row sums of a
product must reproduce the valency product).  This module keeps a literal
transcription of that table as data, re-derives every coefficient from the
completeness identities, and reports each symbolic disagreement together
with its numeric value for a given parameter tuple.
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from .theory import SrdParams, multiplication_vectors

_SYMBOL_NAMES = (
    "n1", "k1", "lam1", "mu1", "n2", "k2", "lam2", "mu2",
    "S1", "S2", "N1", "P1", "N2", "P2", "a1", "b1", "a2", "b2",
)


class SymbolicParams:
    """Parameter stand-in whose eighteen attributes are sympy symbols."""

    def __init__(self):
        for name in _SYMBOL_NAMES:
            setattr(self, name, sympy.Symbol(name, integer=True))
        self.ell1 = self.n1 - self.k1 - 1
        self.ell2 = self.n2 - self.k2 - 1


def _transcribed_table(p) -> dict[tuple[int, int], dict[int, object]]:
    """The published product table, copied verbatim (known errors included)."""
    n1, k1, lam1, mu1 = p.n1, p.k1, p.lam1, p.mu1
    n2, k2, lam2, mu2 = p.n2, p.k2, p.lam2, p.mu2
    S1, S2 = p.S1, p.S2
    N1, P1, N2, P2 = p.N1, p.P1, p.N2, p.P2
    a1, b1, a2, b2 = p.a1, p.b1, p.a2, p.b2
    return {
        # fiber-1 square
        (1, 1): {1: 1}, (1, 2): {2: 1}, (1, 3): {3: 1},
        (2, 1): {2: 1},
        (2, 2): {1: k1, 2: lam1, 3: mu1},
        (2, 3): {2: k1 - lam1 - 1, 3: k1 - mu1},
        (3, 1): {3: 1},
        (3, 2): {2: k1 - lam1 - 1, 3: k1 - mu1},
        (3, 3): {1: n1 - k1 - 1, 2: n1 - 2 * k1 + lam1, 3: n1 - 2 * k1 + mu1 - 2},
        # fiber-1 times cross
        (1, 7): {7: 1}, (1, 8): {8: 1},
        (2, 7): {7: N1, 8: P1},
        (2, 8): {7: k1 - N1, 8: k1 - P1},
        (3, 7): {7: S1 - N1 - 1, 8: S1 - P1},
        (3, 8): {7: n1 - S1 - k1 + N1, 8: n1 - S1 - k1 + P1 - 1},
        # fiber-2 square
        (4, 4): {4: 1}, (4, 5): {5: 1}, (4, 6): {6: 1},
        (5, 4): {5: 1},
        (5, 5): {4: k2, 5: lam2, 6: mu2},
        (5, 6): {5: k2 - lam2 - 1, 6: k2 - mu2},
        (6, 4): {6: 1},
        (6, 5): {5: k2 - lam2 - 1, 6: k2 - mu2},
        (6, 6): {4: n2 - k2 - 1, 5: n2 - 2 * k2 + lam2, 6: n2 - 2 * k2 + mu2 - 2},
        # fiber-2 times reverse cross
        (4, 9): {9: 1}, (4, 10): {10: 1},
        (5, 9): {9: N2, 10: P2},
        (5, 10): {9: k2 - N2, 10: k2 - P2},
        (6, 9): {9: S2 - N2 - 1, 10: S2 - P2},
        (6, 10): {9: n2 - k2 - S2 + N2, 10: n2 - k2 - S2 + P2 - 1},
        # cross times fiber-2
        (7, 4): {7: 1}, (8, 4): {8: 1},
        (7, 5): {7: N2, 8: P2},
        (8, 5): {7: k2 - N2, 8: k2 - P2},
        (7, 6): {7: S2 - N2 - 1, 8: S2 - P2},
        (8, 6): {7: n2 - k2 - S2 + N2, 8: n2 - k2 - S2 + P2 - 1},
        # cross times reverse cross (the two bad rows live here)
        (7, 9): {1: S2, 2: a2, 3: b2},
        (7, 10): {2: S2 - a2, 3: S2 - b2},
        (8, 9): {2: S2 - a2, 3: S2 - b2},
        (8, 10): {1: n2 - S2, 2: n2 + a2, 3: n2 + b2},
        # reverse cross times fiber-1
        (9, 1): {9: 1}, (10, 1): {10: 1},
        (9, 2): {9: N1, 10: P1},
        (10, 2): {9: k1 - N1, 10: k1 - P1},
        (9, 3): {9: S1 - N1 - 1, 10: S1 - P1},
        (10, 3): {9: n1 - k1 - S1 + N1, 10: n1 - k1 - S1 + P1 - 1},
        # reverse cross times cross
        (9, 7): {4: S1, 5: a1, 6: b1},
        (9, 8): {5: S1 - a1, 6: S1 - b1},
        (10, 7): {5: S1 - a1, 6: S1 - b1},
        (10, 8): {4: n1 - S1, 5: n1 + a1, 6: n1 + b1},
    }


@dataclass(frozen=True)
class AuditFinding:
    """One coefficient where the published table and the derivation differ."""

    i: int
    j: int
    k: int
    transcribed: str
    derived: str
    transcribed_value: int
    derived_value: int

    def __str__(self) -> str:
        return (
            f"product ({self.i},{self.j}) coefficient of relation {self.k}: "
            f"published {self.transcribed} = {self.transcribed_value}, "
            f"derived {self.derived} = {self.derived_value}"
        )


@dataclass(frozen=True)
class AuditReport:
    """Symbolic comparison of the published table with derived values."""

    findings: tuple[AuditFinding, ...]
    agreement_count: int
    zero_products_consistent: bool
    notes: tuple[str, ...]

    @property
    def clean(self) -> bool:
        return not self.findings


def audit_published_table(params: SrdParams) -> AuditReport:
    """Flag every published coefficient that the derivation contradicts.

    The comparison is symbolic (polynomials in the eighteen parameters), so
    the finding set does not depend on the particular tuple; the numeric
    values for ``params`` are attached to each finding.
    """
    sym = SymbolicParams()
    derived_sym = multiplication_vectors(sym)
    transcribed_sym = _transcribed_table(sym)
    derived_num = multiplication_vectors(params)
    transcribed_num = _transcribed_table(params)

    findings = []
    agreements = 0
    for (i, j), row in sorted(transcribed_sym.items()):
        for k in range(1, 11):
            printed = row.get(k, 0)
            derived = derived_sym[(i, j)][k]
            if sympy.expand(printed - derived) == 0:
                agreements += 1
                continue
            findings.append(
                AuditFinding(
                    i, j, k,
                    transcribed=str(sympy.expand(sympy.sympify(printed))),
                    derived=str(sympy.expand(sympy.sympify(derived))),
                    transcribed_value=int(transcribed_num[(i, j)].get(k, 0)),
                    derived_value=int(derived_num[(i, j)][k]),
                )
            )
    listed = set(transcribed_sym)
    zero_ok = all(
        all(sympy.expand(sympy.sympify(x)) == 0 for x in derived_sym[(i, j)][1:])
        for i in range(1, 11)
        for j in range(1, 11)
        if (i, j) not in listed
    )
    notes = (
        "products not listed in the published table were checked to derive "
        "to zero" + (" (confirmed)" if zero_ok else " (NOT confirmed)"),
        "the historical parameter table of known designs is not reprinted "
        "here, so its reported lambda/mu column order cannot be audited",
    )
    return AuditReport(tuple(findings), agreements, zero_ok, notes)
