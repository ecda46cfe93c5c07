"""The fifteen parameter identities, and the one that was printed wrong.

Every strongly regular design satisfies fifteen arithmetic identities over
its eighteen parameters.  Identity (15) circulated in print with S2 where
an eigenvalue s2 belongs; on the GQ(2,2) tuple the printed form misses
zero by exactly 6, while the corrected form is exact.
"""

from srd import check_equations, complete_params, srg_spectrum
from srd.feasibility import fmt_exact

srg = srg_spectrum(15, 6, 1, 3)
params = complete_params(srg, srg, S1=3, N1=2, N2=2)
print(f"design tuple: {params}")

equations, labeling = check_equations(params, variant15="corrected")
print(f"eigenvalue labeling: {labeling}")
for eq in equations:
    residuals = ", ".join(fmt_exact(r) for r in eq.residuals)
    print(f"({eq.id:>2}) {eq.formula:<58} residual {residuals:<8} "
          f"{'pass' if eq.passed else 'FAIL'}")

print()
print("now with identity (15) as it was originally printed:")
printed, _ = check_equations(params, variant15="as_printed")
e15 = next(e for e in printed if e.id == 15)
print(f"(15) {e15.formula}")
print(f"     residuals {[fmt_exact(r) for r in e15.residuals]} -> "
      f"{'pass' if e15.passed else 'FAIL'}")
print("     (S2 is a valency, always positive; s2 is a negative eigenvalue —")
print("      substituting one for the other shifts the sum by a1*(S2-s2) = 6 here)")
