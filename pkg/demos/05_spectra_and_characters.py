"""Exact spectra and the four-row character table.

Eigenvalues of strongly regular graphs are usually integers but can be
quadratic irrationals (conference graphs); everything here stays exact,
including the golden-ratio spectrum of the pentagon.
"""

from srd import QuadValue, character_table, complete_params, srg_spectrum

for tup in [(10, 3, 0, 1), (15, 6, 1, 3), (16, 5, 0, 2), (5, 2, 0, 1)]:
    s = srg_spectrum(*tup)
    trace = QuadValue(s.k) + s.f * s.r + s.g * s.s
    print(f"{s}: r = {s.r}, s = {s.s}, multiplicities f = {s.f}, g = {s.g}; "
          f"k + f*r + g*s = {trace}")

print()
srg = srg_spectrum(15, 6, 1, 3)
params = complete_params(srg, srg, S1=3, N1=2, N2=2)
table = character_table(params)
print(f"character table of the GQ(2,2) design algebra (labeling: {table.labeling})")
print(f"{'row':<10} {'values on relations 1..6':<34} multiplicity")
for row in table.rows:
    values = " ".join(f"{str(v):>4}" for v in row.values)
    print(f"{row.name:<10} {values:<34} {row.multiplicity}")

print()
print("row sums against fiber sizes: 1 + paired + fiber1 =",
      1 + table.row("paired").multiplicity + table.row("fiber1").multiplicity,
      "= n1; 1 + paired + fiber2 =",
      1 + table.row("paired").multiplicity + table.row("fiber2").multiplicity,
      "= n2")

# Mixed fibers can force the swapped eigenvalue pairing.
mixed = complete_params(srg_spectrum(10, 3, 0, 1), srg_spectrum(16, 5, 0, 2), S1=8, N1=3, N2=2)
print()
print(f"mixed tuple {mixed}")
print(f"labeling: {character_table(mixed).labeling} "
      "(fiber-2 eigenvalue of multiplicity 5 pairs with the fiber-1 one)")
