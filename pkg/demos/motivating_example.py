"""
A semigroup whose group of units is not faithfully represented
===============================================================

S = S_3 ∪ S_3/A_3: the symmetric group sits on top of its quotient by A_3,
which is an ideal.  A faithful completely reducible representation has to be
faithful on the ideal (a copy of Z/2) and, above it, on the part of S_3 that
the ideal cannot see, which is A_3.
"""

from semirep import analyze, builtin, compute_green, obstruction_primes

S = builtin("union_quotient(symmetric(3), alternating(3))")
print(S)
print("labels:", S.labels)

# Two J-classes: the units and the ideal of two cosets
green = compute_green(S)
for J in green.j_classes:
    print(f"J{J.id}:", [S.labels[x] for x in J.elements])

# Each row gives |G_J|, |N_J| and the contribution k_J
report = analyze(S, 0)
for row in report.rows:
    print(row)
print("k_total over C:", report.k_total)

# Characteristic 2 kills the ideal's Z/2, characteristic 3 kills A_3
print("obstruction primes:", sorted(obstruction_primes(S)))
for p in (2, 3, 5):
    r = analyze(S, p)
    print(f"p={p}: exists={r.exists}, k_total={r.k_total}")
