"""
Join irreducibles and meet irreducible normal subgroups
========================================================

For a meet semilattice the minimal number of irreducible constituents is the
number of join irreducible elements.  For Q(G), the semigroup of cosets of
all normal subgroups of G, it is the number of meet irreducible normal
subgroups, as long as the characteristic does not divide a relevant quotient.
"""

from semirep import analyze, build_QG, builtin, oracle
from semirep.constructions import PosetSpec, build_semilattice

# The diamond lattice 0 < a, b < 1
diamond = build_semilattice(PosetSpec(4, ((0, 1), (0, 2), (1, 3), (2, 3))))
print("join irreducibles:", sorted(oracle.join_irreducibles(diamond)))
print("k_total:", analyze(diamond, 0).k_total)

for k in range(4):
    S = builtin(f"boolean({k})")
    print(f"boolean({k}): |S| = {S.n}, k_total = {analyze(S, 0).k_total}")

# Q(G) for a few small groups
for expr in ("cyclic(4)", "klein4", "symmetric(3)", "quaternion8"):
    G = builtin(expr)
    Q = build_QG(G)
    pairs = oracle.meet_irreducible_normals(G)
    print(f"Q({expr}): |Q| = {Q.n}, meet irreducibles = {len(pairs)}, "
          f"k_total = {analyze(Q, 0).k_total}")

# Over F_2, Q(Z/4) has no faithful completely reducible representation
print("Q(Z/4) over F_2:", analyze(build_QG(builtin("cyclic(4)")), 2).exists)
