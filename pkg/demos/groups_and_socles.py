"""
Socles and normal generation
============================

For a group G with normal subgroup N, a completely reducible representation
faithful on N exists over characteristic p exactly when p does not divide
|A(G) ∩ N|, and the fewest constituents needed is the number of normal
generators of S(G) ∩ N.
"""

from semirep import as_group, builtin, socle_data, zmud_number
from semirep.grouptheory import minimal_normal_subgroups, normal_subgroups

for expr in ("klein4", "elementary_abelian(2,3)", "symmetric(4)", "alternating(5)", "quaternion8"):
    G = as_group(builtin(expr))
    soc = socle_data(G)
    res = zmud_number(G, G.whole(), 0)
    print(f"{expr:>24}: |A| = {soc.A.order:>2}, |T| = {soc.T.order:>2}, k = {res.k}")

# Relative version inside S_4: every normal subgroup and characteristic
S4 = as_group(builtin("symmetric(4)"))
print("minimal normal subgroups of S_4:", [M.order for M in minimal_normal_subgroups(S4)])
for N in normal_subgroups(S4):
    row = [zmud_number(S4, N, p) for p in (0, 2, 3)]
    print(f"|N| = {N.order:>2}:", ", ".join(f"p={r.p} k={r.k}" for r in row))
