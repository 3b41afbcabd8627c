"""Brute-force verifiers.

Everything here is deliberately naive and shares no algorithmic code with
:mod:`semirep.grouptheory`: subgroups are closed by squaring until stable,
normal subgroups are found by adjoining whole conjugacy classes, and
generation numbers come from unpruned tuple enumeration.  Size guards raise
:class:`TooLarge` instead of truncating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

import numpy as np
from sympy import primefactors

from .core import Semigroup
from .errors import ConsistencyError, NotASemilattice, TooLarge
from .grouptheory import NormalSubgroup, Subgroup, as_group

MAX_GROUP_ORDER = 200
MAX_TUPLES = 10**7


def _conjugacy_classes(G: Subgroup) -> list[frozenset]:
    r = G.parent.rows
    inv = {g: next(h for h in G.carrier if r[g][h] == G.identity) for g in G.carrier}
    out, seen = [], set()
    for x in G.carrier:
        if x not in seen:
            c = frozenset(r[r[g][x]][inv[g]] for g in G.carrier)
            seen |= c
            out.append(c)
    return out


def _close(G: Subgroup, gens) -> frozenset:
    """Naive subgroup closure: keep multiplying all pairs until nothing new appears."""
    r = G.parent.rows
    current = set(gens) | {G.identity}
    while True:
        new = {r[a][b] for a in current for b in current}
        if new <= current:
            return frozenset(current)
        current |= new


@dataclass(frozen=True)
class NormalLattice:
    group: Subgroup = field(repr=False)
    all_normals: tuple[NormalSubgroup, ...]
    leq: np.ndarray = field(repr=False)  # leq[i, j] iff all_normals[i] <= all_normals[j]

    def __len__(self):
        return len(self.all_normals)

    def upper_covers(self, i: int) -> list[int]:
        above = [j for j in range(len(self)) if j != i and self.leq[i, j]]
        return [j for j in above if not any(k != j and self.leq[k, j] for k in above)]

    def lower_covers(self, i: int) -> list[int]:
        below = [j for j in range(len(self)) if j != i and self.leq[j, i]]
        return [j for j in below if not any(k != j and self.leq[j, k] for k in below)]


def all_normal_subgroups(G, max_order: int = MAX_GROUP_ORDER) -> NormalLattice:
    G = as_group(G)
    if G.order > max_order:
        raise TooLarge(f"group of order {G.order} exceeds oracle limit {max_order}")
    classes = _conjugacy_classes(G)
    found = {frozenset([G.identity])}
    frontier = list(found)
    while frontier:
        nxt = []
        for N in frontier:
            for C in classes:
                if not C <= N:
                    M = _close(G, N | C)
                    if M not in found:
                        found.add(M)
                        nxt.append(M)
        frontier = nxt
    normals = sorted(found, key=lambda c: (len(c), sorted(c)))
    leq = np.array([[a <= b for b in normals] for a in normals], dtype=bool)
    return NormalLattice(G, tuple(NormalSubgroup(G, c) for c in normals), leq)


def join_irreducibles(S: Semigroup) -> set[int]:
    """Join irreducible elements of a meet semilattice (x <= y iff x*y = x)."""
    T = S.table
    if not (np.array_equal(T, T.T) and np.array_equal(np.diag(T), np.arange(S.n))):
        raise NotASemilattice("semigroup is not commutative and idempotent")
    leq = T == np.arange(S.n)[:, None]  # leq[x, y] iff x*y == x
    out = set()
    for e in range(S.n):
        below = [x for x in range(S.n) if x != e and leq[x, e]]
        if not below:
            continue  # the minimum is the empty join
        uppers = [u for u in range(S.n) if all(leq[x, u] for x in below)]
        least = [u for u in uppers if all(leq[u, v] for v in uppers)]
        if not least or least[0] != e:
            out.add(e)
    return out


def meet_irreducible_normals(G, lattice: Optional[NormalLattice] = None):
    """Pairs (M, M̄): M has a unique smallest strictly larger normal subgroup M̄."""
    if lattice is None:
        lattice = all_normal_subgroups(G)
    out = []
    for i, M in enumerate(lattice.all_normals):
        covers = lattice.upper_covers(i)
        if len(covers) == 1:
            out.append((M, lattice.all_normals[covers[0]]))
    return out


def join_irreducible_normals(G, lattice: Optional[NormalLattice] = None) -> list[NormalSubgroup]:
    if lattice is None:
        lattice = all_normal_subgroups(G)
    return [M for i, M in enumerate(lattice.all_normals) if len(lattice.lower_covers(i)) == 1]


def dilworth_check(G, lattice: Optional[NormalLattice] = None) -> bool:
    if lattice is None:
        lattice = all_normal_subgroups(G)
    return len(meet_irreducible_normals(G, lattice)) == len(join_irreducible_normals(G, lattice))


def _normal_closure(G: Subgroup, classes, xs) -> frozenset:
    gens = set()
    for x in xs:
        gens |= next(c for c in classes if x in c)
    return _close(G, gens)


def exhaustive_min_normal_gen(G, M, limit: int = MAX_TUPLES) -> int:
    """Smallest k such that some k-tuple of M has normal closure M (no pruning)."""
    G = as_group(G)
    target = frozenset(M.carrier if isinstance(M, NormalSubgroup) else M)
    if len(target) == 1:
        return 0
    classes = _conjugacy_classes(G)
    members = sorted(target)
    k = 1
    while True:
        if len(members) ** k > limit:
            raise TooLarge(f"{len(members)}^{k} tuples exceed the oracle limit {limit}")
        for tup in product(members, repeat=k):
            if _normal_closure(G, classes, tup) == target:
                return k
        k += 1


@dataclass(frozen=True)
class OracleSocle:
    minimal: tuple[frozenset, ...]
    A: frozenset
    T: frozenset
    socle: frozenset


def oracle_socle(G, lattice: Optional[NormalLattice] = None) -> OracleSocle:
    G = as_group(G)
    if lattice is None:
        lattice = all_normal_subgroups(G)
    r = G.parent.rows
    nontrivial = [N.carrier for N in lattice.all_normals if len(N.carrier) > 1]
    minimal = [M for M in nontrivial if not any(K < M for K in nontrivial)]
    abelian = [all(r[a][b] == r[b][a] for a in M for b in M) for M in minimal]
    A = _close(G, set().union(*[M for M, ab in zip(minimal, abelian) if ab]))
    T = _close(G, set().union(*[M for M, ab in zip(minimal, abelian) if not ab]))
    return OracleSocle(tuple(minimal), A, T, _close(G, A | T))


def oracle_p_core(N: Subgroup, p: int) -> frozenset:
    """Union of every normal p-subgroup of N, closed up."""
    lattice = all_normal_subgroups(N)
    pgroups = [M.carrier for M in lattice.all_normals if _is_power_of(len(M.carrier), p)]
    return _close(N, set().union(*pgroups))


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _element_order(G: Subgroup, x: int) -> int:
    r, k, y = G.parent.rows, 1, x
    while y != G.identity:
        y, k = r[y][x], k + 1
    return k


def crosscheck_equivalences(G, N, p: int, limit: int = MAX_TUPLES) -> dict:
    """Independently recompute the generation and existence equivalences.

    Compares, by brute force: the generation number of S(G)∩N; that of
    A(G)∩N (raised to 1 when T(G)∩N is nontrivial); the maximum over Sylow
    pieces of A(G)∩N; and the two existence tests |A(G)∩N| mod p and O_p(N).
    The fast routines from :mod:`semirep.grouptheory` and :mod:`semirep.zmud`
    must agree.  Any mismatch raises ConsistencyError.
    """
    from .grouptheory import min_normal_generators, min_normal_generators_reduced
    from .zmud import faithful_cr_exists

    G = as_group(G)
    N_c = frozenset(N.carrier if isinstance(N, NormalSubgroup) else N)
    soc = oracle_socle(G)
    s_n, a_n, t_n = soc.socle & N_c, soc.A & N_c, soc.T & N_c

    k_s = exhaustive_min_normal_gen(G, s_n, limit)
    k_a = exhaustive_min_normal_gen(G, a_n, limit)
    k_a_adj = max(k_a, 1) if len(t_n) > 1 else k_a
    pieces = {}
    for q in primefactors(len(a_n)):
        piece = frozenset(x for x in a_n if _is_power_of(_element_order(G, x), q))
        pieces[q] = exhaustive_min_normal_gen(G, piece, limit)
    k_sylow = max(pieces.values(), default=0)
    k_sylow_adj = max(k_sylow, 1) if len(t_n) > 1 else k_sylow

    N_group = NormalSubgroup(G, N_c).as_group()
    by_order = p == 0 or len(a_n) % p != 0
    by_core = p == 0 or len(oracle_p_core(N_group, p)) == 1

    k_fast = min_normal_generators(G, s_n)[0]
    k_reduced = min_normal_generators_reduced(G, N_c)
    exists_fast = faithful_cr_exists(G, N_c, p)

    report = {
        "order_G": G.order,
        "order_N": len(N_c),
        "char": p,
        "k_socle": k_s,
        "k_A": k_a,
        "k_A_adjusted": k_a_adj,
        "k_sylow": pieces,
        "k_sylow_adjusted": k_sylow_adj,
        "k_fast": k_fast,
        "k_reduced": k_reduced,
        "exists_by_order": by_order,
        "exists_by_core": by_core,
        "exists_fast": exists_fast,
    }
    ks = {k_s, k_a_adj, k_sylow_adj, k_fast, k_reduced}
    if len(ks) != 1 or len({by_order, by_core, exists_fast}) != 1:
        raise ConsistencyError(f"equivalence mismatch: {report}")
    return report
