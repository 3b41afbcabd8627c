"""Completely reducible representations of a group that are faithful on N ⊴ G.

Characteristic 0 is passed as ``p = 0``.  Only the characteristic matters,
never the particular field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from sympy import isprime, primefactors

from .errors import ConsistencyError, NotPrimeOrZero
from .grouptheory import (
    SocleData,
    Subgroup,
    as_group,
    as_normal,
    intersect_with_normal,
    min_normal_generators,
    min_normal_generators_reduced,
    normal_subgroups,
    p_core,
    socle_data,
)


def check_characteristic(p: int) -> int:
    p = int(p)
    if p != 0 and not isprime(p):
        raise NotPrimeOrZero(f"characteristic must be 0 or a prime, got {p}")
    return p


@dataclass(frozen=True)
class ZmudResult:
    p: int
    exists: bool
    k: Optional[int] = None
    witness: Optional[tuple[int, ...]] = None
    obstruction: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "char": self.p,
            "exists": self.exists,
            "k": self.k,
            "witness": list(self.witness) if self.witness is not None else None,
            "obstruction": self.obstruction,
        }


def faithful_cr_exists(G, N, p: int, soc: Optional[SocleData] = None) -> bool:
    """Whether G has a completely reducible representation faithful on N.

    Decided by p ∤ |A(G)∩N| and confirmed by triviality of O_p(N).
    """
    p = check_characteristic(p)
    G = as_group(G)
    N = as_normal(G, N)
    if p == 0:
        return True
    if soc is None:
        soc = socle_data(G)
    by_order = (soc.A & N).order % p != 0
    by_core = p_core(N.as_group(), p).is_trivial
    if by_order != by_core:
        raise ConsistencyError(
            f"p={p}: |A(G)∩N| test says {by_order}, O_p(N) test says {by_core}"
        )
    return by_order


def zmud_number(G, N, p: int, soc: Optional[SocleData] = None, *, crosscheck=True) -> ZmudResult:
    """Fewest irreducible constituents of a CR representation of G faithful on N.

    The count is the normal generation number of S(G)∩N; when it is computed
    it is also checked against the reduction through Sylow pieces of A(G)∩N.
    """
    p = check_characteristic(p)
    G = as_group(G)
    N = as_normal(G, N)
    if soc is None:
        soc = socle_data(G)
    if not faithful_cr_exists(G, N, p, soc):
        return ZmudResult(p, False, obstruction=p)
    inter = intersect_with_normal(G, soc, N)
    k, witness = min_normal_generators(G, inter.S)
    if crosscheck:
        reduced = min_normal_generators_reduced(G, N, soc)
        if reduced != k:
            raise ConsistencyError(f"direct count {k} != Sylow reduction {reduced}")
    return ZmudResult(p, True, k, witness)


def obstruction_primes(G, N, soc: Optional[SocleData] = None) -> list[int]:
    """Characteristics over which no CR representation of G is faithful on N."""
    G = as_group(G)
    N = as_normal(G, N)
    if soc is None:
        soc = socle_data(G)
    return [int(q) for q in primefactors((soc.A & N).order)]


def gaschutz_check(G, p: int) -> bool:
    """Whether G has a faithful irreducible representation in characteristic p."""
    G = as_group(G)
    if G.order == 1:
        return True
    res = zmud_number(G, G.whole(), p)
    return res.exists and res.k <= 1


def monotonicity_audit(G, soc: Optional[SocleData] = None) -> bool:
    """N1 <= N2 normal implies k(N1) <= k(N2), checked over all pairs.

    An empirical audit rather than a theorem; a violation raises with the
    offending pair.
    """
    G = as_group(G)
    if soc is None:
        soc = socle_data(G)
    normals = normal_subgroups(G)
    ks = [min_normal_generators(G, soc.socle & N)[0] for N in normals]
    for i, N1 in enumerate(normals):
        for j, N2 in enumerate(normals):
            if N1 <= N2 and ks[i] > ks[j]:
                raise ConsistencyError(
                    f"k({N1.sorted})={ks[i]} exceeds k({N2.sorted})={ks[j]}"
                )
    return True
