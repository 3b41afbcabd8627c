"""Table-driven group theory on subgroups of a Cayley table.

A group is a set of element indices of some parent :class:`Semigroup` that
forms a group under the parent's multiplication.  Normal subgroups are
explicit element sets; no permutation-group machinery is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from sympy import primefactors

from .core import Semigroup
from .errors import (
    ConsistencyError,
    ElementOutsideGroup,
    NoIdentity,
    NoInverse,
    NotAbelian,
    NotClosed,
    NotElementaryAbelian,
    NotNormal,
)


class Subgroup:
    """A group carried by a subset of a semigroup's elements."""

    def __init__(self, parent: Semigroup, carrier: Iterable[int], identity: int, inverse_of: dict):
        self.parent = parent
        self.carrier = tuple(sorted(carrier))
        self.identity = identity
        self.inverse_of = inverse_of
        self._rows = parent.rows
        self._closures: dict[int, frozenset] = {}

    def __repr__(self):
        return f"Subgroup(order={self.order}, identity={self.identity})"

    def __len__(self):
        return len(self.carrier)

    def __iter__(self):
        return iter(self.carrier)

    def __contains__(self, x):
        return x in self.elements

    @cached_property
    def elements(self) -> frozenset:
        return frozenset(self.carrier)

    @property
    def order(self) -> int:
        return len(self.carrier)

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def inv(self, a: int) -> int:
        return self.inverse_of[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        r = self._rows
        return r[r[g][x]][self.inverse_of[g]]

    def commutator(self, x: int, y: int) -> int:
        r, inv = self._rows, self.inverse_of
        return r[r[r[x][y]][inv[x]]][inv[y]]

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self._rows[y][x]
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        r = self._rows
        return all(r[a][b] == r[b][a] for a, b in combinations(self.carrier, 2))

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        seen: set[int] = set()
        out = []
        for x in self.carrier:
            if x in seen:
                continue
            cls = sorted({self.conj(g, x) for g in self.carrier})
            seen.update(cls)
            out.append(tuple(cls))
        return tuple(out)

    @cached_property
    def class_of(self) -> dict[int, tuple[int, ...]]:
        return {x: c for c in self.conjugacy_classes for x in c}

    def whole(self) -> "NormalSubgroup":
        return NormalSubgroup(self, self.elements)

    def trivial(self) -> "NormalSubgroup":
        return NormalSubgroup(self, frozenset([self.identity]))


@dataclass(frozen=True)
class NormalSubgroup:
    group: Subgroup = field(repr=False, compare=False)
    carrier: frozenset

    @property
    def order(self) -> int:
        return len(self.carrier)

    @property
    def is_trivial(self) -> bool:
        return len(self.carrier) == 1

    def __len__(self):
        return len(self.carrier)

    def __contains__(self, x):
        return x in self.carrier

    def __le__(self, other: "NormalSubgroup") -> bool:
        return self.carrier <= other.carrier

    def __lt__(self, other: "NormalSubgroup") -> bool:
        return self.carrier < other.carrier

    def __and__(self, other: "NormalSubgroup") -> "NormalSubgroup":
        return NormalSubgroup(self.group, self.carrier & other.carrier)

    @property
    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.carrier))

    @cached_property
    def is_abelian(self) -> bool:
        r = self.group.parent.rows
        return all(r[a][b] == r[b][a] for a, b in combinations(self.sorted, 2))

    def as_group(self) -> Subgroup:
        G = self.group
        return Subgroup(G.parent, self.carrier, G.identity, {x: G.inverse_of[x] for x in self.carrier})


def verify_group(S: Semigroup, carrier: Iterable[int]) -> Subgroup:
    """Check that ``carrier`` is a group under S's product and wrap it."""
    carrier = sorted(set(int(x) for x in carrier))
    if not carrier:
        raise NoIdentity("empty carrier")
    r = S.rows
    members = set(carrier)
    for a in carrier:
        for b in carrier:
            if r[a][b] not in members:
                raise NotClosed(f"{a}*{b} = {r[a][b]} leaves the carrier")
    identity = next(
        (e for e in carrier if all(r[e][x] == x == r[x][e] for x in carrier)), None
    )
    if identity is None:
        raise NoIdentity("no two-sided identity in the carrier")
    inverse_of = {}
    for a in carrier:
        b = next((b for b in carrier if r[a][b] == identity == r[b][a]), None)
        if b is None:
            raise NoInverse(f"{a} has no inverse in the carrier")
        inverse_of[a] = b
    return Subgroup(S, carrier, identity, inverse_of)


def as_group(obj) -> Subgroup:
    """Coerce a Semigroup that is a group, or a carrier-bearing object, to a Subgroup."""
    if isinstance(obj, Subgroup):
        return obj
    if isinstance(obj, Semigroup):
        return verify_group(obj, range(obj.n))
    if isinstance(obj, NormalSubgroup):
        return obj.as_group()
    raise TypeError(f"cannot interpret {type(obj).__name__} as a group")


def _check_inside(G: Subgroup, X: Iterable[int]) -> list[int]:
    X = list(X)
    for x in X:
        if x not in G.elements:
            raise ElementOutsideGroup(f"element {x} is not in the group")
    return X


def generated_by(G: Subgroup, gens: Iterable[int]) -> frozenset:
    """Subgroup generated by ``gens`` (finite group: right-multiplication closure)."""
    gens = list(set(gens))
    r = G.parent.rows
    members = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for m in frontier:
            row = r[m]
            for g in gens:
                y = row[g]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(members)


def normal_closure(G: Subgroup, X: Iterable[int]) -> NormalSubgroup:
    X = _check_inside(G, X)
    if len(X) == 1 and X[0] in G._closures:
        return NormalSubgroup(G, G._closures[X[0]])
    gens = set()
    for x in X:
        gens.update(G.class_of[x])
    out = generated_by(G, gens)
    if len(X) == 1:
        G._closures[X[0]] = out
    return NormalSubgroup(G, out)


def product_set(G: Subgroup, A: Iterable[int], B: Iterable[int]) -> frozenset:
    r = G.parent.rows
    B = list(B)
    return frozenset(r[a][b] for a in A for b in B)


def join(G: Subgroup, *normals: NormalSubgroup) -> NormalSubgroup:
    """Join of normal subgroups, computed as their product set."""
    acc = frozenset([G.identity])
    for N in normals:
        if not N.carrier <= acc:
            acc = product_set(G, acc, N.carrier)
    return NormalSubgroup(G, acc)


def is_normal(G: Subgroup, carrier: Iterable[int]) -> bool:
    carrier = frozenset(carrier)
    if G.identity not in carrier or not carrier <= G.elements:
        return False
    r = G.parent.rows
    if any(r[a][b] not in carrier for a in carrier for b in carrier):
        return False
    return all(G.conj(g, x) in carrier for x in carrier for g in G.carrier)


def as_normal(G: Subgroup, N) -> NormalSubgroup:
    """Accept a NormalSubgroup or an iterable of elements; audit normality."""
    carrier = N.carrier if isinstance(N, NormalSubgroup) else frozenset(int(x) for x in N)
    if not is_normal(G, carrier):
        raise NotNormal("subset is not a normal subgroup of the group")
    return NormalSubgroup(G, frozenset(carrier))


def center(G: Subgroup, H: Optional[NormalSubgroup] = None) -> NormalSubgroup:
    """Center of H (H = G by default)."""
    H_el = G.carrier if H is None else sorted(H.carrier)
    r = G.parent.rows
    z = frozenset(x for x in H_el if all(r[x][y] == r[y][x] for y in H_el))
    return NormalSubgroup(G, z)


def normal_subgroups(G: Subgroup) -> list[NormalSubgroup]:
    """All normal subgroups, as joins of normal closures of single elements.

    Sorted by order, then by sorted element tuple.
    """
    principal = {normal_closure(G, [c[0]]).carrier for c in G.conjugacy_classes}
    found = set(principal)
    frontier = list(found)
    while frontier:
        nxt = []
        for N in frontier:
            for P in principal:
                if not P <= N:
                    M = product_set(G, N, P)
                    if M not in found:
                        found.add(M)
                        nxt.append(M)
        frontier = nxt
    return sorted((NormalSubgroup(G, c) for c in found), key=lambda N: (N.order, N.sorted))


def minimal_normal_subgroups(G: Subgroup) -> list[NormalSubgroup]:
    """Minimal nontrivial normal subgroups, sorted by (order, elements).

    A minimal normal subgroup is the normal closure of each of its nontrivial
    elements, so the minimal members among single-element closures are exactly
    the minimal normal subgroups.
    """
    closures = {
        normal_closure(G, [c[0]]).carrier
        for c in G.conjugacy_classes
        if c[0] != G.identity
    }
    minimal = [C for C in closures if not any(D < C for D in closures)]
    return sorted((NormalSubgroup(G, c) for c in minimal), key=lambda N: (N.order, N.sorted))


@dataclass(frozen=True)
class SocleData:
    minimal_normals: tuple[NormalSubgroup, ...]
    abelian: tuple[bool, ...]
    A: NormalSubgroup
    T: NormalSubgroup
    socle: NormalSubgroup

    @property
    def nonabelian_factors(self) -> list[NormalSubgroup]:
        return [M for M, ab in zip(self.minimal_normals, self.abelian) if not ab]

    @property
    def abelian_factors(self) -> list[NormalSubgroup]:
        return [M for M, ab in zip(self.minimal_normals, self.abelian) if ab]


def socle_data(G: Subgroup) -> SocleData:
    """A(G), T(G) and S(G) = A(G) x T(G), with the direct-product audits."""
    G = as_group(G)
    mins = minimal_normal_subgroups(G)
    tags = tuple(M.is_abelian for M in mins)
    A = join(G, *[M for M, ab in zip(mins, tags) if ab])
    T = join(G, *[M for M, ab in zip(mins, tags) if not ab])
    soc = join(G, A, T)
    if (A & T).order != 1:
        raise ConsistencyError("A(G) and T(G) intersect nontrivially")
    if soc.order != A.order * T.order:
        raise ConsistencyError("|S(G)| != |A(G)| * |T(G)|")
    if not A.is_abelian:
        raise ConsistencyError("A(G) is not abelian")
    if center(G, T).order != 1:
        raise ConsistencyError("Z(T(G)) is nontrivial")
    return SocleData(tuple(mins), tags, A, T, soc)


def complement_audit(G: Subgroup, normals: Optional[Sequence[NormalSubgroup]] = None) -> bool:
    """Every minimal normal M and normal N satisfy M <= N or M & N = 1."""
    G = as_group(G)
    if normals is None:
        normals = normal_subgroups(G)
    for M in minimal_normal_subgroups(G):
        for N in normals:
            if not (M <= N or (M & N).is_trivial):
                raise ConsistencyError(f"minimal normal {M.sorted} meets {N.sorted} partially")
    return True


@dataclass(frozen=True)
class SocleIntersection:
    A: NormalSubgroup
    T: NormalSubgroup
    S: NormalSubgroup
    t_factors: tuple[int, ...]  # indices into SocleData.nonabelian_factors


def intersect_with_normal(G: Subgroup, soc: SocleData, N) -> SocleIntersection:
    N = as_normal(G, N)
    a, t, s = soc.A & N, soc.T & N, soc.socle & N
    if s.order != a.order * t.order or product_set(G, a.carrier, t.carrier) != s.carrier:
        raise ConsistencyError("S(G)∩N is not (A(G)∩N) x (T(G)∩N)")
    factors = soc.nonabelian_factors
    inside = tuple(i for i, M in enumerate(factors) if M <= N)
    if join(G, *[factors[i] for i in inside]).carrier != t.carrier:
        raise ConsistencyError("T(G)∩N is not a product of minimal normal subgroups")
    return SocleIntersection(a, t, s, inside)


@dataclass(frozen=True)
class SylowPiece:
    p: int
    carrier: NormalSubgroup

    @property
    def order(self) -> int:
        return self.carrier.order


def sylow_decompose(G: Subgroup, A: NormalSubgroup, *, elementary=True) -> list[SylowPiece]:
    """Split an abelian normal subgroup into its Sylow subgroups.

    With ``elementary`` (the default) each piece must be elementary abelian,
    as happens for subgroups of A(G).
    """
    if not A.is_abelian:
        raise NotAbelian("Sylow decomposition needs an abelian subgroup")
    if not is_normal(G, A.carrier):
        raise NotNormal("subgroup is not normal")
    orders = {x: G.element_order(x) for x in A.carrier}
    pieces = []
    for p in primefactors(A.order):
        piece = frozenset(x for x, o in orders.items() if set(primefactors(o)) <= {p})
        if elementary and any(orders[x] not in (1, p) for x in piece):
            raise NotElementaryAbelian(f"Sylow {p}-subgroup is not elementary abelian")
        if not is_normal(G, piece):
            raise ConsistencyError(f"Sylow {p}-piece is not normal")
        pieces.append(SylowPiece(int(p), NormalSubgroup(G, piece)))
    if pieces and join(G, *[P.carrier for P in pieces]).carrier != A.carrier:
        raise ConsistencyError("Sylow pieces do not generate the subgroup")
    return pieces


def _is_p_group(order: int, p: int) -> bool:
    return order == 1 or primefactors(order) == [p]


def p_core(N: Subgroup, p: int) -> NormalSubgroup:
    """O_p(N), the largest normal p-subgroup of N.

    Joins the normal closures (within N) that are p-groups until nothing
    changes; the result is the product of all normal p-subgroups.
    """
    N = as_group(N)
    pieces = []
    for c in N.conjugacy_classes:
        C = normal_closure(N, [c[0]])
        if _is_p_group(C.order, p):
            pieces.append(C)
    core = join(N, *pieces)
    while True:
        bigger = join(N, core, *[P for P in pieces if not P <= core])
        if bigger.carrier == core.carrier:
            break
        core = bigger
    if not _is_p_group(core.order, p):
        raise ConsistencyError(f"O_{p} has order {core.order}")
    return core


def min_normal_generators(G: Subgroup, M) -> tuple[int, tuple[int, ...]]:
    """Smallest k such that M is the normal closure of k elements.

    Iterative deepening on k.  The first coordinate ranges over G-conjugacy
    class representatives inside M, later coordinates over elements of M not
    yet in the partial closure.  Returns ``(k, witness)`` where the witness is
    the first successful tuple in increasing index order.
    """
    M = as_normal(G, M)
    if M.is_trivial:
        return 0, ()
    target = M.carrier
    reps = [c[0] for c in G.conjugacy_classes if c[0] in target and c[0] != G.identity]
    members = sorted(target)
    joins: dict[tuple[frozenset, int], frozenset] = {}

    def extend(current: frozenset, x: int) -> frozenset:
        key = (current, x)
        if key not in joins:
            joins[key] = join(G, NormalSubgroup(G, current), normal_closure(G, [x])).carrier
        return joins[key]

    dead: set[tuple[frozenset, int]] = set()

    def search(current: frozenset, depth: int, prefix: tuple) -> Optional[tuple]:
        if current == target:
            return prefix
        if depth == 0 or (current, depth) in dead:
            return None
        for x in members:
            if x in current:
                continue
            found = search(extend(current, x), depth - 1, prefix + (x,))
            if found is not None:
                return found
        dead.add((current, depth))
        return None

    k = 1
    while True:
        for x in reps:
            found = search(normal_closure(G, [x]).carrier, k - 1, (x,))
            if found is not None:
                return k, found
        k += 1


def min_normal_generators_reduced(G: Subgroup, N, soc: Optional[SocleData] = None) -> int:
    """Normal generation number of S(G)∩N via its Sylow pieces.

    Takes the maximum over the Sylow pieces of A(G)∩N and raises the result
    to at least 1 when T(G)∩N is nontrivial.
    """
    if soc is None:
        soc = socle_data(G)
    inter = intersect_with_normal(G, soc, N)
    k = 0
    for piece in sylow_decompose(G, inter.A):
        k = max(k, min_normal_generators(G, piece.carrier)[0])
    if not inter.T.is_trivial:
        k = max(k, 1)
    return k
