"""Builders for standard groups and the semigroup families used as test cases."""

from __future__ import annotations

import ast
from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .core import Semigroup, adjoin_identity, closure_from_transformations, direct_product
from .errors import (
    NoMeet,
    NotAPartialOrder,
    NotProperNontrivial,
    TooLarge,
    UnknownName,
    UnsupportedFieldSize,
)
from .grouptheory import as_group, as_normal, normal_subgroups, product_set


# -- semilattices --------------------------------------------------------------


@dataclass(frozen=True)
class PosetSpec:
    n: int
    covers: tuple[tuple[int, int], ...]  # (lower, upper) pairs

    def order_matrix(self) -> np.ndarray:
        """Reflexive-transitive closure: ``leq[x, y]`` iff x <= y."""
        leq = np.eye(self.n, dtype=bool)
        for lo, hi in self.covers:
            leq[lo, hi] = True
        for k in range(self.n):
            leq |= leq[:, [k]] & leq[[k], :]
        off = leq & ~np.eye(self.n, dtype=bool)
        if (off & off.T).any():
            raise NotAPartialOrder("cover relation contains a cycle")
        return leq


def build_semilattice(spec: PosetSpec) -> Semigroup:
    """Meet semilattice of a finite poset: x*y = greatest lower bound."""
    leq = spec.order_matrix()
    n = spec.n
    table = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            lower = np.flatnonzero(leq[:, x] & leq[:, y])
            top = [z for z in lower if leq[lower, z].all()]
            if not top:
                raise NoMeet(x, y)
            table[x, y] = table[y, x] = top[0]
    return Semigroup(table, check=False)


def chain(n: int) -> PosetSpec:
    return PosetSpec(n, tuple((i, i + 1) for i in range(n - 1)))


def boolean_lattice(atoms: int) -> PosetSpec:
    """Subsets of an ``atoms``-element set; element i is the subset with bitmask i."""
    n = 1 << atoms
    covers = tuple((x, x | (1 << b)) for x in range(n) for b in range(atoms) if not x >> b & 1)
    return PosetSpec(n, covers)


# -- groups -------------------------------------------------------------------


def _from_elements(elements: Sequence, mul, labels) -> Semigroup:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return Semigroup(table, labels, check=False)


def cyclic(m: int) -> Semigroup:
    m = int(m)
    if m < 1:
        raise UnknownName("cyclic(m) needs m >= 1")
    return _from_elements(range(m), lambda a, b: (a + b) % m, [str(i) for i in range(m)])


def elementary_abelian(p: int, k: int) -> Semigroup:
    elems = list(product(range(p), repeat=k))
    mul = lambda a, b: tuple((x + y) % p for x, y in zip(a, b))
    return _from_elements(elems, mul, ["".join(map(str, v)) for v in elems])


def klein4() -> Semigroup:
    return elementary_abelian(2, 2)


def dihedral(m: int) -> Semigroup:
    """Dihedral group of order 2m: pairs (r, s) meaning rot^r * ref^s."""
    m = int(m)
    if m < 1:
        raise UnknownName("dihedral(m) needs m >= 1")
    elems = [(r, s) for s in range(2) for r in range(m)]
    mul = lambda a, b: ((a[0] + (-1) ** a[1] * b[0]) % m, (a[1] + b[1]) % 2)
    labels = [f"r{r}" if s == 0 else f"r{r}s" for r, s in elems]
    return _from_elements(elems, mul, labels)


def _perm_label(p) -> str:
    return "p" + "".join(str(x) for x in p)


def _parity(p) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]) % 2


def _perm_group(m: int, even_only: bool) -> Semigroup:
    if not 1 <= m <= 5:
        raise TooLarge("permutation groups are limited to degree <= 5")
    elems = [p for p in permutations(range(m)) if not (even_only and _parity(p))]
    mul = lambda a, b: tuple(b[a[i]] for i in range(m))  # a first, then b
    return _from_elements(elems, mul, [_perm_label(p) for p in elems])


def symmetric(m: int) -> Semigroup:
    return _perm_group(int(m), False)


def alternating(m: int) -> Semigroup:
    return _perm_group(int(m), True)


def quaternion8() -> Semigroup:
    """Q_8 as (sign, unit) with units 1, i, j, k."""
    # unit[a][b] = (sign, unit) of the product of units a, b (0..3 = 1, i, j, k)
    unit = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ]
    elems = [(s, u) for s in (1, -1) for u in range(4)]

    def mul(a, b):
        s, u = unit[a[1]][b[1]]
        return (a[0] * b[0] * s, u)

    names = "1ijk"
    labels = [("" if s == 1 else "-") + names[u] for s, u in elems]
    return _from_elements(elems, mul, labels)


def full_transformation_monoid(m: int) -> Semigroup:
    """T_m, generated by a cycle, a transposition and a rank m-1 map."""
    if m == 1:
        return closure_from_transformations([[0]])
    cycle = [(i + 1) % m for i in range(m)]
    swap = [1, 0] + list(range(2, m))
    collapse = [0, 0] + list(range(2, m))
    return closure_from_transformations([cycle, swap, collapse])


# -- semigroups built from a group ------------------------------------------------


def build_QG(G) -> Semigroup:
    """Q(G): all cosets gN (N normal) under setwise product.

    Cosets are ordered by their normal subgroup (by order, then elements), then
    by the coset's smallest element.  The idempotents are the normal subgroups.
    """
    G = as_group(G)
    cosets: list[frozenset] = []
    seen: set[frozenset] = set()
    labels = []
    for i, N in enumerate(normal_subgroups(G)):
        for g in G.carrier:
            c = product_set(G, [g], N.carrier)
            if c not in seen:
                seen.add(c)
                cosets.append(c)
                labels.append(f"{G.parent.labels[g]}N{i}")
    index = {c: k for k, c in enumerate(cosets)}
    table = [[index[product_set(G, a, b)] for b in cosets] for a in cosets]
    return Semigroup(table, labels, check=False)


def build_group_union_quotient(G, N) -> Semigroup:
    """G ⊔ G/N with G/N an ideal: g(hN) = ghN and (hN)g = hgN.

    Elements 0..|G|-1 are the group elements in carrier order; the cosets
    follow, ordered by smallest member.
    """
    G = as_group(G)
    N = as_normal(G, N)
    if N.is_trivial or N.order == G.order:
        raise NotProperNontrivial("N must be a proper nontrivial normal subgroup")
    elems = list(G.carrier)
    cosets = sorted({product_set(G, [g], N.carrier) for g in elems}, key=min)
    m = len(elems)
    gi = {g: i for i, g in enumerate(elems)}
    ci = {g: m + k for k, c in enumerate(cosets) for g in c}  # element -> its coset's index
    r = G.parent.rows
    size = m + len(cosets)
    table = np.empty((size, size), dtype=np.int64)
    reps = [min(c) for c in cosets]
    every = elems + reps  # representative group element of each index
    for a in range(size):
        for b in range(size):
            prod = r[every[a]][every[b]]
            table[a, b] = gi[prod] if a < m and b < m else ci[prod]
    labels = [G.parent.labels[g] for g in elems] + [f"{G.parent.labels[x]}N" for x in reps]
    return Semigroup(table, labels, check=False)


# -- matrix monoids -------------------------------------------------------------


def _field(q: int):
    if q in (2, 3, 5):
        add = [[(a + b) % q for b in range(q)] for a in range(q)]
        mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        return add, mul
    if q == 4:
        # F_4 = F_2[x]/(x^2 + x + 1); element bits (b1 b0) mean b1*x + b0.
        def fmul(a, b):
            r = 0
            for i in range(2):
                if b >> i & 1:
                    r ^= a << i
            if r & 0b100:
                r ^= 0b111
            return r

        add = [[a ^ b for b in range(4)] for a in range(4)]
        mul = [[fmul(a, b) for b in range(4)] for a in range(4)]
        return add, mul
    raise UnsupportedFieldSize(f"field size {q} not supported (use 2, 3, 4 or 5)")


def build_matrix_monoid(n: int, q: int) -> Semigroup:
    """All n x n matrices over F_q under multiplication (n <= 2, q <= 5)."""
    n, q = int(n), int(q)
    add, mul = _field(q)
    if n < 1 or n > 2 or q ** (n * n) > 10**4:
        raise TooLarge(f"M_{n}(F_{q}) is too large to tabulate")
    mats = list(product(range(q), repeat=n * n))
    index = {m: i for i, m in enumerate(mats)}

    def matmul(a, b):
        out = []
        for i in range(n):
            for j in range(n):
                s = 0
                for k in range(n):
                    s = add[s][mul[a[i * n + k]][b[k * n + j]]]
                out.append(s)
        return tuple(out)

    table = [[index[matmul(a, b)] for b in mats] for a in mats]
    labels = ["[" + ";".join(",".join(str(m[i * n + j]) for j in range(n)) for i in range(n)) + "]" for m in mats]
    return Semigroup(table, labels, check=False)


# -- builtin expressions ------------------------------------------------------------

_GROUPS = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "symmetric": symmetric,
    "alternating": alternating,
    "elementary_abelian": elementary_abelian,
    "quaternion8": quaternion8,
    "klein4": klein4,
}


def builtin_group(name: str, *args) -> Semigroup:
    try:
        builder = _GROUPS[name]
    except KeyError:
        raise UnknownName(f"unknown group {name!r}") from None
    return builder(*args)


def locate_subgroup(G: Semigroup, H) -> list[int]:
    """Elements of G named by H: an index list, or a semigroup matched by labels."""
    if isinstance(H, Semigroup):
        try:
            return [G.labels.index(lab) for lab in H.labels]
        except ValueError:
            raise UnknownName("subgroup labels do not all occur in the group") from None
    return [int(x) for x in H]


def _union_quotient(G, N):
    return build_group_union_quotient(G, locate_subgroup(G, N))


_SEMIGROUPS = {
    "QG": build_QG,
    "union_quotient": _union_quotient,
    "M": build_matrix_monoid,
    "T": full_transformation_monoid,
    "chain": lambda n: build_semilattice(chain(n)),
    "boolean": lambda k: build_semilattice(boolean_lattice(k)),
    "product": direct_product,
    "adjoin_identity": adjoin_identity,
}


def _evaluate(node):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, (ast.List, ast.Tuple, ast.Set)):
        return [_evaluate(x) for x in node.elts]
    if isinstance(node, ast.Name):
        node = ast.Call(func=node, args=[], keywords=[])
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
        name = node.func.id
        args = [_evaluate(a) for a in node.args]
        if name in _GROUPS:
            return builtin_group(name, *args)
        if name in _SEMIGROUPS:
            return _SEMIGROUPS[name](*args)
        raise UnknownName(f"unknown builtin {name!r}")
    raise UnknownName(f"cannot parse builtin expression at {ast.dump(node)}")


def builtin(expr: str) -> Semigroup:
    """Evaluate a builtin expression such as ``QG(cyclic(4))`` or ``M(2,2)``.

    Nested calls, integers and index lists are allowed; nothing else is.
    """
    try:
        tree = ast.parse(expr.strip(), mode="eval")
    except SyntaxError as exc:
        raise UnknownName(f"malformed builtin expression {expr!r}") from exc
    out = _evaluate(tree.body)
    if not isinstance(out, Semigroup):
        raise UnknownName(f"{expr!r} does not describe a semigroup")
    return out


BUILTIN_NAMES = sorted(_GROUPS) + sorted(_SEMIGROUPS)
