"""Green's relations, the J-order and maximal subgroups of a finite semigroup."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import Semigroup
from .errors import NoLinkingPair, NotIdempotentInClass, NotRegular


@dataclass(frozen=True)
class JClass:
    id: int
    elements: tuple[int, ...]
    regular: bool
    idempotents: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, s):
        return s in self.elements


@dataclass(frozen=True)
class JOrder:
    """Partial order on J-class ids.

    ``leq[i, j]`` is True iff J_i <= J_j; ``covers`` lists the Hasse edges as
    ``(lower, upper)`` pairs.
    """

    leq: np.ndarray
    covers: tuple[tuple[int, int], ...]

    @property
    def less(self) -> np.ndarray:
        return self.leq & ~np.eye(len(self.leq), dtype=bool)

    def below(self, j: int) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.less[:, j])]

    def regular_below(self, green: "GreenData", j: int) -> list[int]:
        return [i for i in self.below(j) if green.j_classes[i].regular]

    def restricted_to_regular(self, green: "GreenData") -> tuple[list[int], np.ndarray]:
        ids = [J.id for J in green.j_classes if J.regular]
        return ids, self.leq[np.ix_(ids, ids)]


@dataclass(frozen=True)
class GreenData:
    r_class_of: np.ndarray
    l_class_of: np.ndarray
    j_class_of: np.ndarray
    h_class_of: np.ndarray
    j_classes: tuple[JClass, ...]
    # Boolean membership matrices: right_ideal[s, t] iff t in s S^1, etc.
    right_ideal: np.ndarray = field(repr=False)
    left_ideal: np.ndarray = field(repr=False)
    ideal: np.ndarray = field(repr=False)

    def j_class(self, s: int) -> JClass:
        return self.j_classes[self.j_class_of[s]]

    @property
    def regular_classes(self) -> list[JClass]:
        return [J for J in self.j_classes if J.regular]

    def members(self, class_of: np.ndarray, s: int) -> list[int]:
        return [int(t) for t in np.flatnonzero(class_of == class_of[s])]

    def r_class(self, s):
        return self.members(self.r_class_of, s)

    def l_class(self, s):
        return self.members(self.l_class_of, s)

    def h_class(self, s):
        return self.members(self.h_class_of, s)


def _classes_from_rows(mask: np.ndarray) -> np.ndarray:
    """Label each row by the smallest row index with an identical row."""
    _, first, inverse = np.unique(mask, axis=0, return_index=True, return_inverse=True)
    return first[inverse.ravel()]


def _dense(labels: np.ndarray) -> np.ndarray:
    """Renumber labels 0, 1, ... in order of first appearance."""
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.argsort(np.argsort(first))
    return rank[inverse.ravel()]


def compute_green(S: Semigroup) -> GreenData:
    n = S.n
    eye = np.eye(n, dtype=bool)
    right = eye.copy()
    right[np.arange(n)[:, None], S.table] = True  # s S^1 = {s} u row s
    left = eye.copy()
    left[np.arange(n)[:, None], S.table.T] = True  # S^1 s = {s} u column s
    # S^1 s S^1 is the union of the right ideals t S^1 over t in S^1 s.
    ideal = (left.astype(np.int64) @ right.astype(np.int64)) > 0

    r = _dense(_classes_from_rows(right))
    l = _dense(_classes_from_rows(left))
    j = _dense(_classes_from_rows(ideal))
    h = _dense(r * n + l)

    idem = S.table[np.arange(n), np.arange(n)] == np.arange(n)
    classes = []
    for cid in range(int(j.max()) + 1):
        elems = tuple(int(x) for x in np.flatnonzero(j == cid))
        ids = tuple(x for x in elems if idem[x])
        classes.append(JClass(cid, elems, bool(ids), ids))
    for m in (right, left, ideal):
        m.setflags(write=False)
    return GreenData(r, l, j, h, tuple(classes), right, left, ideal)


def j_order(green: GreenData) -> JOrder:
    reps = [J.elements[0] for J in green.j_classes]
    leq = green.ideal[np.ix_(reps, reps)].T.copy()  # rep_i in ideal(rep_j)
    less = leq & ~np.eye(len(reps), dtype=bool)
    # J_i is covered by J_j when nothing sits strictly between them.
    two_step = (less.astype(np.int64) @ less.astype(np.int64)) > 0
    hasse = less & ~two_step
    covers = tuple((int(a), int(b)) for a, b in np.argwhere(hasse))
    leq.setflags(write=False)
    return JOrder(leq, covers)


@dataclass(frozen=True)
class MaxSubgroup:
    j_class: int
    e: int
    carrier: tuple[int, ...]
    group_table: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.carrier)


def default_idempotent(green: GreenData, j: int) -> int:
    J = green.j_classes[j]
    if not J.regular:
        raise NotRegular(f"J-class {j} contains no idempotent")
    return J.idempotents[0]


def maximal_subgroup(S: Semigroup, green: GreenData, j: int, e: Optional[int] = None) -> MaxSubgroup:
    """The H-class of the idempotent ``e`` (lowest-index idempotent by default)."""
    if e is None:
        e = default_idempotent(green, j)
    elif not (green.j_class_of[e] == j and S.is_idempotent(e)):
        raise NotIdempotentInClass(f"{e} is not an idempotent of J-class {j}")
    carrier = tuple(green.h_class(e))
    pos = {x: i for i, x in enumerate(carrier)}
    gt = np.array([[pos[S.rows[a][b]] for b in carrier] for a in carrier], dtype=np.int64)
    gt.setflags(write=False)
    return MaxSubgroup(j, int(e), carrier, gt)


@dataclass(frozen=True)
class LinkingPair:
    a: int
    a_prime: int
    mapping: dict

    def __call__(self, x):
        return self.mapping[x]


def subgroup_transport_iso(S: Semigroup, green: GreenData, e: int, f: int) -> LinkingPair:
    """Find mutually inverse a, a' with a a' = f and a' a = e.

    The returned pair maps the maximal subgroup at e onto the one at f by
    x -> a x a'.  The map is checked to be a group isomorphism.
    """
    if green.j_class_of[e] != green.j_class_of[f]:
        raise NotIdempotentInClass("idempotents lie in different J-classes")
    for x in (e, f):
        if not S.is_idempotent(x):
            raise NotIdempotentInClass(f"{x} is not idempotent")
    rows = S.rows
    found = None
    if e == f:
        found = (e, e)
    else:
        cand_a = [a for a in green.r_class(f) if green.l_class_of[a] == green.l_class_of[e]]
        cand_b = [b for b in green.r_class(e) if green.l_class_of[b] == green.l_class_of[f]]
        for a in cand_a:
            for b in cand_b:
                if (rows[a][b] == f and rows[b][a] == e
                        and rows[rows[a][b]][a] == a and rows[rows[b][a]][b] == b):
                    found = (a, b)
                    break
            if found:
                break
    if found is None:
        raise NoLinkingPair(f"no linking pair for idempotents {e}, {f}")
    a, b = found
    mapping = {x: rows[rows[a][x]][b] for x in green.h_class(e)}
    target = set(green.h_class(f))
    if set(mapping.values()) != target or len(target) != len(mapping):
        raise NoLinkingPair("transport map is not a bijection")
    for x in mapping:
        for y in mapping:
            if mapping[rows[x][y]] != rows[mapping[x]][mapping[y]]:
                raise NoLinkingPair("transport map is not a homomorphism")
    return LinkingPair(a, b, mapping)


def stability_audit(S: Semigroup, green: GreenData) -> bool:
    """Check s S^1 ∩ J_s = R_s and S^1 s ∩ J_s = L_s for every s."""
    j = green.j_class_of
    same_j = j[:, None] == j[None, :]
    same_r = green.r_class_of[:, None] == green.r_class_of[None, :]
    same_l = green.l_class_of[:, None] == green.l_class_of[None, :]
    return bool(
        np.array_equal(green.right_ideal & same_j, same_r)
        and np.array_equal(green.left_ideal & same_j, same_l)
    )
