"""Finite semigroups stored as multiplication tables.

Elements are the integers ``0..n-1``; ``S.table[a, b]`` is the product ``a*b``.
Labels are metadata only and play no role in any computation.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import EmptyGeneratorSet, IndexOutOfRange, NonAssociative


class Semigroup:
    """An immutable finite semigroup given by its Cayley table."""

    def __init__(self, table, labels=None, *, check=True):
        table = np.array(table, dtype=np.int64, copy=True)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise IndexOutOfRange(f"table must be square, got shape {table.shape}")
        n = table.shape[0]
        if n == 0:
            raise IndexOutOfRange("a semigroup needs at least one element")
        if table.min() < 0 or table.max() >= n:
            raise IndexOutOfRange(f"table entries must lie in [0, {n})")
        table.setflags(write=False)
        self.table = table
        self.n = n
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise IndexOutOfRange(f"expected {n} labels, got {len(labels)}")
        self.labels = labels
        if check:
            witness = associativity_witness(table)
            if witness is not None:
                raise NonAssociative(*witness)
        self.identity = _find_identity(table)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Semigroup(order={self.n}, identity={self.identity})"

    def __eq__(self, other):
        return (
            isinstance(other, Semigroup)
            and self.labels == other.labels
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.n, self.labels, self.table.tobytes()))

    @cached_property
    def rows(self) -> list[list[int]]:
        """The table as nested Python lists, for tight scalar loops."""
        return self.table.tolist()

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def product(self, word: Iterable[int]) -> int:
        it = iter(word)
        acc = next(it)
        for x in it:
            acc = self.rows[acc][x]
        return acc

    @cached_property
    def idempotents(self) -> np.ndarray:
        idx = np.arange(self.n)
        return idx[self.table[idx, idx] == idx]

    def is_idempotent(self, e: int) -> bool:
        return self.rows[e][e] == e

    def label_index(self, label: str) -> int:
        return self.labels.index(label)


def associativity_witness(table: np.ndarray) -> Optional[tuple[int, int, int]]:
    """Return the first triple (a, b, c) violating associativity, or None.

    Works one left factor at a time so memory stays O(n^2).
    """
    n = table.shape[0]
    for a in range(n):
        left = table[table[a]]  # left[b, c] = (a*b)*c
        right = table[a][table]  # right[b, c] = a*(b*c)
        bad = np.argwhere(left != right)
        if len(bad):
            b, c = bad[0]
            return a, int(b), int(c)
    return None


def _find_identity(table: np.ndarray) -> Optional[int]:
    idx = np.arange(table.shape[0])
    for e in range(table.shape[0]):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            return e
    return None


def build_from_cayley(table, labels=None, *, check=True) -> Semigroup:
    """Validate a Cayley table and wrap it as a :class:`Semigroup`.

    Raises IndexOutOfRange for malformed tables and NonAssociative (carrying
    the offending triple in ``.witness``) when associativity fails.
    """
    return Semigroup(table, labels, check=check)


class Transformation(tuple):
    """A total map on ``{0, ..., m-1}`` given by its list of images."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        m = len(images)
        if any(x < 0 or x >= m for x in images):
            raise IndexOutOfRange(f"images must lie in [0, {m})")
        return super().__new__(cls, images)

    @property
    def degree(self) -> int:
        return len(self)

    def then(self, other: "Transformation") -> "Transformation":
        """Apply ``self`` first, then ``other``."""
        return Transformation(other[x] for x in self)


def _generator_names(k: int) -> list[str]:
    if k <= 26:
        return [chr(ord("a") + i) for i in range(k)]
    return [f"g{i}." for i in range(k)]


def closure_from_transformations(gens: Sequence[Sequence[int]]) -> Semigroup:
    """Enumerate the transformation semigroup generated by ``gens``.

    Maps act on the right: ``(s*t)(x) = t(s(x))``.  Elements are discovered
    breadth-first (generators first, then right multiples in discovery order),
    so indices are reproducible and each label is a shortest word in the
    generators.
    """
    gens = [Transformation(g) for g in gens]
    if not gens:
        raise EmptyGeneratorSet("need at least one generator")
    m = gens[0].degree
    if any(g.degree != m for g in gens):
        raise IndexOutOfRange("generators act on different numbers of points")

    names = _generator_names(len(gens))
    index: dict[Transformation, int] = {}
    elements: list[Transformation] = []
    words: list[str] = []
    for g, name in zip(gens, names):
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
            words.append(name)

    queue = deque(range(len(elements)))
    while queue:
        i = queue.popleft()
        for g, name in zip(gens, names):
            h = elements[i].then(g)
            if h not in index:
                index[h] = len(elements)
                elements.append(h)
                words.append(words[i] + name)
                queue.append(index[h])

    arr = np.array(elements, dtype=np.int64)  # arr[i, x] = image of x under i
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    if m <= 15:
        # Encode each map as a base-m integer and look composites up by sorting.
        weights = m ** np.arange(m, dtype=np.int64)
        keys = arr @ weights
        order = np.argsort(keys)
        sorted_keys = keys[order]
        for j in range(n):
            composed = arr[j][arr]  # composed[i, x] = j(i(x)), i.e. i then j
            table[:, j] = order[np.searchsorted(sorted_keys, composed @ weights)]
    else:
        for j in range(n):
            composed = arr[j][arr]
            for i in range(n):
                table[i, j] = index[Transformation(composed[i].tolist())]
    return Semigroup(table, words, check=False)


def adjoin_identity(S: Semigroup) -> Semigroup:
    """Return S^1: S with a fresh identity appended as the last element.

    A new identity is adjoined even when S already has one.
    """
    n = S.n
    table = np.empty((n + 1, n + 1), dtype=np.int64)
    table[:n, :n] = S.table
    table[n, :] = np.arange(n + 1)
    table[:, n] = np.arange(n + 1)
    label = "1"
    while label in S.labels:
        label = label + "'"
    return Semigroup(table, S.labels + (label,), check=False)


def direct_product(S: Semigroup, T: Semigroup) -> Semigroup:
    """Componentwise product; element (s, t) has index ``s * |T| + t``."""
    m = T.n
    s_idx, t_idx = np.divmod(np.arange(S.n * m), m)
    table = S.table[np.ix_(s_idx, s_idx)] * m + T.table[np.ix_(t_idx, t_idx)]
    labels = [f"({S.labels[s]},{T.labels[t]})" for s, t in zip(s_idx, t_idx)]
    return Semigroup(table, labels, check=False)


# -- text formats ------------------------------------------------------------


def _data_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def parse_cayley(text: str, *, check=True) -> Semigroup:
    """Parse the Cayley text format.

    Line 1 holds n, the next n lines the table rows as 0-based indices, and an
    optional ``labels:`` line introduces one label per line.
    """
    lines = _data_lines(text)
    if not lines:
        raise IndexOutOfRange("empty Cayley file")
    n = int(lines[0])
    rows = [[int(x) for x in ln.split()] for ln in lines[1 : n + 1]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise IndexOutOfRange(f"expected {n} rows of {n} entries")
    labels = None
    rest = lines[n + 1 :]
    if rest:
        if rest[0] != "labels:":
            raise IndexOutOfRange(f"unexpected trailing line {rest[0]!r}")
        labels = rest[1:]
    return build_from_cayley(rows, labels, check=check)


def format_cayley(S: Semigroup, *, labels=True) -> str:
    out = [str(S.n)]
    out.extend(" ".join(str(x) for x in row) for row in S.rows)
    if labels:
        out.append("labels:")
        out.extend(S.labels)
    return "\n".join(out) + "\n"


def parse_transformations(text: str) -> list[Transformation]:
    """Parse the transformation format: m, then one generator per line."""
    lines = _data_lines(text)
    if not lines:
        raise EmptyGeneratorSet("empty transformation file")
    m = int(lines[0])
    gens = [Transformation(int(x) for x in ln.split()) for ln in lines[1:]]
    if any(g.degree != m for g in gens):
        raise IndexOutOfRange(f"every generator must list {m} images")
    return gens


def read_cayley(path, *, check=True) -> Semigroup:
    return parse_cayley(Path(path).read_text(), check=check)


def read_transformations(path) -> Semigroup:
    return closure_from_transformations(parse_transformations(Path(path).read_text()))
