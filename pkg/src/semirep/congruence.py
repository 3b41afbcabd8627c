"""Generalized group mapping congruences and the irreducible J-classes.

For a regular J-class J, ``s ≡_J t`` when s and t act identically on J by
two-sided translation: for all x, y in J, ``xsy`` lies in J exactly when
``xty`` does, and then the two products agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence

import numpy as np

from .core import Semigroup
from .errors import ConsistencyError, NotNormal, NotRegular, SizeMismatch
from .green import (
    GreenData,
    JOrder,
    MaxSubgroup,
    j_order,
    maximal_subgroup,
    subgroup_transport_iso,
)


@dataclass(frozen=True, eq=False)
class Congruence:
    """A partition of the elements, stored canonically.

    ``class_of[s]`` is the smallest element equivalent to s, so two
    congruences are equal exactly when their arrays are.
    """

    class_of: np.ndarray

    @classmethod
    def from_labels(cls, labels) -> "Congruence":
        labels = np.asarray(labels)
        _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
        out = first[inverse.ravel()].astype(np.int64)
        out.setflags(write=False)
        return cls(out)

    @classmethod
    def equality(cls, n: int) -> "Congruence":
        return cls.from_labels(np.arange(n))

    @classmethod
    def universal(cls, n: int) -> "Congruence":
        return cls.from_labels(np.zeros(n, dtype=np.int64))

    def __eq__(self, other):
        return isinstance(other, Congruence) and np.array_equal(self.class_of, other.class_of)

    def __hash__(self):
        return hash(self.class_of.tobytes())

    def __len__(self):
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return int(np.count_nonzero(self.class_of == np.arange(len(self.class_of))))

    @property
    def is_trivial(self) -> bool:
        return self.num_classes == len(self.class_of)

    @property
    def is_universal(self) -> bool:
        return self.num_classes == 1

    def related(self, s: int, t: int) -> bool:
        return bool(self.class_of[s] == self.class_of[t])

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for s, c in enumerate(self.class_of.tolist()):
            out.setdefault(c, []).append(s)
        return list(out.values())

    def refines(self, other: "Congruence") -> bool:
        """True iff every pair related here is related in ``other``."""
        return bool(np.array_equal(other.class_of, other.class_of[self.class_of]))

    def is_compatible(self, S: Semigroup) -> bool:
        """Exhaustive check of left and right compatibility."""
        c = self.class_of
        img = c[S.table]  # img[u, s] = class of u*s
        left_ok = np.array_equal(img, img[:, c])
        right_ok = np.array_equal(img, img[c, :])
        return bool(left_ok and right_ok)


def compatibility_audit(S: Semigroup, c: Congruence, samples: int = 1000, seed: int = 0) -> bool:
    """Exhaustive compatibility check for n <= 50, random (s, t, u) triples above."""
    if S.n <= 50:
        return c.is_compatible(S)
    rng = np.random.default_rng(seed)
    T = S.table
    s = rng.integers(0, S.n, samples)
    # pick t in the class of s
    t = np.array([rng.choice(np.flatnonzero(c.class_of == c.class_of[x])) for x in s])
    u = rng.integers(0, S.n, samples)
    cl = c.class_of
    return bool(np.all(cl[T[u, s]] == cl[T[u, t]]) and np.all(cl[T[s, u]] == cl[T[t, u]]))


def meet(c1: Congruence, c2: Congruence) -> Congruence:
    if len(c1) != len(c2):
        raise SizeMismatch(f"partitions of {len(c1)} and {len(c2)} elements")
    n = len(c1)
    return Congruence.from_labels(c1.class_of * n + c2.class_of)


def meet_all(congruences: Sequence[Congruence], n: int) -> Congruence:
    """Meet of a family; the empty family gives the universal relation."""
    return reduce(meet, congruences, Congruence.universal(n))


def _signatures(S: Semigroup, J: Sequence[int]) -> np.ndarray:
    """Row s lists x*s*y for (x, y) in J x J, with -1 where it leaves J."""
    J = np.asarray(J, dtype=np.int64)
    in_j = np.zeros(S.n, dtype=bool)
    in_j[J] = True
    xs = S.table[J, :]  # xs[x, s] = x*s
    xsy = S.table[xs[:, :, None], J[None, None, :]]  # xsy[x, s, y]
    sig = np.where(in_j[xsy], xsy, -1)
    return sig.transpose(1, 0, 2).reshape(S.n, -1)


def ggm_congruence(S: Semigroup, green: GreenData, j: int, *, audit=True) -> Congruence:
    J = green.j_classes[j]
    if not J.regular:
        raise NotRegular(f"J-class {j} is not regular")
    sig = _signatures(S, J.elements)
    _, inverse = np.unique(sig, axis=0, return_inverse=True)
    c = Congruence.from_labels(inverse.ravel())
    if audit and not c.is_compatible(S):
        raise ConsistencyError(f"≡_J for J-class {j} is not a congruence")
    return c


def all_ggm_congruences(S: Semigroup, green: GreenData) -> dict[int, Congruence]:
    return {J.id: ggm_congruence(S, green, J.id) for J in green.regular_classes}


@dataclass(frozen=True)
class GGM:
    congruence: Congruence
    witness: Optional[tuple[int, int]]

    @property
    def is_trivial(self) -> bool:
        return self.congruence.is_trivial


def ggm_all(S: Semigroup, green: GreenData, congruences: Optional[dict] = None) -> GGM:
    if congruences is None:
        congruences = all_ggm_congruences(S, green)
    c = meet_all(list(congruences.values()), S.n)
    witness = None
    if not c.is_trivial:
        t = int(np.flatnonzero(c.class_of != np.arange(S.n))[0])
        witness = (int(c.class_of[t]), t)
    return GGM(c, witness)


@dataclass(frozen=True)
class JClassification:
    """Irreducibility flags for the regular J-classes.

    ``below_meet[j]`` is the meet of ≡_J' over regular J' < J; for an
    irreducible J, ``witness[j] = (s, t)`` is related by that meet but not by
    ≡_J.
    """

    irreducible: dict[int, bool]
    witness: dict[int, tuple[int, int]]
    below_meet: dict[int, Congruence]

    @property
    def irreducible_ids(self) -> list[int]:
        return [j for j, flag in self.irreducible.items() if flag]


def classify_j_classes(
    S: Semigroup,
    green: GreenData,
    congruences: dict[int, Congruence],
    order: Optional[JOrder] = None,
) -> JClassification:
    if order is None:
        order = j_order(green)
    irreducible, witness, below = {}, {}, {}
    for j, cj in congruences.items():
        lower = [congruences[i] for i in order.regular_below(green, j)]
        m = meet_all(lower, S.n)
        below[j] = m
        bad = np.flatnonzero(cj.class_of[m.class_of] != cj.class_of)
        irreducible[j] = bool(len(bad))
        if len(bad):
            t = int(bad[0])
            s = int(m.class_of[t])
            if not (m.related(s, t) and not cj.related(s, t)):
                raise ConsistencyError("irreducibility witness failed validation")
            witness[j] = (s, t)
    return JClassification(irreducible, witness, below)


@dataclass(frozen=True)
class RelativeKernel:
    j_class: int
    e: int
    carrier: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.carrier)

    @property
    def is_trivial(self) -> bool:
        return len(self.carrier) == 1


def _audit_normal(S: Semigroup, G: MaxSubgroup, N: Sequence[int]):
    rows = S.rows
    Gs, Ns = set(G.carrier), set(N)
    e = G.e
    if e not in Ns:
        raise NotNormal("missing identity")
    inv = {g: next(h for h in G.carrier if rows[g][h] == e) for g in G.carrier}
    for a in N:
        if inv[a] not in Ns:
            raise NotNormal(f"inverse of {a} missing")
        for b in N:
            if rows[a][b] not in Ns:
                raise NotNormal(f"{a}*{b} missing")
        for g in Gs:
            if rows[rows[g][a]][inv[g]] not in Ns:
                raise NotNormal(f"conjugate of {a} by {g} missing")


def compute_N_J(
    S: Semigroup,
    green: GreenData,
    j: int,
    G: MaxSubgroup,
    congruences: dict[int, Congruence],
    order: Optional[JOrder] = None,
    *,
    audit=True,
) -> RelativeKernel:
    """Elements of G_J equivalent to e_J under every ≡_J' with J' < J regular."""
    if not green.j_classes[j].regular:
        raise NotRegular(f"J-class {j} is not regular")
    if order is None:
        order = j_order(green)
    m = meet_all([congruences[i] for i in order.regular_below(green, j)], S.n)
    carrier = tuple(g for g in G.carrier if m.related(g, G.e))
    if audit:
        _audit_normal(S, G, carrier)
    return RelativeKernel(j, G.e, carrier)


def n_j_choice_audit(
    S: Semigroup,
    green: GreenData,
    j: int,
    congruences: dict[int, Congruence],
    order: Optional[JOrder] = None,
) -> bool:
    """N_J computed at any idempotent of J is the transport of N_J at the default one."""
    base = compute_N_J(S, green, j, maximal_subgroup(S, green, j), congruences, order)
    for f in green.j_classes[j].idempotents:
        other = compute_N_J(S, green, j, maximal_subgroup(S, green, j, f), congruences, order)
        iso = subgroup_transport_iso(S, green, base.e, f)
        if {iso(x) for x in base.carrier} != set(other.carrier):
            raise ConsistencyError(f"N_J at idempotent {f} is not the transport of N_J at {base.e}")
    return True


def is_generalized_group_mapping(
    S: Semigroup,
    green: GreenData,
    congruences: Optional[dict] = None,
    classification: Optional[JClassification] = None,
) -> Optional[int]:
    """Return the distinguished J-class id if some ≡_J is trivial, else None.

    For nontrivial S the answer is cross-checked against the equivalent
    condition: trivial GGM together with a unique irreducible regular J-class.
    """
    if congruences is None:
        congruences = all_ggm_congruences(S, green)
    found = [j for j, c in congruences.items() if c.is_trivial]
    # A trivial ≡_J forces J to be the minimal ideal or the unique minimal
    # nonzero class, so there is at most one.
    if len(found) > 1:
        raise ConsistencyError(f"several trivial ≡_J: {found}")
    distinguished = found[0] if found else None
    if S.n > 1:
        if classification is None:
            classification = classify_j_classes(S, green, congruences)
        irr = classification.irreducible_ids
        alt = ggm_all(S, green, congruences).is_trivial and len(irr) == 1
        if alt != (distinguished is not None) or (alt and irr[0] != distinguished):
            raise ConsistencyError(
                f"generalized group mapping tests disagree: trivial ≡_J at {found}, "
                f"irreducible classes {irr}"
            )
    return distinguished


def relative_kernels(S: Semigroup, green: GreenData, congruences=None, order=None):
    """N_J for every regular J, keyed by J-class id, with default idempotents."""
    if congruences is None:
        congruences = all_ggm_congruences(S, green)
    if order is None:
        order = j_order(green)
    out = {}
    for j in congruences:
        G = maximal_subgroup(S, green, j)
        out[j] = compute_N_J(S, green, j, G, congruences, order)
    return out
