"""Minimum number of irreducible constituents of a faithful completely
reducible representation of a finite semigroup, per regular J-class."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from sympy import primefactors

from .congruence import (
    all_ggm_congruences,
    classify_j_classes,
    compute_N_J,
    ggm_all,
    is_generalized_group_mapping,
)
from .core import Semigroup
from .errors import ConsistencyError
from .green import compute_green, j_order, maximal_subgroup
from .grouptheory import as_normal, socle_data, verify_group
from .zmud import check_characteristic, gaschutz_check, zmud_number


@dataclass(frozen=True)
class Row:
    j: int
    irreducible: bool
    gj_order: int
    nj_order: int
    a_cap_n_order: int
    obstruction: bool
    k_j: int

    def to_dict(self) -> dict:
        return {
            "j": self.j,
            "irreducible": self.irreducible,
            "gj_order": self.gj_order,
            "nj_order": self.nj_order,
            "a_cap_n_order": self.a_cap_n_order,
            "k_j": self.k_j,
        }


@dataclass(frozen=True)
class AnalysisReport:
    char: int
    ggm_trivial: bool
    ggm_witness: Optional[tuple[int, int]]
    rows: tuple[Row, ...]
    exists: bool
    k_total: Optional[int]
    obstruction_primes: Optional[tuple[int, ...]]

    def to_dict(self) -> dict:
        return {
            "char": self.char,
            "ggm_trivial": self.ggm_trivial,
            "rows": [r.to_dict() for r in self.rows],
            "exists": self.exists,
            "k_total": self.k_total,
            "obstruction_primes": (
                list(self.obstruction_primes) if self.obstruction_primes is not None else None
            ),
            "ggm_witness": list(self.ggm_witness) if self.ggm_witness is not None else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


class _Pipeline:
    """Green data, congruences and per-class group data, computed once."""

    def __init__(self, S: Semigroup):
        self.S = S
        self.green = compute_green(S)
        self.order = j_order(self.green)
        self.congruences = all_ggm_congruences(S, self.green)
        self.ggm = ggm_all(S, self.green, self.congruences)
        self.classes = classify_j_classes(S, self.green, self.congruences, self.order)
        self.groups = {}
        for j in self.congruences:
            H = maximal_subgroup(S, self.green, j)
            NJ = compute_N_J(S, self.green, j, H, self.congruences, self.order)
            G = verify_group(S, H.carrier)
            N = as_normal(G, NJ.carrier)
            self.groups[j] = (G, N, socle_data(G))

    def primes(self) -> Optional[tuple[int, ...]]:
        if not self.ggm.is_trivial:
            return None
        out = set()
        for j in self.classes.irreducible_ids:
            G, N, soc = self.groups[j]
            out.update(int(q) for q in primefactors((soc.A & N).order))
        return tuple(sorted(out))


def analyze(S: Semigroup, p: int = 0) -> AnalysisReport:
    p = check_characteristic(p)
    pipe = _Pipeline(S)
    rows = []
    for j in sorted(pipe.congruences):
        G, N, soc = pipe.groups[j]
        irreducible = pipe.classes.irreducible[j]
        a_cap_n = (soc.A & N).order
        obstructed = irreducible and p != 0 and a_cap_n % p == 0
        if not irreducible:
            k_j = 0
        elif N.is_trivial:
            k_j = 1
        else:
            # The normal generation number is characteristic-free; existence
            # is judged separately from the obstruction flag.
            k_j = max(1, zmud_number(G, N, 0, soc).k)
        rows.append(Row(j, irreducible, G.order, N.order, a_cap_n, obstructed, k_j))

    exists = pipe.ggm.is_trivial and not any(r.obstruction for r in rows)
    k_total = sum(r.k_j for r in rows) if exists else None
    report = AnalysisReport(
        p, pipe.ggm.is_trivial, pipe.ggm.witness, tuple(rows), exists, k_total, pipe.primes()
    )
    _audit(report)
    return report


def _audit(report: AnalysisReport):
    if report.exists != (report.k_total is not None):
        raise ConsistencyError("k_total must be present exactly when a representation exists")
    if report.exists and not report.ggm_trivial:
        raise ConsistencyError("a faithful representation forces trivial GGM")
    for r in report.rows:
        if (r.k_j == 0) == r.irreducible:
            raise ConsistencyError(f"row {r.j}: k_j={r.k_j} but irreducible={r.irreducible}")


def min_faithful_cr_length(S: Semigroup, p: int = 0) -> Optional[int]:
    """k_total of :func:`analyze`, or None when no faithful CR representation exists."""
    return analyze(S, p).k_total


def obstruction_primes(S: Semigroup) -> Optional[frozenset]:
    """Primes p over which S has no faithful completely reducible representation.

    Returns None when GGM is nontrivial, in which case every characteristic
    (zero included) obstructs.
    """
    primes = _Pipeline(S).primes()
    return None if primes is None else frozenset(primes)


def rhodes_irreducible_check(S: Semigroup, p: int = 0) -> bool:
    """Whether S has a faithful irreducible representation in characteristic p.

    Decided as: S is generalized group mapping with distinguished class J and
    G_J has a faithful irreducible representation.  Cross-checked against
    :func:`analyze` (exists with k_total = 1, or S trivial).
    """
    p = check_characteristic(p)
    if S.n == 1:
        return True
    pipe = _Pipeline(S)
    j = is_generalized_group_mapping(S, pipe.green, pipe.congruences, pipe.classes)
    verdict = j is not None and gaschutz_check(pipe.groups[j][0], p)
    report = analyze(S, p)
    if verdict != (report.exists and report.k_total == 1):
        raise ConsistencyError(
            f"generalized group mapping test says {verdict}, "
            f"analysis says exists={report.exists}, k_total={report.k_total}"
        )
    return verdict
