"""The built-in corpus of small groups and semigroups, and the cross-check suite
run by ``semirep oracle``."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import oracle
from .analyzer import analyze
from .constructions import (
    PosetSpec,
    boolean_lattice,
    build_QG,
    build_semilattice,
    builtin,
    chain,
)
from .congruence import (
    all_ggm_congruences,
    classify_j_classes,
    compatibility_audit,
    ggm_all,
    is_generalized_group_mapping,
    meet_all,
    n_j_choice_audit,
    relative_kernels,
)
from .core import Semigroup, associativity_witness
from .errors import SemirepError, TooLarge
from .green import compute_green, j_order, maximal_subgroup, stability_audit
from .grouptheory import (
    as_group,
    complement_audit,
    min_normal_generators,
    min_normal_generators_reduced,
    minimal_normal_subgroups,
    normal_subgroups,
    socle_data,
    verify_group,
)
from .zmud import monotonicity_audit, zmud_number

log = logging.getLogger(__name__)

GROUP_EXPRESSIONS = (
    [f"cyclic({m})" for m in range(1, 25)]
    + [f"dihedral({m})" for m in range(3, 13)]
    + [f"symmetric({m})" for m in range(1, 5)]
    + ["alternating(4)", "klein4", "quaternion8"]
    + ["elementary_abelian(2,3)", "elementary_abelian(2,4)", "elementary_abelian(3,2)"]
    + ["product(klein4, cyclic(3))", "product(symmetric(3), cyclic(2))", "alternating(5)"]
)

SEMIGROUP_EXPRESSIONS = (
    "M(2,2)", "M(1,3)", "M(1,4)", "M(1,5)", "T(1)", "T(2)", "T(3)",
    "union_quotient(symmetric(3), alternating(3))",
    "union_quotient(cyclic(4), [0, 2])",
    "union_quotient(cyclic(6), [0, 3])",
    "union_quotient(cyclic(6), [0, 2, 4])",
    "union_quotient(klein4, [0, 1])",
    "QG(cyclic(1))", "QG(cyclic(2))", "QG(cyclic(4))", "QG(cyclic(6))",
    "QG(symmetric(3))", "QG(klein4)", "QG(dihedral(4))", "QG(quaternion8)",
    "adjoin_identity(cyclic(2))", "adjoin_identity(chain(3))",
    "product(chain(2), cyclic(3))", "product(boolean(1), symmetric(3))",
)

# Small hand-written tables: left and right zero bands, the 2-element null
# semigroup, and the Brandt semigroup B_2.
TABLES = {
    "left_zero_2": [[0, 0], [1, 1]],
    "right_zero_2": [[0, 1], [0, 1]],
    "null_2": [[0, 0], [0, 0]],
    # B_2: 0, e11, e12, e21, e22 with e_ij e_kl = e_il if j == k else 0
    "brandt_B2": [
        [0, 0, 0, 0, 0],
        [0, 1, 2, 0, 0],
        [0, 0, 0, 1, 2],
        [0, 3, 4, 0, 0],
        [0, 0, 0, 3, 4],
    ],
}


def corpus_groups(max_order: int = 24) -> list[tuple[str, Semigroup]]:
    out = []
    for expr in GROUP_EXPRESSIONS:
        G = builtin(expr)
        if G.n <= max_order:
            out.append((expr, G))
    return out


def random_meet_semilattice(seed: int, points: int = 4, max_size: int = 12) -> PosetSpec:
    """A random intersection-closed family of subsets of ``points`` points."""
    rng = np.random.default_rng(seed)
    full = (1 << points) - 1
    while True:
        family = {full} | {int(x) for x in rng.integers(0, full + 1, size=int(rng.integers(2, 6)))}
        changed = True
        while changed:
            new = {a & b for a in family for b in family} - family
            family |= new
            changed = bool(new)
        if len(family) <= max_size:
            break
    elems = sorted(family, key=lambda s: (bin(s).count("1"), s))
    idx = {s: i for i, s in enumerate(elems)}
    strict = [(a, b) for a in elems for b in elems if a != b and a & b == a]
    covers = tuple(
        (idx[a], idx[b]) for a, b in strict
        if not any(a != c != b and a & c == a and c & b == c for c in elems)
    )
    return PosetSpec(len(elems), covers)


def corpus_semilattices(seed: int = 0) -> list[tuple[str, Semigroup]]:
    out = [(f"chain({n})", build_semilattice(chain(n))) for n in range(1, 8)]
    out += [(f"boolean({k})", build_semilattice(boolean_lattice(k))) for k in range(0, 4)]
    for i in range(3):
        s = seed + i
        out.append((f"random_semilattice(seed={s})", build_semilattice(random_meet_semilattice(s))))
    return out


def corpus_semigroups(seed: int = 0) -> list[tuple[str, Semigroup]]:
    out = [(name, Semigroup(t)) for name, t in TABLES.items()]
    out += [(expr, builtin(expr)) for expr in SEMIGROUP_EXPRESSIONS]
    out += corpus_semilattices(seed)
    out += corpus_groups(30)
    return out


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _run(name: str, fn: Callable[[], object]) -> Check:
    try:
        out = fn()
    except TooLarge as exc:
        return Check(name, True, f"skipped: {exc}")
    except (SemirepError, AssertionError) as exc:
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    if out is False:
        return Check(name, False, "check returned False")
    return Check(name, True, "" if out in (None, True) else str(out))


def _group_checks(name: str, S: Semigroup) -> Iterator[Check]:
    G = as_group(S)
    lattice = oracle.all_normal_subgroups(G)
    expected = [N.carrier for N in lattice.all_normals]

    def normals_agree():
        fast = [N.carrier for N in normal_subgroups(G)]
        assert sorted(map(sorted, fast)) == sorted(map(sorted, expected)), "normal subgroup lists differ"

    def minimal_agree():
        fast = {N.carrier for N in minimal_normal_subgroups(G)}
        assert fast == set(oracle.oracle_socle(G, lattice).minimal), "minimal normals differ"

    yield _run(f"{name}: normal subgroups", normals_agree)
    yield _run(f"{name}: minimal normal subgroups", minimal_agree)
    yield _run(f"{name}: dilworth", lambda: oracle.dilworth_check(G, lattice))
    yield _run(f"{name}: complement", lambda: complement_audit(G))
    yield _run(f"{name}: monotonicity", lambda: monotonicity_audit(G))
    soc = socle_data(G)
    primes = [0] + sorted({q for q in (2, 3, 5) if G.order % q == 0})
    for N in lattice.all_normals:
        label = f"{name}: N of order {N.order} ({min(N.carrier)}..)"
        for p in primes:
            yield _run(f"{label}, p={p}", lambda N=N, p=p: oracle.crosscheck_equivalences(G, N, p) and None)
        yield _run(
            f"{label}: zmud vs oracle",
            lambda N=N: _zmud_matches(G, N, soc),
        )
        yield _run(f"{label}: reduction", lambda N=N: reduction_matches(G, N, soc))


def reduction_matches(G, N, soc=None) -> bool:
    """Direct generation count of S(G)∩N equals the Sylow reduction."""
    if soc is None:
        soc = socle_data(G)
    direct = min_normal_generators(G, soc.socle & N)[0]
    reduced = min_normal_generators_reduced(G, N, soc)
    assert direct == reduced, f"direct {direct} != reduced {reduced}"
    return True


def _zmud_matches(G, N, soc):
    res = zmud_number(G, N, 0, soc)
    s_n = soc.socle & N
    assert res.k == oracle.exhaustive_min_normal_gen(G, s_n), "zmud k differs from oracle"


def _semilattice_check(name: str, S: Semigroup) -> Check:
    def go():
        k = analyze(S, 0).k_total
        expected = len(oracle.join_irreducibles(S))
        assert k == expected, f"k_total={k}, join irreducibles={expected}"
    return _run(f"{name}: k_total = #join irreducibles", go)


def _qg_check(name: str, G: Semigroup) -> Check:
    def go():
        k = analyze(build_QG(G), 0).k_total
        expected = len(oracle.meet_irreducible_normals(G))
        assert k == expected, f"k_total={k}, meet irreducible normals={expected}"
    return _run(f"QG({name}): k_total = #meet irreducible normals", go)


def structural_audit(S: Semigroup, seed: int = 0) -> bool:
    """Congruence, N_J, socle and generalized-group-mapping audits for one semigroup."""
    green = compute_green(S)
    assert stability_audit(S, green), "stability fails"
    order = j_order(green)
    congs = all_ggm_congruences(S, green)
    for j, c in congs.items():
        assert compatibility_audit(S, c, seed=seed), f"≡_J for class {j} is not compatible"
    ggm = ggm_all(S, green, congs)
    for perm in (list(congs.values()), list(congs.values())[::-1]):
        assert meet_all(perm, S.n) == ggm.congruence, "GGM depends on fold order"
    kernels = relative_kernels(S, green, congs, order)
    for j in congs:
        n_j_choice_audit(S, green, j, congs, order)
        H = maximal_subgroup(S, green, j)
        G = verify_group(S, H.carrier)
        complement_audit(G)
        socle_data(G)
        if congs[j].is_trivial:
            assert kernels[j].order == H.order, "trivial ≡_J but N_J != G_J"
    classes = classify_j_classes(S, green, congs, order)
    is_generalized_group_mapping(S, green, congs, classes)
    return True


def _semigroup_checks(name: str, S: Semigroup, seed: int = 0) -> Iterator[Check]:
    yield _run(f"{name}: associativity", lambda: associativity_witness(S.table) is None)
    yield _run(f"{name}: structure", lambda: structural_audit(S, seed))
    yield _run(f"{name}: analyze", lambda: analyze(S, 0) and None)


def run_suite(max_order: int = 24, seed: int = 0) -> list[Check]:
    """Every oracle cross-check over the corpus, groups limited to ``max_order``."""
    checks: list[Check] = []
    for name, G in corpus_groups(max_order):
        log.info("group %s", name)
        checks.extend(_group_checks(name, G))
        if G.n <= 12:
            checks.append(_qg_check(name, G))
    for name, S in corpus_semilattices(seed):
        checks.append(_semilattice_check(name, S))
    for name, S in corpus_semigroups(seed):
        if S.n <= max(max_order, 30):
            checks.extend(_semigroup_checks(name, S, seed))
    return checks
