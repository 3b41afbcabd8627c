import pytest

from semirep import oracle
from semirep.constructions import build_semilattice, builtin, chain
from semirep.corpus import corpus_groups, random_meet_semilattice, run_suite
from semirep.errors import NotASemilattice, TooLarge
from semirep.grouptheory import as_group, min_normal_generators, minimal_normal_subgroups

GROUPS = corpus_groups(24)
IDS = [name for name, _ in GROUPS]


def grp(expr):
    return as_group(builtin(expr))


def test_normal_lattices():
    assert [N.order for N in oracle.all_normal_subgroups(grp("cyclic(4)")).all_normals] == [1, 2, 4]
    assert [N.order for N in oracle.all_normal_subgroups(grp("symmetric(3)")).all_normals] == [1, 3, 6]
    assert len(oracle.all_normal_subgroups(grp("klein4"))) == 5
    with pytest.raises(TooLarge):
        oracle.all_normal_subgroups(grp("cyclic(12)"), max_order=10)


def test_join_irreducibles():
    assert oracle.join_irreducibles(build_semilattice(chain(3))) == {1, 2}
    assert oracle.join_irreducibles(builtin("boolean(2)")) == {1, 2}
    assert oracle.join_irreducibles(builtin("chain(1)")) == set()
    with pytest.raises(NotASemilattice):
        oracle.join_irreducibles(builtin("cyclic(2)"))


def test_meet_irreducible_normals():
    pairs = oracle.meet_irreducible_normals(grp("cyclic(4)"))
    assert [(M.order, Mbar.order) for M, Mbar in pairs] == [(1, 2), (2, 4)]
    pairs = oracle.meet_irreducible_normals(grp("klein4"))
    assert [(M.order, Mbar.order) for M, Mbar in pairs] == [(2, 4)] * 3
    pairs = oracle.meet_irreducible_normals(grp("alternating(5)"))
    assert [(M.order, Mbar.order) for M, Mbar in pairs] == [(1, 60)]


def test_exhaustive_generation():
    V = grp("klein4")
    assert oracle.exhaustive_min_normal_gen(V, V.carrier) == 2
    assert oracle.exhaustive_min_normal_gen(V, [V.identity]) == 0
    S3 = grp("symmetric(3)")
    A3 = minimal_normal_subgroups(S3)[0]
    assert oracle.exhaustive_min_normal_gen(S3, A3) == 1
    E = grp("elementary_abelian(2,4)")
    with pytest.raises(TooLarge):
        oracle.exhaustive_min_normal_gen(E, E.carrier, limit=100)


@pytest.mark.parametrize("name,S", GROUPS, ids=IDS)
def test_dilworth_and_minimals(name, S):
    G = as_group(S)
    lattice = oracle.all_normal_subgroups(G)
    assert oracle.dilworth_check(G, lattice)
    fast = {M.carrier for M in minimal_normal_subgroups(G)}
    assert fast == set(oracle.oracle_socle(G, lattice).minimal)


@pytest.mark.parametrize("name,S", GROUPS, ids=IDS)
def test_fast_generation_matches_exhaustive(name, S):
    G = as_group(S)
    for N in oracle.all_normal_subgroups(G).all_normals:
        assert min_normal_generators(G, N)[0] == oracle.exhaustive_min_normal_gen(G, N)


def test_crosscheck_examples():
    S4 = grp("symmetric(4)")
    V4 = minimal_normal_subgroups(S4)[0]
    rep = oracle.crosscheck_equivalences(S4, V4, 0)
    assert rep["k_socle"] == rep["k_fast"] == 1
    S3 = grp("symmetric(3)")
    A3 = minimal_normal_subgroups(S3)[0]
    rep = oracle.crosscheck_equivalences(S3, A3, 3)
    assert rep["exists_by_order"] is rep["exists_by_core"] is False
    A5 = grp("alternating(5)")
    for p in (0, 2, 3, 5):
        rep = oracle.crosscheck_equivalences(A5, A5.carrier, p)
        assert rep["k_A"] == 0 and rep["k_fast"] == 1 and rep["exists_fast"]


def test_oracle_p_core():
    assert len(oracle.oracle_p_core(grp("symmetric(4)"), 2)) == 4
    assert len(oracle.oracle_p_core(grp("symmetric(3)"), 2)) == 1


def test_random_semilattices_are_small_and_seeded():
    for seed in range(5):
        spec = random_meet_semilattice(seed)
        assert spec.n <= 12
        assert random_meet_semilattice(seed) == spec


def test_suite_small():
    checks = run_suite(max_order=8, seed=1)
    assert checks and all(c.ok for c in checks), [c for c in checks if not c.ok]

