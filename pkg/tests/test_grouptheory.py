import itertools

import pytest

from semirep import oracle
from semirep.constructions import builtin
from semirep.corpus import corpus_groups
from semirep.errors import NotClosed, NotNormal
from semirep.grouptheory import (
    as_group,
    as_normal,
    center,
    complement_audit,
    intersect_with_normal,
    min_normal_generators,
    min_normal_generators_reduced,
    minimal_normal_subgroups,
    normal_closure,
    normal_subgroups,
    p_core,
    socle_data,
    sylow_decompose,
    verify_group,
)

GROUPS = corpus_groups(24)
IDS = [name for name, _ in GROUPS]


def grp(expr):
    return as_group(builtin(expr))


def by_label(G, *labels):
    return [G.parent.label_index(x) for x in labels]


def test_verify_group_on_h_class():
    S = builtin("M(2,2)")
    from semirep.green import compute_green, maximal_subgroup
    g = compute_green(S)
    units = next(J for J in g.j_classes if len(J.elements) == 6)
    H = maximal_subgroup(S, g, units.id)
    assert verify_group(S, H.carrier).order == 6


def test_a3_and_not_closed():
    S3 = builtin("symmetric(3)")
    assert verify_group(S3, by_label(as_group(S3), "p012", "p120", "p201")).order == 3
    with pytest.raises(NotClosed):
        verify_group(S3, by_label(as_group(S3), "p012", "p102", "p120"))


def test_normal_closures():
    S3 = grp("symmetric(3)")
    assert normal_closure(S3, [S3.identity]).is_trivial
    assert normal_closure(S3, by_label(S3, "p120")).order == 3
    assert normal_closure(S3, by_label(S3, "p102")).order == 6
    V = grp("klein4")
    assert normal_closure(V, [1]).order == 2


def test_minimal_normals():
    S3 = grp("symmetric(3)")
    mins = minimal_normal_subgroups(S3)
    assert [M.order for M in mins] == [3] and mins[0].is_abelian
    assert [M.order for M in minimal_normal_subgroups(grp("klein4"))] == [2, 2, 2]
    assert [M.order for M in minimal_normal_subgroups(grp("cyclic(6)"))] == [2, 3]
    assert [M.order for M in minimal_normal_subgroups(grp("quaternion8"))] == [2]


@pytest.mark.parametrize("expr,a,t", [
    ("symmetric(4)", 4, 1),
    ("alternating(5)", 1, 60),
    ("cyclic(6)", 6, 1),
    ("dihedral(4)", 2, 1),
    ("product(klein4, cyclic(3))", 12, 1),
])
def test_socle(expr, a, t):
    soc = socle_data(grp(expr))
    assert (soc.A.order, soc.T.order, soc.socle.order) == (a, t, a * t)


def test_socle_a5_center():
    G = grp("alternating(5)")
    soc = socle_data(G)
    assert center(G, soc.T).is_trivial
    assert soc.nonabelian_factors == [soc.T]


def test_intersections():
    G = grp("symmetric(3)")
    soc = socle_data(G)
    whole = intersect_with_normal(G, soc, G.whole())
    assert (whole.A, whole.T, whole.S) == (soc.A, soc.T, soc.socle)
    A3 = as_normal(G, by_label(G, "p012", "p120", "p201"))
    assert intersect_with_normal(G, soc, A3).S.order == 3
    trivial = intersect_with_normal(G, soc, G.trivial())
    assert trivial.S.is_trivial and trivial.A.is_trivial and trivial.T.is_trivial


def test_sylow_pieces():
    Z6 = grp("cyclic(6)")
    pieces = sylow_decompose(Z6, Z6.whole())
    assert [(p.p, p.order) for p in pieces] == [(2, 2), (3, 3)]
    V = grp("klein4")
    assert [(p.p, p.order) for p in sylow_decompose(V, V.whole())] == [(2, 4)]
    assert sylow_decompose(V, V.trivial()) == []


def test_p_cores():
    assert p_core(grp("cyclic(6)"), 2).order == 2
    assert p_core(grp("symmetric(3)"), 2).is_trivial
    assert p_core(grp("symmetric(4)"), 2).order == 4


def test_min_normal_generators_examples():
    V = grp("klein4")
    assert min_normal_generators(V, V.trivial()) == (0, ())
    assert min_normal_generators(V, V.whole())[0] == 2
    S3 = grp("symmetric(3)")
    A3 = as_normal(S3, by_label(S3, "p012", "p120", "p201"))
    assert min_normal_generators(S3, A3)[0] == 1


def test_reduced_examples():
    assert min_normal_generators_reduced(grp("cyclic(6)"), grp("cyclic(6)").whole()) == 1
    A5 = grp("alternating(5)")
    assert min_normal_generators_reduced(A5, A5.whole()) == 1
    V = grp("klein4")
    assert min_normal_generators_reduced(V, V.whole()) == 2


def test_not_normal():
    S3 = grp("symmetric(3)")
    with pytest.raises(NotNormal):
        as_normal(S3, by_label(S3, "p012", "p102"))


@pytest.mark.parametrize("name,S", GROUPS, ids=IDS)
def test_normal_subgroups_match_oracle(name, S):
    G = as_group(S)
    fast = [N.carrier for N in normal_subgroups(G)]
    slow = [N.carrier for N in oracle.all_normal_subgroups(G).all_normals]
    assert fast == slow


@pytest.mark.parametrize("name,S", GROUPS, ids=IDS)
def test_group_invariants(name, S):
    G = as_group(S)
    soc = socle_data(G)
    assert (soc.A & soc.T).is_trivial
    assert soc.socle.order == soc.A.order * soc.T.order
    assert center(G, soc.T).is_trivial
    assert complement_audit(G)
    for M in soc.abelian_factors:
        orders = {G.element_order(x) for x in M.carrier if x != G.identity}
        assert len(orders) == 1 and oracle._is_power_of(M.order, orders.pop())
    normals = normal_subgroups(G)
    for N in normals:
        direct = min_normal_generators(G, soc.socle & N)[0]
        assert direct == min_normal_generators_reduced(G, N, soc)
        for p in (2, 3, 5):
            assert ((soc.A & N).order % p != 0) == p_core(N.as_group(), p).is_trivial


@pytest.mark.parametrize("expr", ["klein4", "cyclic(6)", "symmetric(3)", "elementary_abelian(2,3)"])
def test_witness_is_lexicographically_smallest(expr):
    G = grp(expr)
    k, witness = min_normal_generators(G, G.whole())
    assert normal_closure(G, witness).order == G.order
    for tup in itertools.product(sorted(G.carrier), repeat=k):
        if normal_closure(G, tup).order == G.order:
            assert tup == witness
            break
