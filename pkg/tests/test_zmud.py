import pytest
from sympy import primefactors

from semirep.constructions import builtin
from semirep.corpus import corpus_groups
from semirep.errors import NotPrimeOrZero
from semirep.grouptheory import (
    as_group,
    as_normal,
    min_normal_generators,
    normal_subgroups,
    p_core,
    socle_data,
)
from semirep.zmud import (
    check_characteristic,
    faithful_cr_exists,
    gaschutz_check,
    monotonicity_audit,
    obstruction_primes,
    zmud_number,
)

GROUPS = corpus_groups(24)
IDS = [name for name, _ in GROUPS]


def grp(expr):
    return as_group(builtin(expr))


def a3(G):
    return as_normal(G, [G.parent.label_index(x) for x in ("p012", "p120", "p201")])


def test_existence_examples():
    S3 = grp("symmetric(3)")
    assert faithful_cr_exists(S3, a3(S3), 2)
    assert not faithful_cr_exists(S3, a3(S3), 3)
    Z6 = grp("cyclic(6)")
    assert not faithful_cr_exists(Z6, Z6.whole(), 2)
    for expr in ("klein4", "quaternion8", "alternating(5)"):
        G = grp(expr)
        assert faithful_cr_exists(G, G.whole(), 0)


def test_zmud_examples():
    S3 = grp("symmetric(3)")
    assert zmud_number(S3, a3(S3), 0).k == 1
    V = grp("klein4")
    res = zmud_number(V, V.whole(), 0)
    assert (res.exists, res.k) == (True, 2)
    assert zmud_number(V, V.trivial(), 2).k == 0
    res = zmud_number(V, V.whole(), 2)
    assert (res.exists, res.k, res.obstruction) == (False, None, 2)
    assert res.to_dict() == {"char": 2, "exists": False, "k": None, "witness": None, "obstruction": 2}


def test_gaschutz():
    assert gaschutz_check(grp("symmetric(3)"), 0)
    assert not gaschutz_check(grp("klein4"), 0)
    assert not gaschutz_check(grp("symmetric(3)"), 3)
    assert gaschutz_check(grp("cyclic(1)"), 2)


@pytest.mark.parametrize("p", [1, 4, 6, -3, 9])
def test_bad_characteristic(p):
    with pytest.raises(NotPrimeOrZero):
        check_characteristic(p)


@pytest.mark.parametrize("name,S", GROUPS, ids=IDS)
def test_zhmud_criterion(name, S):
    G = as_group(S)
    soc = socle_data(G)
    k_socle = min_normal_generators(G, soc.socle)[0]
    for p in [0] + primefactors(G.order):
        res = zmud_number(G, G.whole(), p, soc)
        for m in range(5):
            criterion = (p == 0 or soc.A.order % p != 0) and k_socle <= m
            assert (res.exists and res.k <= m) == criterion


@pytest.mark.parametrize("name,S", GROUPS, ids=IDS)
def test_monotone_and_obstructions(name, S):
    G = as_group(S)
    soc = socle_data(G)
    assert monotonicity_audit(G, soc)
    for N in normal_subgroups(G):
        primes = obstruction_primes(G, N, soc)
        assert primes == primefactors((soc.A & N).order)
        for p in primefactors(G.order):
            assert (p in primes) == (not faithful_cr_exists(G, N, p, soc))
            assert (p in primes) == (not p_core(N.as_group(), p).is_trivial)
