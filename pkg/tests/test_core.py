import numpy as np
import pytest

from semirep.core import (
    Semigroup,
    Transformation,
    adjoin_identity,
    associativity_witness,
    build_from_cayley,
    closure_from_transformations,
    direct_product,
    format_cayley,
    parse_cayley,
    parse_transformations,
    read_cayley,
    read_transformations,
)
from semirep.constructions import builtin, cyclic
from semirep.errors import EmptyGeneratorSet, IndexOutOfRange, NonAssociative
from semirep.grouptheory import as_group


def brute_associative(table):
    n = len(table)
    return all(
        table[table[a][b]][c] == table[a][table[b][c]]
        for a in range(n) for b in range(n) for c in range(n)
    )


def test_left_zero_has_no_identity():
    S = build_from_cayley([[0, 0], [1, 1]])
    assert S.n == 2
    assert S.identity is None


def test_z2_identity():
    S = build_from_cayley([[0, 1], [1, 0]])
    assert S.identity == 0


def test_non_associative_witness():
    with pytest.raises(NonAssociative) as info:
        build_from_cayley([[0, 1], [0, 0]])
    a, b, c = info.value.witness
    T = [[0, 1], [0, 0]]
    assert T[T[a][b]][c] != T[a][T[b][c]]


def test_skip_check_accepts_bad_table():
    S = build_from_cayley([[0, 1], [0, 0]], check=False)
    assert associativity_witness(S.table) is not None


@pytest.mark.parametrize("table", [[[0, 2]], [[0, 1], [2, 0]], [[-1, 0], [0, 0]]])
def test_bad_shapes(table):
    with pytest.raises(IndexOutOfRange):
        build_from_cayley(table)


def test_table_is_read_only():
    S = cyclic(3)
    with pytest.raises(ValueError):
        S.table[0, 0] = 1


def test_closure_all_maps_on_two_points():
    S = closure_from_transformations([(0, 1), (1, 0), (0, 0), (1, 1)])
    assert S.n == 4


def test_closure_generates_t3():
    S = closure_from_transformations([(1, 2, 0), (1, 0, 2), (0, 0, 2)])
    assert S.n == 27
    assert brute_associative(S.rows)


def test_permutations_and_a_constant_stay_small():
    # constants absorb permutations on both sides: S_3 plus 3 constants
    S = closure_from_transformations([(1, 2, 0), (1, 0, 2), (0, 0, 0)])
    assert S.n == 9


def test_closure_identity_only():
    assert closure_from_transformations([(0, 1, 2)]).n == 1


def test_closure_empty():
    with pytest.raises(EmptyGeneratorSet):
        closure_from_transformations([])


def test_closure_mixed_degree():
    with pytest.raises(IndexOutOfRange):
        closure_from_transformations([(0, 1), (0, 1, 2)])


def test_transformation_composes_left_to_right():
    s, t = Transformation([1, 2, 0]), Transformation([0, 0, 2])
    # apply s first, then t
    assert s.then(t) == (0, 2, 0)


def test_closure_matches_right_action():
    gens = [(1, 2, 0), (0, 0, 2)]
    S = closure_from_transformations(gens)
    maps = {}
    # every element is a word in a, b; recompute its map and check products
    for i, lab in enumerate(S.labels):
        t = Transformation(range(3))
        for ch in lab:
            t = t.then(Transformation(gens["ab".index(ch)]))
        maps[i] = t
    for i in range(S.n):
        for j in range(S.n):
            assert maps[S.mul(i, j)] == maps[i].then(maps[j])


def test_adjoin_identity_to_left_zero():
    M = adjoin_identity(Semigroup([[0, 0], [1, 1]]))
    assert M.n == 3
    assert M.identity == 2


def test_adjoin_identity_even_to_a_monoid():
    M = adjoin_identity(cyclic(2))
    assert M.n == 3
    assert M.identity == 2  # 0 no longer fixes the new element
    assert M.mul(0, 2) == 0
    assert all(M.mul(2, s) == s == M.mul(s, 2) for s in range(3))
    assert M.labels[2] == "1'"  # "1" is taken by the generator of Z/2


def test_adjoin_identity_trivial():
    assert adjoin_identity(Semigroup([[0]])).n == 2


def test_direct_products():
    V = direct_product(cyclic(2), cyclic(2))
    assert V.n == 4
    assert as_group(V).is_abelian
    Z6 = as_group(direct_product(cyclic(2), cyclic(3)))
    assert max(Z6.element_order(x) for x in Z6.carrier) == 6
    S = builtin("symmetric(3)")
    P = direct_product(S, Semigroup([[0]]))
    assert np.array_equal(P.table, S.table)


def test_cayley_round_trip(tmp_path):
    S = builtin("QG(cyclic(4))")
    text = format_cayley(S)
    assert parse_cayley(text) == S
    path = tmp_path / "q.cayley"
    path.write_text("# Q(Z/4)\n" + text)
    assert read_cayley(path) == S


def test_cayley_without_labels():
    S = parse_cayley("2\n0 1\n1 0\n")
    assert S.labels == ("0", "1")


def test_cayley_bad_trailer():
    with pytest.raises(IndexOutOfRange):
        parse_cayley("1\n0\nextra\n")


def test_transformation_file(tmp_path):
    path = tmp_path / "t2.trans"
    path.write_text("2\n1 0\n0 0\n")
    assert read_transformations(path).n == 4
    with pytest.raises(IndexOutOfRange):
        parse_transformations("3\n0 1\n")


def test_equality_respects_labels():
    a = Semigroup([[0, 1], [1, 0]], ["e", "g"])
    b = Semigroup([[0, 1], [1, 0]], ["x", "y"])
    assert a != b
    assert hash(a) == hash(Semigroup([[0, 1], [1, 0]], ["e", "g"]))
