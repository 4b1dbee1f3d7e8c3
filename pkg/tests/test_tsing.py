from fractions import Fraction

import pytest

from markoff.errors import (
    DegenerateLE,
    InvalidSquareCF,
    NotCoprime,
    PreconditionViolation,
    RangeError,
)
from markoff.tree import iter_tree, node_at
from markoff.tsing import (
    SquareCF,
    TSingularity,
    append8_suite,
    branch_le,
    branch_mutation_seed,
    branch_seed,
    cf_of_pair,
    cf_of_pair_strict,
    digit_family,
    digit_family_checks,
    digit_structure,
    hj_label,
    hj_of_tsing,
    insert,
    juxtapose,
    ksb_trace,
    le_check,
    le_from_pair,
    le_of_node_path,
    le_of_square,
    opposite_le_checks,
    opposite_le_sum,
    pair_from_le,
    pattern,
    related_cfs,
    square_cf,
    square_cf_of_node,
    square_cf_tree,
    square_from_digits,
)


@pytest.mark.parametrize(
    "n, k, le",
    [(2, 1, []), (5, 1, [3]), (13, 2, [1, 5]), (29, 7, [6, 3]), (34, 5, [3, 1, 5])],
)
def test_le_round_trip(n, k, le):
    assert le_from_pair(TSingularity(n, k)) == le
    assert pair_from_le(le) == TSingularity(n, k)


def test_tsingularity_validation():
    with pytest.raises(NotCoprime):
        TSingularity(4, 2)
    with pytest.raises(PreconditionViolation):
        TSingularity(5, 5)
    with pytest.raises(PreconditionViolation):
        pair_from_le([2, 0])
    with pytest.raises(PreconditionViolation):
        le_from_pair(TSingularity(13, 11))


def test_normalization():
    t = TSingularity(13, 11)
    assert not t.is_normal
    assert t.normalized() == TSingularity(13, 2)
    assert TSingularity(2, 1).is_normal
    assert TSingularity(5, 1).quotient() == Fraction(25, 4)


def test_cf_of_pair():
    assert cf_of_pair(TSingularity(13, 2)) == ([6, 2], False)
    assert cf_of_pair(TSingularity(29, 7)) == ([4, 7], False)
    assert cf_of_pair(TSingularity(5, 1)) == ([5], True)
    with pytest.raises(DegenerateLE):
        cf_of_pair_strict(TSingularity(5, 1))


def test_hirzebruch_jung():
    assert ksb_trace([3]) == [[4], [7, 2, 2, 2]]
    assert hj_of_tsing(TSingularity(5, 1)) == [7, 2, 2, 2]
    assert hj_of_tsing(TSingularity(2, 1)) == [4]
    assert hj_of_tsing(TSingularity(13, 2)) == [7, 5, 2, 2, 2, 2, 2]
    assert hj_of_tsing(TSingularity(13, 11)) == hj_of_tsing(TSingularity(13, 2))
    assert hj_label([5, 2]) == "-5 — -2"


def test_branch_le_matches_tree():
    for n in range(3, 9):
        node = node_at("L" * (n - 2))
        assert branch_le("fibonacci", n) == le_of_node_path(node.path)
    for n in range(1, 8):
        assert branch_le("pell", n) == le_of_node_path("R" * (n - 1))
    with pytest.raises(RangeError):
        branch_le("fibonacci", 2)


def test_opposite_les():
    assert le_of_node_path("L") == [1, 5]
    assert le_of_node_path("R") == [6, 3]
    assert opposite_le_sum("L").ok
    assert opposite_le_checks(4).ok
    with pytest.raises(PreconditionViolation):
        opposite_le_sum("")


@pytest.mark.parametrize(
    "n, k, digits",
    [(5, 1, (6, 4)), (13, 2, (6, 1, 3, 6)), (29, 7, (4, 6, 8, 4))],
)
def test_square_cf(n, k, digits):
    sq = square_cf(TSingularity(n, k))
    assert sq.digits == digits
    assert sq.value() == Fraction(n * n, n * k - 1)
    assert sq.s == len(digits) // 2


def test_square_cf_decorations():
    sq = square_cf(TSingularity(5, 1))
    assert (sq.v, sq.big_w, sq.big_v) == (2, 4, 5)
    flipped = square_cf(TSingularity(13, 11))
    assert flipped.digits == (6, 1, 3, 6)
    assert flipped.note
    with pytest.raises(PreconditionViolation):
        square_cf(TSingularity(2, 1))


def test_related_cfs():
    related = related_cfs(TSingularity(13, 2))
    assert related["nk+1"] == [6, 3, 1, 6]
    assert related["n(n-k)-1"] == [1, 5, 3, 1, 6]
    assert related["n(n-k)+1"] == [1, 5, 1, 3, 6]
    assert related_cfs(TSingularity(5, 1))["nk+1"] == [4, 6]


def test_append8():
    for node in iter_tree(3):
        assert append8_suite(square_cf_of_node(node)).ok, node.path
    with pytest.raises(PreconditionViolation):
        append8_suite(SquareCF((4, 6), 7, 1))


def test_square_from_digits():
    sq = square_from_digits([6, 1, 3, 6])
    assert (sq.g, sq.w, sq.v) == (13, 2, 1)
    with pytest.raises(InvalidSquareCF):
        square_from_digits([6, 2])


def test_pattern_and_insert():
    assert pattern([1, 5], 5) == [1, 5, 1, 5, 1]
    assert pattern([], 0) == []
    assert insert(3, 5, [6] + pattern([1, 5], 5) + [6]) == [6, 1, 5, 1, 3, 5, 1, 6]
    assert insert(6, 4, pattern([4, 8], 7)) == [4, 8, 4, 6, 8, 4, 8, 4]
    with pytest.raises(RangeError):
        pattern([1], -1)
    with pytest.raises(RangeError):
        insert(3, 4, [1, 2])


def test_juxtapose():
    sq5, sq13, sq29 = (square_cf(TSingularity(n, k)) for n, k in ((5, 1), (13, 2), (29, 7)))
    assert juxtapose(sq13, sq5).digits == (6, 3, 1, 6, 8, 1, 3, 6)
    assert juxtapose(sq13, sq5).g == 194
    assert juxtapose(sq5, sq29).digits == (4, 6, 8, 1, 3, 8, 6, 4)
    sq194 = juxtapose(sq13, sq5)
    assert juxtapose(sq194, sq5).digits == (6, 3, 1, 8, 6, 1, 3, 6, 8, 1, 3, 6)
    assert juxtapose(sq194, sq5).g == 2897
    with pytest.raises(PreconditionViolation):
        juxtapose(sq13, SquareCF((4,), 2, 1))


def test_branch_seeds():
    assert branch_seed("fibonacci", 3).digits == (6, 1, 3, 6)
    assert branch_seed("fibonacci", 4).digits == (6, 1, 5, 3, 1, 6)
    assert branch_seed("pell", 1).digits == (6, 4)
    assert branch_seed("pell", 2).digits == (4, 6, 8, 4)
    with pytest.raises(RangeError):
        branch_seed("pell", 0)


def test_branch_mutation_seeds():
    seed = branch_mutation_seed("fibonacci", 3)
    assert seed.g == 194
    assert seed.digits == (6, 3, 1, 6, 8, 1, 3, 6)
    assert branch_mutation_seed("pell", 1).digits == (6, 1, 3, 6)
    assert branch_mutation_seed("pell", 2).g == 433
    assert branch_mutation_seed("pell", 2).digits == (4, 6, 8, 1, 3, 8, 6, 4)
    for n in range(3, 7):
        assert branch_mutation_seed("fibonacci", n).g == node_at("L" * (n - 3) + "LR").g


def test_le_of_square():
    assert le_of_square(SquareCF((6, 4), 5, 1)) == [3]
    assert le_of_square(SquareCF((6, 1, 3, 6), 13, 2)) == [1, 5]
    assert le_of_square(SquareCF((6, 1, 5, 3, 1, 6), 34, 5)) == [3, 1, 5]
    with pytest.raises(InvalidSquareCF):
        le_of_square(SquareCF((6, 1, 3), 13, 2))


def test_le_round_trip_through_square_cf(rng):
    for _ in range(500):
        le = [rng.randint(1, 9) for _ in range(rng.randint(1, 8))]
        t = pair_from_le(le)
        sq = square_cf(t)
        assert le_of_square(sq) == le
        assert le_from_pair(t) == le
        assert le_check(sq).ok


def test_square_tree():
    tree = square_cf_tree(4)
    assert len(tree) == 31
    assert tree["LR"].digits == (6, 3, 1, 6, 8, 1, 3, 6)
    for sq in tree.values():
        assert le_check(sq).ok
        assert digit_structure(sq).ok


def test_digit_families():
    assert digit_family("") == "4"
    assert digit_family("RL") == "4"
    assert digit_family("LRR") == ""
    assert digit_family("LL") == "5"
    assert digit_family_checks(4).ok
