from fractions import Fraction

import pytest

from markoff.errors import NotExtendable, NotMarkoff, PreconditionViolation, RangeError, UnsupportedPath
from markoff.tree import (
    SBFraction,
    branch,
    branch_checks,
    branch_path,
    children,
    complementary_weights,
    decorations_direct,
    fibonacci,
    fraction_of_path,
    growth_checks,
    growth_coefficients,
    growth_sequence,
    is_left_position,
    iter_below,
    iter_level,
    iter_paths,
    iter_tree,
    lucas,
    markoff_of_fraction,
    mirror,
    mutate,
    node_at,
    node_checks,
    node_from_triple,
    parent,
    path_of_fraction,
    pell,
    sb_split,
    somewhat_sharp_bounds,
    third_element,
    tree_dump,
    tree_rows,
    weight_of_fraction,
)

LEVEL_3 = [
    (1, 89, 34),
    (34, 1325, 13),
    (13, 7561, 194),
    (194, 2897, 5),
    (5, 6466, 433),
    (433, 37666, 29),
    (29, 14701, 169),
    (169, 985, 2),
]


def test_root_decorations(root_node):
    assert root_node.triple == (1, 5, 2)
    assert root_node.r == (0, 2, 1)
    assert root_node.s == (1, 1, 1)
    assert root_node.w == (-1, 1, 1)
    assert root_node.v == (10, 2, 5)


def test_mutation_rules(root_node):
    left, right = children(root_node)
    assert left.triple == (1, 13, 5)
    assert left.r == (0, 5, 2)
    assert left.w == (-1, 2, 1)
    assert right.triple == (5, 29, 2)
    assert right.r == (2, 12, 1)
    assert right.w == (1, 7, 1)
    with pytest.raises(UnsupportedPath):
        mutate(root_node, "X")


@pytest.mark.parametrize(
    "path, triple, r, s, w, v",
    [
        ("LR", (13, 194, 5), (5, 75, 2), (2, 29, 1), (2, 31, 1), (1, 5, 2)),
        ("RL", (5, 433, 29), (2, 179, 12), (1, 74, 5), (1, 104, 7), (2, 25, 2)),
    ],
)
def test_decorated_nodes(path, triple, r, s, w, v):
    node = node_at(path)
    assert node.triple == triple
    assert node.r == r
    assert node.s == s
    assert node.w == w
    assert node.v == v


def test_level_three():
    assert [node.triple for node in iter_level(3)] == LEVEL_3


def test_parent_inverts_mutation():
    for node in iter_tree(4):
        if node.path:
            assert parent(node) == node_at(node.path[:-1])
    with pytest.raises(PreconditionViolation):
        parent(node_at(""))


def test_decorations_direct_agree_with_mutation():
    for node in iter_tree(5):
        direct = decorations_direct(*node.triple)
        assert (direct["r"], direct["s"], direct["w"], direct["v"]) == (node.r, node.s, node.w, node.v)
    assert node_from_triple(13, 194, 5, "LR") == node_at("LR")


def test_decorations_direct_rejects_bad_triples():
    with pytest.raises(NotMarkoff):
        decorations_direct(2, 5, 3)
    with pytest.raises(NotMarkoff):
        decorations_direct(5, 2, 1)


def test_node_invariants():
    for node in iter_tree(6):
        assert node_checks(node).ok, node.path


def test_third_element():
    assert third_element(1, 2) == 5
    assert third_element(13, 5) == 194
    assert third_element(433, 29) == 37666
    with pytest.raises(NotExtendable):
        third_element(4, 5)


def test_somewhat_sharp_bounds():
    for node in iter_tree(6):
        assert somewhat_sharp_bounds(*node.triple).ok


@pytest.mark.slow
def test_node_invariants_to_depth_12():
    for node in iter_tree(12):
        assert node_checks(node).ok, node.path
        assert somewhat_sharp_bounds(*node.triple).ok, node.path
        direct = decorations_direct(*node.triple)
        assert direct["w"] == node.w, node.path


def test_stern_brocot_indexing():
    assert fraction_of_path("LR") == SBFraction(3, 2)
    assert path_of_fraction(SBFraction(3, 2)) == "LR"
    assert path_of_fraction(SBFraction(1, 1)) == ""
    assert sb_split(SBFraction(3, 2)) == (SBFraction(2, 1), SBFraction(1, 1))
    assert markoff_of_fraction(SBFraction(1, 0)) == 1
    assert markoff_of_fraction(SBFraction(0, 1)) == 2
    assert markoff_of_fraction(SBFraction(5, 3)) == 7561
    assert weight_of_fraction(SBFraction(3, 2)) == 75


def test_stern_brocot_round_trip():
    for node in iter_tree(6):
        assert path_of_fraction(fraction_of_path(node.path)) == node.path


def test_mirror_and_paths():
    assert mirror("LLR") == "RRL"
    assert mirror("-") == ""
    with pytest.raises(UnsupportedPath):
        node_at("LXR")


def test_sequences_with_negative_indices():
    assert [fibonacci(i) for i in range(-3, 8)] == [2, -1, 1, 0, 1, 1, 2, 3, 5, 8, 13]
    assert [lucas(i) for i in range(5)] == [2, 1, 3, 4, 7]
    assert [pell(i) for i in range(-1, 6)] == [1, 0, 1, 2, 5, 12, 29]


@pytest.mark.parametrize("n", range(2, 9))
def test_fibonacci_branch(n):
    node = branch("fibonacci", n)
    assert node == node_at("L" * (n - 2))
    assert node.triple == (1, fibonacci(2 * n + 1), fibonacci(2 * n - 1))
    assert branch_checks("fibonacci", n).ok


@pytest.mark.parametrize("n", range(1, 8))
def test_pell_branch(n):
    node = branch("pell", n)
    assert node == node_at("R" * (n - 1))
    assert node.triple == (pell(2 * n - 1), pell(2 * n + 1), 2)
    assert branch_checks("pell", n).ok


def test_branch_ranges():
    assert branch_path("pell", 3) == "RR"
    assert complementary_weights("fibonacci", 3) == (2, 11, 4)
    with pytest.raises(RangeError):
        branch("fibonacci", 1)
    with pytest.raises(RangeError):
        branch("pell", 0)
    with pytest.raises(PreconditionViolation):
        branch("lucas", 3)


def test_growth_sequences(root_node):
    assert growth_sequence(root_node, "E", 4) == [5, 29, 169, 985]
    assert growth_sequence(root_node, "F", 4) == [5, 13, 34, 89]
    assert growth_sequence(root_node, "E", 3, "r") == [2, 12, 70]
    with pytest.raises(PreconditionViolation):
        growth_sequence(root_node, "G", 3)


def test_growth_closed_form(root_node):
    lam_plus, lam_minus, base_plus, base_minus = growth_coefficients(root_node, "E")
    assert base_plus * base_minus == 1
    assert lam_plus * base_plus**5 + lam_minus * base_minus**5 == growth_sequence(root_node, "E", 6)[5]
    for node in iter_tree(2):
        assert growth_checks(node, count=6).ok


def test_is_left_position():
    assert is_left_position(5, 29, 433)
    assert not is_left_position(5, 13, 194)
    with pytest.raises(NotMarkoff):
        is_left_position(5, 13, 200)


def test_iter_below_is_complete():
    found = sorted(node.g for node in iter_below(1000))
    assert found == [5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985]


def test_tree_dump_shape():
    rows = list(tree_rows(3))
    assert len(rows) == 15
    assert [row[0] for row in rows[1:]] == list(iter_paths(3))[1:]
    assert next(tree_rows(1, ("m", "w"))) == ["-", "1,5,2", "-1,1,1"]
    assert rows[0] == ["-", "1,5,2", "0,2,1", "1,1,1", "-1,1,1", "10,2,5"]
    assert tree_dump(1).splitlines()[2] == "R\t5,29,2\t2,12,1\t1,5,1\t1,7,1\t2,2,5"


def test_slopes_are_ordered():
    for node in iter_tree(4):
        assert Fraction(node.r[0], node.e) < node.slope() < Fraction(node.r[2], node.f)
