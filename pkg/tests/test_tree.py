"""The shared tree walker: descent, lookup, enumeration, mirroring."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topograph import (
    CombineError,
    DepthLimitError,
    DomainError,
    PreconditionError,
    descend,
    enumerate_tree,
    farey_mediant,
    format_path,
    locate,
    mirror,
    parse_path,
)

paths = st.text(alphabet="LR", max_size=12)


def farey_node(path):
    return descend(Fraction(0), Fraction(1), farey_mediant, path)


def test_descend_root():
    node = farey_node("")
    assert node.value == Fraction(1, 2)
    assert (node.left, node.right) == (Fraction(0), Fraction(1))


def test_descend_examples():
    assert farey_node("L").value == Fraction(1, 3)
    assert farey_node("R").value == Fraction(2, 3)
    assert farey_node("LRR").value == Fraction(3, 7)
    assert farey_node("LRR").left == Fraction(2, 5)
    assert farey_node("LRR").right == Fraction(1, 2)


def test_descend_rejects_junk_path():
    with pytest.raises(DomainError):
        farey_node("LRX")


def test_locate_examples():
    assert locate(Fraction(1, 2)) == ""
    assert locate(Fraction(1, 3)) == "L"
    assert locate(Fraction(3, 7)) == "LRR"
    assert locate(Fraction(5, 8)) == "RLR"


def test_locate_domain():
    for t in (Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(3, 2)):
        with pytest.raises(DomainError):
            locate(t)


def test_enumerate_counts_and_order():
    nodes = list(enumerate_tree(Fraction(0), Fraction(1), farey_mediant, 2))
    assert [n.path for n in nodes] == ["", "L", "R", "LL", "LR", "RL", "RR"]
    assert [n.value for n in nodes] == [
        Fraction(1, 2), Fraction(1, 3), Fraction(2, 3),
        Fraction(1, 4), Fraction(2, 5), Fraction(3, 5), Fraction(3, 4),
    ]


@pytest.mark.parametrize("depth", [0, 1, 5])
def test_enumerate_node_count(depth):
    nodes = list(enumerate_tree(Fraction(0), Fraction(1), farey_mediant, depth))
    assert len(nodes) == 2 ** (depth + 1) - 1


def test_locate_inverts_descend():
    for node in enumerate_tree(Fraction(0), Fraction(1), farey_mediant, 8):
        assert locate(node.value) == node.path


def test_parents_are_neighbors_everywhere():
    from topograph import is_farey_neighbors

    for node in enumerate_tree(Fraction(0), Fraction(1), farey_mediant, 8):
        assert node.left < node.value < node.right
        assert is_farey_neighbors(node.left, node.right)


def test_depth_guard():
    with pytest.raises(DepthLimitError):
        list(enumerate_tree(Fraction(0), Fraction(1), farey_mediant, 25))
    with pytest.raises(DepthLimitError):
        list(enumerate_tree(Fraction(0), Fraction(1), farey_mediant, 6, max_depth=5))
    with pytest.raises(PreconditionError):
        list(enumerate_tree(Fraction(0), Fraction(1), farey_mediant, -1))


def test_combine_failures_carry_path():
    def grumpy(left, right):
        if left == Fraction(1, 3):
            raise ValueError("boom")
        return farey_mediant(left, right)

    with pytest.raises(CombineError) as exc_info:
        descend(Fraction(0), Fraction(1), grumpy, "LR")
    assert exc_info.value.path == "LR"

    with pytest.raises(CombineError):
        list(enumerate_tree(Fraction(0), Fraction(1), grumpy, 3))


def test_parallel_matches_sequential():
    seq = list(enumerate_tree(Fraction(0), Fraction(1), farey_mediant, 7))
    par = list(enumerate_tree(Fraction(0), Fraction(1), farey_mediant, 7, parallel=True))
    assert seq == par


def test_path_serialization():
    assert format_path("") == "-"
    assert format_path("LRR") == "LRR"
    assert parse_path("-") == ""
    assert parse_path(" LR ") == "LR"
    with pytest.raises(DomainError):
        parse_path("LQ")


def test_mirror_examples():
    assert mirror("") == ""
    assert mirror("LRR") == "RLL"


@given(paths)
def test_mirror_is_an_involution(path):
    assert mirror(mirror(path)) == path


@given(paths)
def test_mirror_swaps_subtrees(path):
    # the mirrored Farey tree (seeds swapped around reflection t -> 1 - t)
    # holds the reflected fraction at the mirrored path
    node = farey_node(path)
    twin = farey_node(mirror(path))
    assert twin.value == 1 - node.value
