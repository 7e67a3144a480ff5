"""Generic walker for the topograph's dual binary tree.

Every structure in this package (Farey fractions, Markov fractions, Markov
numbers, Cohn matrices, continued fraction words) lives on the same infinite
binary tree.  A node is addressed by a path over the alphabet {L, R} starting
from the root; the node's value is combine(left, right) applied to the pair
of parent regions flanking it.  Stepping L keeps the left parent and the
current node becomes the new right parent (L moves toward the left seed);
stepping R is the mirror image.

The walker is agnostic about the value type: it just threads the pair of
parents and calls the supplied combine rule, wrapping any failure in a
CombineError that records where in the tree it happened.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterator

from .errors import CombineError, DepthLimitError, DomainError, PreconditionError
from .rational import farey_mediant

# Hard ceiling on enumeration depth.  Values on balanced paths grow
# doubly exponentially, so a runaway depth turns into gigabyte integers
# long before it turns into an out-of-memory kill; refuse early instead.
HARD_DEPTH_CAP = 24

PATH_ALPHABET = frozenset("LR")


def _check_path(path: str) -> str:
    if not isinstance(path, str) or not PATH_ALPHABET.issuperset(path):
        raise DomainError(f"path must be a string over 'L'/'R', got {path!r}")
    return path


def format_path(path: str) -> str:
    """Paths serialize as themselves, with '-' standing for the empty path."""
    return path if path else "-"


def parse_path(text: str) -> str:
    s = text.strip()
    if s == "-":
        return ""
    return _check_path(s)


def mirror(path: str) -> str:
    """Swap L and R; an involution on paths."""
    return _check_path(path).translate(str.maketrans("LR", "RL"))


@dataclass(frozen=True)
class Node:
    """One tree node: its path, the two parent regions, and its value."""

    path: str
    left: Any
    right: Any
    value: Any


def _combine_at(combine, left, right, path):
    try:
        return combine(left, right)
    except Exception as exc:
        raise CombineError(path, str(exc)) from exc


def descend(seed_left, seed_right, combine: Callable, path: str) -> Node:
    """Walk one path from the seed pair and return the node reached.

    The empty path addresses the root node combine(seed_left, seed_right).
    """
    _check_path(path)
    left, right = seed_left, seed_right
    for i, step in enumerate(path):
        value = _combine_at(combine, left, right, path[:i])
        if step == "L":
            right = value
        else:
            left = value
    return Node(path, left, right, _combine_at(combine, left, right, path))


def locate(t: Fraction) -> str:
    """Path of the fraction t in the Farey tree seeded by (0/1, 1/1).

    Brackets t between Farey neighbors, tightening the side the mediant
    leaves loose; terminates because t is rational.  Only 0 < t < 1 sits
    inside this tree.
    """
    t = Fraction(t)
    if not 0 < t < 1:
        raise DomainError(f"locate needs 0 < t < 1, got {t}")
    lo, hi = Fraction(0), Fraction(1)
    steps = []
    while True:
        mid = farey_mediant(lo, hi)
        if t == mid:
            return "".join(steps)
        if t < mid:
            steps.append("L")
            hi = mid
        else:
            steps.append("R")
            lo = mid


def _bfs(seed_left, seed_right, combine, depth: int, prefix: str = "") -> Iterator[Node]:
    # Level order with L emitted before R; paths are absolute, the subtree
    # root sits at `prefix`.
    queue = deque([(prefix, seed_left, seed_right)])
    limit = len(prefix) + depth
    while queue:
        path, left, right = queue.popleft()
        value = _combine_at(combine, left, right, path)
        yield Node(path, left, right, value)
        if len(path) < limit:
            queue.append((path + "L", left, value))
            queue.append((path + "R", value, right))


def enumerate_tree(
    seed_left,
    seed_right,
    combine: Callable,
    depth: int,
    *,
    max_depth: int = HARD_DEPTH_CAP,
    parallel: bool = False,
) -> Iterator[Node]:
    """Yield all nodes with path length <= depth in breadth-first order.

    Order is deterministic: by level, L before R within a level.  With
    parallel=True the two root subtrees are enumerated on worker threads and
    merged back into exactly the same order; output is byte-for-byte the
    sequential output.  Depths beyond max_depth (never beyond HARD_DEPTH_CAP)
    raise DepthLimitError before any work is done.
    """
    if depth < 0:
        raise PreconditionError(f"depth must be >= 0, got {depth}")
    cap = min(max_depth, HARD_DEPTH_CAP)
    if depth > cap:
        raise DepthLimitError(f"depth {depth} exceeds cap {cap}")
    if not parallel or depth < 2:
        yield from _bfs(seed_left, seed_right, combine, depth)
        return

    root = descend(seed_left, seed_right, combine, "")
    with ThreadPoolExecutor(max_workers=2) as pool:
        futures = [
            pool.submit(lambda p, l, r: list(_bfs(l, r, combine, depth - 1, p)),
                        prefix, left, right)
            for prefix, left, right in (
                ("L", seed_left, root.value),
                ("R", root.value, seed_right),
            )
        ]
        nodes = [root]
        for fut in futures:
            nodes.extend(fut.result())
    # Stable reconstruction of global level order: 'L' < 'R' in ASCII, so
    # (length, path) sorts each level with L-branches first.
    nodes.sort(key=lambda n: (len(n.path), n.path))
    yield from nodes
