"""Markov fractions and Markov triples on the topograph.

The Markov fraction tree is seeded by (0/1, 1/2) and combines neighbors with
a denominator-weighted mediant; the map sending the Farey fraction at a path
to the Markov fraction at the same path is a strictly increasing bijection
from [0, 1] onto the Markov fractions in [0, 1/2].  Denominators are exactly
the Markov numbers: solutions of x^2 + y^2 + z^2 = 3xyz, regenerated here
three independent ways (mediant denominators, Vieta walking, integer square
roots) so the routes can be cross-checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainError, InvariantError, PreconditionError
from .rational import format_fraction
from .tree import descend, locate


# ============================================================
# Markov fractions
# ============================================================

def springborn_mediant(lo: Fraction, hi: Fraction) -> Fraction:
    """Weighted mediant (p1*q1 + p2*q2) / (q1^2 + q2^2) of lo = p1/q1 < hi = p2/q2.

    Fraction reduces the result; on tree nodes the reduction factor is
    exactly p2*q1 - p1*q2.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise PreconditionError(
            f"weighted mediant needs lo < hi, got {format_fraction(lo)} >= {format_fraction(hi)}"
        )
    return Fraction(
        lo.numerator * lo.denominator + hi.numerator * hi.denominator,
        lo.denominator ** 2 + hi.denominator ** 2,
    )


MARKOV_SEED_LEFT = Fraction(0, 1)
MARKOV_SEED_RIGHT = Fraction(1, 2)


def markov_fraction(t: Fraction) -> Fraction:
    """The Markov fraction at Farey coordinate t in [0, 1].

    Boundaries map to the seeds (0 -> 0/1, 1 -> 1/2); interior fractions map
    to the weighted-mediant tree node at locate(t).
    """
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise DomainError(f"coordinate must lie in [0, 1], got {t}")
    if t == 0:
        return MARKOV_SEED_LEFT
    if t == 1:
        return MARKOV_SEED_RIGHT
    return descend(MARKOV_SEED_LEFT, MARKOV_SEED_RIGHT, springborn_mediant, locate(t)).value


# ============================================================
# Markov triples
# ============================================================

@dataclass(frozen=True)
class MarkovTriple:
    """Positive integer solution of x^2 + y^2 + z^2 = 3xyz, in tree order.

    Components are (left parent, right parent, node), not sorted by size.
    """

    x: int
    y: int
    z: int

    def __post_init__(self):
        x, y, z = self.x, self.y, self.z
        if min(x, y, z) < 1:
            raise DomainError(f"triple components must be positive, got {(x, y, z)}")
        if x * x + y * y + z * z != 3 * x * y * z:
            raise DomainError(f"{(x, y, z)} does not satisfy x^2 + y^2 + z^2 = 3xyz")

    def as_tuple(self):
        return (self.x, self.y, self.z)


def vieta_flip(t: MarkovTriple, position: str) -> MarkovTriple:
    """Replace one component by the other root of its quadratic.

    The replaced component c with cofactors a, b becomes 3ab - c, which must
    equal (a^2 + b^2) / c exactly; both are computed and compared, a mismatch
    is an InvariantError (unreachable for a valid triple).
    """
    if position not in ("x", "y", "z"):
        raise DomainError(f"position must be one of 'x', 'y', 'z', got {position!r}")
    x, y, z = t.as_tuple()
    c = {"x": x, "y": y, "z": z}[position]
    a, b = {"x": (y, z), "y": (x, z), "z": (x, y)}[position]
    linear = 3 * a * b - c
    quotient, rem = divmod(a * a + b * b, c)
    if rem or quotient != linear:
        raise InvariantError(
            f"flip of {position} in {t.as_tuple()} disagrees: 3ab-c={linear}, (a^2+b^2)/c={quotient} rem {rem}"
        )
    new = {"x": (linear, y, z), "y": (x, linear, z), "z": (x, y, linear)}[position]
    return MarkovTriple(*new)


def markov_triple_at(path: str) -> MarkovTriple:
    """Walk the triple tree from (1, 2, 5): L keeps x, R keeps y.

    Each step is a Vieta flip of the dropped component followed by the
    reordering that makes the previous node a parent of the next.
    """
    state = MarkovTriple(1, 2, 5)
    for step in path:
        if step == "L":
            flipped = vieta_flip(state, "y")  # (x, 3xz - y, z)
            state = MarkovTriple(state.x, state.z, flipped.y)
        elif step == "R":
            flipped = vieta_flip(state, "x")  # (3yz - x, y, z)
            state = MarkovTriple(state.z, state.y, flipped.x)
        else:
            raise DomainError(f"path must be a string over 'L'/'R', got {path!r}")
    return state


def markov_child(x: int, y: int) -> int:
    """Larger root z of z^2 - 3xy z + (x^2 + y^2) = 0 for parent numbers x, y.

    This is the combine rule that regenerates Markov numbers directly on the
    tree; the discriminant 9x^2y^2 - 4(x^2 + y^2) must be a perfect square
    of the right parity or the pair was not a pair of topograph neighbors.
    """
    if x < 1 or y < 1:
        raise DomainError(f"parent numbers must be positive, got {(x, y)}")
    disc = 9 * x * x * y * y - 4 * (x * x + y * y)
    if disc < 0:
        raise DomainError(f"no real child for parents {(x, y)}")
    root = isqrt(disc)
    if root * root != disc or (3 * x * y + root) % 2:
        raise DomainError(f"parents {(x, y)} are not adjacent Markov numbers")
    return (3 * x * y + root) // 2


# ============================================================
# node relations
# ============================================================

@dataclass(frozen=True)
class NodeRelations:
    """The five fractions around one interior node.

    parent_left/parent_right flank the node; child_right is the node's R
    child (the flip that discards parent_left), child_left its L child.
    """

    parent_left: Fraction
    parent_right: Fraction
    node: Fraction
    child_right: Fraction
    child_left: Fraction


@dataclass(frozen=True)
class RelationCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class RelationReport:
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_names(self):
        return [c.name for c in self.checks if not c.passed]


def _exact_div(num: int, den: int):
    q, r = divmod(num, den)
    return (q, True) if r == 0 else (None, False)


def check_relations(rel: NodeRelations) -> RelationReport:
    """Verify the bilinear identities tying a node to its neighbors.

    Writing the five fractions as p1/q1, p2/q2 (parents), p3/q3 (node),
    p1'/q1' (right child), p2'/q2' (left child), the checks are:

      cross-left      p2*q3 - p3*q2 == q1
      cross-right     p3*q1 - p1*q3 == q2
      mediant-divisor p2*q1 - p1*q2 == (q1^2 + q2^2)/q3 == 3*q1*q2 - q3
      flip-left       p1' == (p2*q2 + p3*q3)/q1,  q1' == (q2^2 + q3^2)/q1
      flip-right      p2' == (p1*q1 + p3*q3)/q2,  q2' == (q1^2 + q3^2)/q2

    All divisions must be exact; an inexact division is reported as a failed
    check, never raised.
    """
    p1, q1 = rel.parent_left.numerator, rel.parent_left.denominator
    p2, q2 = rel.parent_right.numerator, rel.parent_right.denominator
    p3, q3 = rel.node.numerator, rel.node.denominator
    pr, qr = rel.child_right.numerator, rel.child_right.denominator
    pl, ql = rel.child_left.numerator, rel.child_left.denominator

    checks = []

    def record(name, passed, detail=""):
        checks.append(RelationCheck(name, bool(passed), detail))

    record("cross-left", p2 * q3 - p3 * q2 == q1,
           f"p2*q3 - p3*q2 = {p2 * q3 - p3 * q2}, q1 = {q1}")
    record("cross-right", p3 * q1 - p1 * q3 == q2,
           f"p3*q1 - p1*q3 = {p3 * q1 - p1 * q3}, q2 = {q2}")

    det = p2 * q1 - p1 * q2
    med, exact = _exact_div(q1 * q1 + q2 * q2, q3)
    record("mediant-divisor", exact and det == med and det == 3 * q1 * q2 - q3,
           f"det = {det}, (q1^2+q2^2)/q3 = {med if exact else 'inexact'}, 3*q1*q2 - q3 = {3 * q1 * q2 - q3}")

    num_r, exact_n = _exact_div(p2 * q2 + p3 * q3, q1)
    den_r, exact_d = _exact_div(q2 * q2 + q3 * q3, q1)
    record("flip-left", exact_n and exact_d and (num_r, den_r) == (pr, qr),
           f"expected {pr}/{qr}, formulas give "
           f"{num_r if exact_n else 'inexact'}/{den_r if exact_d else 'inexact'}")

    num_l, exact_n = _exact_div(p1 * q1 + p3 * q3, q2)
    den_l, exact_d = _exact_div(q1 * q1 + q3 * q3, q2)
    record("flip-right", exact_n and exact_d and (num_l, den_l) == (pl, ql),
           f"expected {pl}/{ql}, formulas give "
           f"{num_l if exact_n else 'inexact'}/{den_l if exact_d else 'inexact'}")

    return RelationReport(tuple(checks))


def reduction_factor(lo: Fraction, hi: Fraction) -> int:
    """gcd removed by the weighted mediant; on tree nodes equals p2*q1 - p1*q2."""
    return gcd(
        lo.numerator * lo.denominator + hi.numerator * hi.denominator,
        lo.denominator ** 2 + hi.denominator ** 2,
    )
