"""Continued fraction words of Markov fractions and their periodizations.

The word tree is seeded by ((2,2), (1,1)) and combined by concatenation; it
is the mirror image of the fraction trees, so the word for coordinate t sits
at the mirrored path.  Two identities become executable here: the word at t is
exactly the canonical even expansion of 2 + (Markov fraction at t), and
repeating it forever yields the quadratic irrational
(2p + q + sqrt(9q^2 - 4)) / (2q) built from that fraction p/q.

Quadratic irrationals are kept as exact integer 4-tuples; comparisons against
rationals and substitution into integer quadratics are sign computations on
integers, so nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainError
from .rational import cf_concat, cf_eval, convergent_matrix, _validate_word
from .tree import descend, locate, mirror

WORD_SEED_LEFT = (2, 2)
WORD_SEED_RIGHT = (1, 1)


def markov_cf(t: Fraction) -> tuple:
    """Even continued fraction word of 2 + markov_fraction(t).

    Built structurally: concatenation down the mirrored tree, without ever
    expanding a fraction.  Boundaries give the seed words.
    """
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise DomainError(f"coordinate must lie in [0, 1], got {t}")
    if t == 0:
        return WORD_SEED_RIGHT
    if t == 1:
        return WORD_SEED_LEFT
    return descend(WORD_SEED_LEFT, WORD_SEED_RIGHT, cf_concat, mirror(locate(t))).value


# ============================================================
# quadratic irrationals
# ============================================================

@dataclass(frozen=True)
class QuadraticIrrational:
    """(P + B*sqrt(D)) / Q with B > 0, Q > 0, D > 0 nonsquare, gcd(P, B, Q) = 1.

    D is kept as-is (never factored), so equality of instances means equality
    as tuples; values with different D are compared through qi_satisfies or
    qi_compare instead.
    """

    P: int
    B: int
    Q: int
    D: int


def make_qi(P: int, B: int, Q: int, D: int) -> QuadraticIrrational:
    """Canonicalize and validate a quadratic irrational."""
    if D <= 0 or isqrt(D) ** 2 == D:
        raise DomainError(f"D must be a positive nonsquare, got {D}")
    if B <= 0 or Q <= 0:
        raise DomainError(f"B and Q must be positive, got B={B}, Q={Q}")
    g = gcd(gcd(abs(P), B), Q)
    return QuadraticIrrational(P // g, B // g, Q // g, D)


def format_qi(x: QuadraticIrrational) -> str:
    coeff = "" if x.B == 1 else str(x.B)
    return f"({x.P}+{coeff}√{x.D})/{x.Q}"


def periodic_value(word) -> QuadraticIrrational:
    """Value of the infinite periodic continued fraction with this period.

    The fixed point x = (p_k x + p_{k-1}) / (q_k x + q_{k-1}) > 1 solves
    q_k x^2 + (q_{k-1} - p_k) x - p_{k-1} = 0; the larger root is returned.
    Even length keeps the discriminant positive and the root above 1.
    """
    w = _validate_word(word, even=True)
    m = convergent_matrix(w)
    pk, pk1, qk, qk1 = m.e11, m.e12, m.e21, m.e22
    disc = (qk1 - pk) ** 2 + 4 * qk * pk1
    return make_qi(pk - qk1, 1, 2 * qk, disc)


def markov_irrationality(mf: Fraction) -> QuadraticIrrational:
    """(2p + q + sqrt(9q^2 - 4)) / (2q) for a Markov fraction p/q.

    Validity of mf as a Markov fraction is the caller's business; the formula
    itself only needs a denominator, and 9q^2 - 4 is never a perfect square.
    """
    mf = Fraction(mf)
    p, q = mf.numerator, mf.denominator
    return make_qi(2 * p + q, 1, 2 * q, 9 * q * q - 4)


def left_companion(t: Fraction, m: int) -> Fraction:
    """Rational approximant from m repetitions of the word at t.

    These sit above the periodization and walk down onto it as m grows.
    """
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"repetition count must be an int >= 1, got {m!r}")
    return cf_eval(markov_cf(t) * m)


# ============================================================
# exact comparisons
# ============================================================

def qi_compare(r, x: QuadraticIrrational) -> int:
    """Sign of r - x for rational r: -1, 0, or +1, computed on integers.

    r - x has the sign of s - tau*sqrt(D) with s = u*Q - v*P and tau = v*B
    for r = u/v in lowest terms (v > 0).  When s > 0 the comparison reduces
    to s^2 against tau^2 * D; ties cannot happen for nonsquare D but are
    reported honestly anyway.
    """
    r = Fraction(r)
    u, v = r.numerator, r.denominator
    s = u * x.Q - v * x.P
    tau = v * x.B
    if s <= 0:
        return -1
    lhs, rhs = s * s, tau * tau * x.D
    if lhs > rhs:
        return 1
    if lhs < rhs:
        return -1
    return 0


def qi_satisfies(x: QuadraticIrrational, a2: int, a1: int, a0: int) -> bool:
    """Does a2*x^2 + a1*x + a0 = 0 hold exactly?

    Substituting (P + B*sqrt(D))/Q splits into a rational part and a
    sqrt(D) part; both integer coefficients must vanish.
    """
    rational = a2 * (x.P * x.P + x.B * x.B * x.D) + a1 * x.P * x.Q + a0 * x.Q * x.Q
    radical = 2 * a2 * x.P * x.B + a1 * x.B * x.Q
    return rational == 0 and radical == 0


def compare_gap(r1, r2, x: QuadraticIrrational) -> int:
    """Compare |r1 - x| with |r2 - x| exactly: -1 closer, 0 tied, +1 farther.

    |r1 - x|^2 - |r2 - x|^2 = (r1 - r2) * (r1 + r2 - 2x), so the answer is a
    product of two signs, the second of which is a qi_compare of the average.
    """
    r1, r2 = Fraction(r1), Fraction(r2)
    if r1 == r2:
        return 0
    left = 1 if r1 > r2 else -1
    right = qi_compare((r1 + r2) / 2, x)
    return left * right
