"""Rational building blocks: fractions, Farey mediants, continued fraction
words, and 2x2 integer matrices.

Everything here is exact.  Fractions are stdlib ``fractions.Fraction`` (always
reduced, denominator positive); continued fraction words are tuples of
positive ints; matrices are plain 4-tuples of ints wrapped in a frozen
dataclass.  No floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PreconditionError

CFWord = tuple  # tuple[int, ...]; kept loose on purpose, validation is dynamic


# ============================================================
# fractions
# ============================================================

def make_fraction(num: int, den: int) -> Fraction:
    """Reduced fraction with positive denominator; zero denominator is a DomainError."""
    if den == 0:
        raise DomainError("fraction denominator must be nonzero")
    return Fraction(num, den)


def parse_fraction(text: str) -> Fraction:
    """Parse 'p/q' or a bare integer string into a Fraction."""
    s = text.strip()
    try:
        if "/" in s:
            num, _, den = s.partition("/")
            return make_fraction(int(num), int(den))
        return Fraction(int(s))
    except ValueError as exc:
        raise DomainError(f"cannot parse fraction from {text!r}") from exc


def format_fraction(x: Fraction) -> str:
    """Render as 'p/q', keeping the denominator even when it is 1."""
    return f"{x.numerator}/{x.denominator}"


def is_farey_neighbors(x: Fraction, y: Fraction) -> bool:
    """True when |x.num * y.den - y.num * x.den| == 1."""
    return abs(x.numerator * y.denominator - y.numerator * x.denominator) == 1


def farey_mediant(x: Fraction, y: Fraction) -> Fraction:
    """Mediant (a+c)/(b+d) of two Farey neighbors a/b and c/d.

    The neighbor condition makes the result automatically reduced and a
    neighbor of both inputs; calling this on non-neighbors is a
    PreconditionError rather than a silently unreduced value.
    """
    if not is_farey_neighbors(x, y):
        raise PreconditionError(
            f"{format_fraction(x)} and {format_fraction(y)} are not Farey neighbors"
        )
    return Fraction(
        x.numerator + y.numerator, x.denominator + y.denominator
    )


# ============================================================
# continued fraction words
# ============================================================
# A word (c1, ..., ck) stands for the finite continued fraction
# c1 + 1/(c2 + 1/(... + 1/ck)).  The operations below only ever deal in
# even-length words because concatenation of even words is associative on
# values, which is what the word tree is built on.

def _validate_word(word, *, even: bool = False) -> tuple:
    w = tuple(word)
    if not w:
        raise DomainError("continued fraction word must be nonempty")
    for c in w:
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise DomainError(f"continued fraction quotients must be positive ints, got {c!r}")
    if even and len(w) % 2:
        raise PreconditionError(f"word length must be even, got {len(w)}")
    return w


def cf_expand_even(x: Fraction) -> tuple:
    """Canonical even-length continued fraction word of a rational x > 1.

    Runs the Euclidean expansion (which for a non-integer ends with a final
    quotient >= 2, and for an integer n is just (n,)), then if the length is
    odd rewrites the tail c -> (c - 1, 1).  The rewrite preserves the value,
    so cf_eval inverts this exactly.
    """
    x = Fraction(x)
    if x <= 1:
        raise DomainError(f"even expansion needs x > 1, got {format_fraction(x)}")
    p, q = x.numerator, x.denominator
    word = []
    while q:
        a, r = divmod(p, q)
        word.append(a)
        p, q = q, r
    if len(word) % 2:
        word[-1] -= 1
        word.append(1)
    return tuple(word)


def cf_eval(word) -> Fraction:
    """Exact value of a continued fraction word via the convergent recurrence."""
    w = _validate_word(word)
    p_prev, p = 1, w[0]
    q_prev, q = 0, 1
    for c in w[1:]:
        p_prev, p = p, c * p + p_prev
        q_prev, q = q, c * q + q_prev
    return Fraction(p, q)


def cf_concat(a, b) -> tuple:
    """Concatenate two even-length words; the result is again even."""
    return _validate_word(a, even=True) + _validate_word(b, even=True)


def format_cf_word(word, periodic: bool = False) -> str:
    """Render like '[2,2,1,1]'; a leading '~' marks periodic repetition."""
    body = "[" + ",".join(str(c) for c in word) + "]"
    return "~" + body if periodic else body


def parse_cf_word(text: str) -> tuple:
    """Inverse of format_cf_word (the '~' marker is accepted and dropped)."""
    s = text.strip()
    if s.startswith("~"):
        s = s[1:]
    if not (s.startswith("[") and s.endswith("]")):
        raise DomainError(f"cannot parse word from {text!r}")
    try:
        return _validate_word(int(c) for c in s[1:-1].split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse word from {text!r}") from exc


# ============================================================
# 2x2 integer matrices
# ============================================================

@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix (e11 e12 / e21 e22) with exact arithmetic."""

    e11: int
    e12: int
    e21: int
    e22: int

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def __pow__(self, n: int) -> "Mat2":
        if not isinstance(n, int) or n < 0:
            raise DomainError("matrix powers are defined for integer n >= 0 only")
        result = Mat2.identity()
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def det(self) -> int:
        return self.e11 * self.e22 - self.e12 * self.e21

    def trace(self) -> int:
        return self.e11 + self.e22

    def transpose(self) -> "Mat2":
        return Mat2(self.e11, self.e21, self.e12, self.e22)

    def rows(self):
        return ((self.e11, self.e12), (self.e21, self.e22))


def format_mat2(m: Mat2) -> str:
    return f"[[{m.e11},{m.e12}],[{m.e21},{m.e22}]]"


def convergent_matrix(word) -> Mat2:
    """Product of (c 1 / 1 0) over the word, left to right.

    Columns are the last two convergents: (p_k p_{k-1} / q_k q_{k-1}).
    Determinant is (-1)^len(word), and the map is a homomorphism from word
    concatenation to matrix multiplication.
    """
    w = _validate_word(word)
    m = Mat2.identity()
    for c in w:
        m = m @ Mat2(c, 1, 1, 0)
    return m
