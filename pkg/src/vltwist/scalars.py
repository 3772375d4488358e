"""Exact scalars and lattice vectors.

Scalars are :class:`fractions.Fraction`.  Lattice coordinates are kept in a
normalized form (plain ``int`` when integral, ``Fraction`` otherwise) because
they are hashed and compared constantly inside the straightening kernel; the
two representations compare and hash identically.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RAT_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"not an exact rational: {x!r}")
    return Fraction(x)


def norm(x):
    """Collapse integral rationals to ``int``."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def parse_rational(s: str) -> Fraction:
    m = _RAT_RE.match(s)
    if m is None:
        raise ValueError(f"malformed rational: {s!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {s!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class GroupVec(NamedTuple):
    """An element of the index lattice.  Ordered lexicographically."""

    x1: Union[int, Fraction]
    x2: Union[int, Fraction]

    @classmethod
    def of(cls, x1: RationalLike, x2: RationalLike) -> "GroupVec":
        return cls(norm(rational(x1)), norm(rational(x2)))

    def __add__(self, other):  # type: ignore[override]
        return GroupVec(norm(self.x1 + other.x1), norm(self.x2 + other.x2))

    def __neg__(self):
        return GroupVec(-self.x1, -self.x2)

    def scale(self, k) -> "GroupVec":
        return GroupVec(norm(self.x1 * k), norm(self.x2 * k))

    def is_zero(self) -> bool:
        return self.x1 == 0 and self.x2 == 0

    def __str__(self):
        return f"({format_rational(self.x1)}, {format_rational(self.x2)})"


ZERO_VEC = GroupVec(0, 0)


def parse_vec(s: str) -> GroupVec:
    """Parse ``"(p/q, r/s)"`` or the bare form ``"p/q,r/s"``."""
    body = s.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = body.split(",")
    if len(parts) != 2:
        raise ValueError(f"malformed lattice vector: {s!r}")
    return GroupVec.of(parse_rational(parts[0]), parse_rational(parts[1]))


def pairing(a: GroupVec, b: GroupVec) -> Fraction:
    """The determinant a1*b2 - a2*b1 (structure constant of [L_a, L_b])."""
    return Fraction(a[0] * b[1] - a[1] * b[0])


def weight(a1, a2, b: GroupVec) -> Fraction:
    """Eigenvalue of ``a1*d1 + a2*d2`` acting on ``L_b`` by the bracket."""
    return Fraction(a1 * b[0] + a2 * b[1])


def binom_general(b, m: int) -> Fraction:
    """Falling-product binomial b(b-1)...(b-m+1)/m! for any rational b."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    b = Fraction(b)
    num = Fraction(1)
    for k in range(m):
        num *= b - k
    fact = 1
    for k in range(2, m + 1):
        fact *= k
    return num / fact
