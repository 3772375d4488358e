"""PBW normal-form arithmetic in the enveloping algebra.

Basis order: ``d1`` before ``d2`` before every ``L(g)``; L-factors are sorted
lexicographically by ``(x1, x2)``.  Normal forms (not the algebra) depend on
this choice.  ``L(0, 0)`` does not exist and every term that would contain it
is dropped.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, NamedTuple, Sequence, Union

from . import kernel
from .scalars import GroupVec, format_rational, rational

Scalar = Union[int, Fraction]


class Generator(NamedTuple):
    """One of ``d1``, ``d2`` or ``L(index)``."""

    kind: str
    index: GroupVec | None = None

    def __str__(self):
        if self.kind == "L":
            return f"L({format_rational(self.index.x1)},{format_rational(self.index.x2)})"
        return self.kind


D1 = Generator("d1")
D2 = Generator("d2")


def gen_L(x1, x2=None) -> Generator:
    g = x1 if isinstance(x1, GroupVec) else GroupVec.of(x1, x2)
    if g.is_zero():
        raise ValueError("L(0,0) is not a generator")
    return Generator("L", g)


class PBWMonomial(NamedTuple):
    d1_exp: int
    d2_exp: int
    l_factors: tuple = ()


UNIT = PBWMonomial(0, 0, ())


def monomial_sort_key(m):
    p, q, w = m
    return (p + q + len(w), p, q, w)


def generator_monomial(g: Generator):
    if g.kind == "d1":
        return (1, 0, ())
    if g.kind == "d2":
        return (0, 1, ())
    return (0, 0, (g.index,))


def monomial_word(m) -> list[Generator]:
    """The generator word whose ordered product is the monomial."""
    p, q, w = m
    return [D1] * p + [D2] * q + [Generator("L", g) for g in w]


class AlgElement:
    """A finite linear combination of normal monomials with exact coefficients.

    Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        else:
            self._terms = {k: c for k, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, c) -> "AlgElement":
        c = rational(c) if not isinstance(c, Fraction) else c
        return cls({UNIT: c}) if c else cls()

    @classmethod
    def zero(cls) -> "AlgElement":
        return cls()

    @classmethod
    def one(cls) -> "AlgElement":
        return cls({UNIT: Fraction(1)})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[PBWMonomial]:
        return [PBWMonomial(*m) for m in sorted(self._terms, key=monomial_sort_key)]

    def coefficient(self, m) -> Fraction:
        return Fraction(self._terms.get(tuple(m), 0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(m == UNIT for m in self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, AlgElement):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return AlgElement.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return AlgElement(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElement._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return AlgElement()
            return AlgElement._raw({k: c * other for k, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        return power(self, k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"AlgElement({render(self)!r})"

    def __str__(self):
        return render(self)


def d1() -> AlgElement:
    return AlgElement({(1, 0, ()): Fraction(1)})


def d2() -> AlgElement:
    return AlgElement({(0, 1, ()): Fraction(1)})


def L(x1, x2=None) -> AlgElement:
    """The generator ``L(x1, x2)``; the zero index collapses to 0."""
    g = x1 if isinstance(x1, GroupVec) else GroupVec.of(x1, x2)
    if g.is_zero():
        return AlgElement()
    return AlgElement({(0, 0, (g,)): Fraction(1)})


def from_generator(g: Generator) -> AlgElement:
    return AlgElement({generator_monomial(g): Fraction(1)})


def multiply(x: AlgElement, y: AlgElement) -> AlgElement:
    if not x._terms or not y._terms:
        return AlgElement()
    return AlgElement._raw(kernel.mul_terms(x._terms, y._terms))


def straighten(word: Sequence[Generator]) -> AlgElement:
    """Normal form of the ordered product of ``word``."""
    result = AlgElement.one()
    for g in word:
        result = multiply(result, from_generator(g))
    return result


def bracket(x: AlgElement, y: AlgElement) -> AlgElement:
    return multiply(x, y) - multiply(y, x)


def power(x: AlgElement, k: int) -> AlgElement:
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    result = AlgElement.one()
    for _ in range(k):
        result = multiply(result, x)
    return result


def rising_factorial(x: AlgElement, a, n: int) -> AlgElement:
    """``(x + a)(x + a + 1)...(x + a + n - 1)``, factors taken left to right."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = Fraction(a)
    result = AlgElement.one()
    for k in range(n):
        result = multiply(result, x + (a + k))
    return result


def falling_factorial(x: AlgElement, a, n: int) -> AlgElement:
    """``(x + a)(x + a - 1)...(x + a - n + 1)``, factors taken left to right."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = Fraction(a)
    result = AlgElement.one()
    for k in range(n):
        result = multiply(result, x + (a - k))
    return result


def linear_combination(pairs: Iterable[tuple[Scalar, AlgElement]]) -> AlgElement:
    out: dict = {}
    for c, x in pairs:
        if not c:
            continue
        for k, v in x._terms.items():
            out[k] = out.get(k, 0) + c * v
    return AlgElement(out)


# -- rendering ---------------------------------------------------------------

def _power_str(base: str, e: int) -> str:
    return base if e == 1 else f"{base}^{e}"


def render_monomial(m) -> str:
    p, q, w = m
    parts = []
    if p:
        parts.append(_power_str("d1", p))
    if q:
        parts.append(_power_str("d2", q))
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        g = w[i]
        parts.append(_power_str(f"L({format_rational(g[0])},{format_rational(g[1])})", j - i))
        i = j
    return "*".join(parts) if parts else "1"


def render_term(m, c, first: bool) -> str:
    c = Fraction(c)
    neg = c < 0
    mag = -c if neg else c
    body = render_monomial(m)
    if tuple(m) == UNIT:
        text = format_rational(mag)
    elif mag == 1:
        text = body
    else:
        text = f"{format_rational(mag)}*{body}"
    if first:
        return f"-{text}" if neg else text
    return f" - {text}" if neg else f" + {text}"


def render(x: AlgElement) -> str:
    """Canonical text form; parseable back by :mod:`vltwist.parser`."""
    if not x._terms:
        return "0"
    keys = sorted(x._terms, key=monomial_sort_key)
    return "".join(render_term(m, x._terms[m], i == 0) for i, m in enumerate(keys))


__all__ = [
    "AlgElement",
    "D1",
    "D2",
    "Generator",
    "L",
    "PBWMonomial",
    "UNIT",
    "bracket",
    "d1",
    "d2",
    "falling_factorial",
    "from_generator",
    "gen_L",
    "linear_combination",
    "monomial_sort_key",
    "monomial_word",
    "multiply",
    "power",
    "render",
    "render_monomial",
    "rising_factorial",
    "straighten",
]
