"""Truncated power series in ``t`` with coefficients in tensor powers of U.

A :class:`SeriesTensor` of arity ``k`` and order ``N`` is an element of
``U^{(x)k}[[t]] / t^{N+1}`` stored flat as ``{(deg, (m1, ..., mk)): coeff}``.
Operands must agree on arity and order; nothing is silently re-truncated.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Tuple

from . import kernel
from .algebra import UNIT, AlgElement, monomial_sort_key, render_monomial
from .scalars import binom_general, format_rational


class SeriesError(ValueError):
    """Arity/order mismatch or an operation outside its domain."""


Key = Tuple[int, tuple]


class SeriesTensor:
    __slots__ = ("arity", "order", "_terms")

    def __init__(self, arity: int, order: int, terms: Dict[Key, object] | None = None):
        if arity < 0:
            raise SeriesError("arity must be nonnegative")
        if order < 0:
            raise SeriesError("order must be nonnegative")
        self.arity = arity
        self.order = order
        self._terms = {}
        if terms:
            for (d, ms), c in terms.items():
                if not c or d > order:
                    continue
                if len(ms) != arity:
                    raise SeriesError(f"tensor key of length {len(ms)} in arity {arity}")
                self._terms[(d, ms)] = c

    @classmethod
    def _raw(cls, arity, order, terms):
        obj = cls.__new__(cls)
        obj.arity = arity
        obj.order = order
        obj._terms = terms
        return obj

    @classmethod
    def unit(cls, arity: int, order: int) -> "SeriesTensor":
        return cls._raw(arity, order, {(0, (UNIT,) * arity): Fraction(1)})

    @classmethod
    def zero(cls, arity: int, order: int) -> "SeriesTensor":
        return cls._raw(arity, order, {})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "SeriesTensor"):
        if not isinstance(other, SeriesTensor):
            raise SeriesError(f"expected SeriesTensor, got {type(other).__name__}")
        if other.arity != self.arity:
            raise SeriesError(f"arity mismatch: {self.arity} vs {other.arity}")
        if other.order != self.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return SeriesTensor._raw(self.arity, self.order, {k: c for k, c in out.items() if c})

    def __neg__(self):
        return SeriesTensor._raw(self.arity, self.order, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SeriesTensor):
            return ts_multiply(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return SeriesTensor.zero(self.arity, self.order)
            return SeriesTensor._raw(
                self.arity, self.order, {k: c * other for k, c in self._terms.items()}
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SeriesTensor):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.order == other.order
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore[assignment]

    def shift(self, k: int) -> "SeriesTensor":
        """Multiply by ``t^k``."""
        return SeriesTensor._raw(
            self.arity,
            self.order,
            {(d + k, ms): c for (d, ms), c in self._terms.items() if d + k <= self.order},
        )

    def truncate(self, order: int) -> "SeriesTensor":
        if order > self.order:
            raise SeriesError("cannot raise the truncation order")
        return SeriesTensor._raw(
            self.arity, order, {k: c for k, c in self._terms.items() if k[0] <= order}
        )

    def degree_part(self, d: int) -> "SeriesTensor":
        return SeriesTensor._raw(
            self.arity, self.order, {k: c for k, c in self._terms.items() if k[0] == d}
        )

    def constant_term(self) -> "SeriesTensor":
        return self.degree_part(0)

    def coefficient(self, d: int, monos) -> Fraction:
        return Fraction(self._terms.get((d, tuple(tuple(m) for m in monos)), 0))

    def as_element(self, d: int = 0) -> AlgElement:
        """The degree-``d`` coefficient of an arity-1 series."""
        if self.arity != 1:
            raise SeriesError("as_element needs arity 1")
        return AlgElement({ms[0]: c for (deg, ms), c in self._terms.items() if deg == d})

    def sorted_items(self):
        return sorted(
            self._terms.items(),
            key=lambda kc: (kc[0][0], tuple(monomial_sort_key(m) for m in kc[0][1])),
        )

    def __repr__(self):
        return f"SeriesTensor(arity={self.arity}, order={self.order}, terms={len(self._terms)})"

    def __str__(self):
        return render_series(self)


# -- construction -------------------------------------------------------------

def embed(x: AlgElement, arity: int, slot: int, order: int) -> SeriesTensor:
    """``1 (x) ... (x) x (x) ... (x) 1`` with ``x`` in 1-based ``slot``, at t^0."""
    if not 1 <= slot <= arity:
        raise SeriesError(f"slot {slot} out of range for arity {arity}")
    units = [UNIT] * arity
    terms = {}
    for m, c in x.items():
        ms = list(units)
        ms[slot - 1] = m
        terms[(0, tuple(ms))] = c
    return SeriesTensor._raw(arity, order, terms)


def from_element(x: AlgElement, order: int) -> SeriesTensor:
    return embed(x, 1, 1, order)


def series_from_coefficients(coeffs, order: int) -> SeriesTensor:
    """Arity-1 series ``sum_d coeffs[d] t^d`` from a list of AlgElements."""
    terms = {}
    for d, x in enumerate(coeffs):
        if d > order:
            break
        for m, c in x.items():
            terms[(d, (m,))] = c
    return SeriesTensor._raw(1, order, terms)


def tensor(a: SeriesTensor, b: SeriesTensor) -> SeriesTensor:
    """Outer product: arities add, t-degrees add."""
    if a.order != b.order:
        raise SeriesError(f"order mismatch: {a.order} vs {b.order}")
    n = a.order
    out = {}
    for (da, ma), ca in a._terms.items():
        for (db, mb), cb in b._terms.items():
            d = da + db
            if d <= n:
                key = (d, ma + mb)
                out[key] = out.get(key, 0) + ca * cb
    return SeriesTensor._raw(a.arity + b.arity, n, {k: c for k, c in out.items() if c})


# -- arithmetic -----------------------------------------------------------------

def ts_multiply(a: SeriesTensor, b: SeriesTensor) -> SeriesTensor:
    a._check(b)
    return SeriesTensor._raw(a.arity, a.order, kernel.tensor_mul_terms(a._terms, b._terms, a.order))


def ts_power(a: SeriesTensor, k: int) -> SeriesTensor:
    result = SeriesTensor.unit(a.arity, a.order)
    for _ in range(k):
        result = ts_multiply(result, a)
    return result


def ts_invert(a: SeriesTensor) -> SeriesTensor:
    """Inverse of a series with unit constant term: ``sum_{m<=N} (1 - A)^m``."""
    one = SeriesTensor.unit(a.arity, a.order)
    if a.constant_term() != one:
        raise SeriesError("constant term is not the unit tensor")
    x = one - a
    result = one
    term = one
    for _ in range(a.order):
        term = ts_multiply(term, x)
        if term.is_zero():
            break
        result = result + term
    return result


def binomial_series(x: AlgElement, b, order: int) -> SeriesTensor:
    """``(1 - x t)^b = sum_m C(b, m) (-x)^m t^m`` for any rational ``b``."""
    coeffs = []
    xm = AlgElement.one()
    for m in range(order + 1):
        c = binom_general(b, m) * (-1) ** m
        coeffs.append(xm * c)
        if m < order:
            xm = xm * x
    return series_from_coefficients(coeffs, order)


# -- slot maps ------------------------------------------------------------------

# A slot map takes a normal monomial and returns ``(arity_out, {(deg, monos): coeff})``.
SlotMap = Callable[[tuple], Tuple[int, dict]]


def _identity_map(m):
    return 1, {(0, (m,)): 1}


def _named_map(name: str) -> SlotMap:
    from . import hopf

    maps = {
        "id": _identity_map,
        "coproduct0": hopf.coproduct0_monomial_map,
        "antipode0": hopf.antipode0_monomial_map,
        "counit0": hopf.counit0_monomial_map,
    }
    aliases = {"Id": "id", "Δ0": "coproduct0", "S0": "antipode0", "ε0": "counit0"}
    name = aliases.get(name, name)
    if name not in maps:
        raise SeriesError(f"unknown structure map {name!r}")
    return maps[name]


def apply_in_slot(a: SeriesTensor, slot: int, fmap) -> SeriesTensor:
    """Apply a linear map to slot ``slot`` (1-based) of every term.

    ``fmap`` is ``"coproduct0"``, ``"antipode0"``, ``"counit0"``, ``"id"`` or a
    :data:`SlotMap`.  Degrees produced by the map add to the term's t-degree.
    """
    if not 1 <= slot <= a.arity:
        raise SeriesError(f"slot {slot} out of range for arity {a.arity}")
    if isinstance(fmap, str):
        if fmap in ("id", "Id"):
            return a
        fmap = _named_map(fmap)
    i = slot - 1
    n = a.order
    cache: dict = {}
    out: dict = {}
    r = None
    for (d, ms), c in a._terms.items():
        m = ms[i]
        img = cache.get(m)
        if img is None:
            img = cache[m] = fmap(m)
        r, image = img
        head = ms[:i]
        tail = ms[i + 1:]
        for (dd, mm), cc in image.items():
            deg = d + dd
            if deg > n:
                continue
            key = (deg, head + mm + tail)
            out[key] = out.get(key, 0) + c * cc
    if r is None:
        r, _ = fmap(UNIT)
    return SeriesTensor._raw(a.arity - 1 + r, n, {k: c for k, c in out.items() if c})


def mu_contract(a: SeriesTensor) -> SeriesTensor:
    """Multiply the two tensor legs together."""
    if a.arity != 2:
        raise SeriesError("mu_contract needs arity 2")
    mul = kernel.mul_monomials
    out: dict = {}
    for (d, (m1, m2)), c in a._terms.items():
        for m, k in mul(m1, m2):
            key = (d, (m,))
            out[key] = out.get(key, 0) + c * k
    return SeriesTensor._raw(1, a.order, {k: c for k, c in out.items() if c})


def series_slot_map(fn: Callable[[AlgElement], SeriesTensor]) -> SlotMap:
    """Wrap an element-level map returning SeriesTensors as a :data:`SlotMap`."""

    def _map(m):
        s = fn(AlgElement({m: Fraction(1)}))
        return s.arity, s._terms

    return _map


# -- rendering ----------------------------------------------------------------------

def render_series(a: SeriesTensor) -> str:
    """One ``t^d · m1 ⊗ m2 ⊗ ... : coeff`` line per term, in canonical order."""
    lines = []
    for (d, ms), c in a.sorted_items():
        legs = " ⊗ ".join(render_monomial(m) for m in ms) if ms else "1"
        lines.append(f"t^{d} · {legs} : {format_rational(c)}")
    return "\n".join(lines)


__all__ = [
    "SeriesError",
    "SeriesTensor",
    "apply_in_slot",
    "binomial_series",
    "embed",
    "from_element",
    "mu_contract",
    "render_series",
    "series_from_coefficients",
    "series_slot_map",
    "tensor",
    "ts_invert",
    "ts_multiply",
    "ts_power",
]
