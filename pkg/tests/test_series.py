from fractions import Fraction

import pytest

from vltwist.algebra import UNIT, AlgElement, L, d1, d2
from vltwist.series import (
    SeriesError,
    SeriesTensor,
    apply_in_slot,
    binomial_series,
    embed,
    from_element,
    mu_contract,
    render_series,
    tensor,
    ts_invert,
    ts_multiply,
    ts_power,
)


def test_unit_and_zero():
    one = SeriesTensor.unit(2, 3)
    assert one.coefficient(0, [UNIT, UNIT]) == 1
    assert SeriesTensor.zero(2, 3).is_zero()
    x = embed(L(1, 0), 2, 1, 3)
    assert one * x == x
    assert x * one == x


def test_mismatch_raises():
    a = SeriesTensor.unit(2, 3)
    with pytest.raises(SeriesError):
        a + SeriesTensor.unit(1, 3)
    with pytest.raises(SeriesError):
        a * SeriesTensor.unit(2, 4)
    with pytest.raises(SeriesError):
        SeriesTensor(2, 3, {(0, (UNIT,)): 1})
    with pytest.raises(SeriesError):
        a.truncate(5)
    with pytest.raises(SeriesError):
        embed(d1(), 2, 3, 1)


def test_truncation_drops_high_degrees():
    x = from_element(L(1, 0), 2).shift(1)
    assert (x * x * x).is_zero()
    assert (x * x).coefficient(2, [(0, 0, ((1, 0), (1, 0)))]) == 1
    assert x.truncate(0).is_zero()


def test_binomial_series_exponent_law():
    for a, b in ((Fraction(1, 2), Fraction(-3, 2)), (Fraction(2), Fraction(-5)), (Fraction(-1, 3), Fraction(0))):
        x = L(1, 1)
        lhs = binomial_series(x, a, 5) * binomial_series(x, b, 5)
        assert lhs == binomial_series(x, a + b, 5)
    assert binomial_series(L(0, 1), 2, 4) == SeriesTensor(
        1, 4, {(0, (UNIT,)): 1, (1, ((0, 0, ((0, 1),)),)): -2, (2, ((0, 0, ((0, 1), (0, 1))),)): 1}
    )


def test_invert_round_trip():
    x = from_element(d1() * L(1, 0) + L(0, 1), 4).shift(1) + SeriesTensor.unit(1, 4)
    y = ts_invert(x)
    assert x * y == SeriesTensor.unit(1, 4)
    assert y * x == SeriesTensor.unit(1, 4)
    with pytest.raises(SeriesError):
        ts_invert(from_element(d1(), 4))


def test_power_and_scalars():
    x = SeriesTensor.unit(1, 3) + from_element(d2(), 3).shift(1)
    assert ts_power(x, 3) == x * x * x
    assert ts_power(x, 0) == SeriesTensor.unit(1, 3)
    assert (x * Fraction(1, 2)) * 2 == x
    assert (x - x).is_zero()


def test_tensor_outer_product():
    a = from_element(L(1, 0), 3).shift(1)
    b = from_element(d1(), 3).shift(2)
    ab = tensor(a, b)
    assert ab.arity == 2
    assert ab == SeriesTensor(2, 3, {(3, ((0, 0, ((1, 0),)), (1, 0, ()))): 1})


def test_slot_maps():
    x = embed(L(1, 0), 2, 1, 2) + embed(d1(), 2, 2, 2)
    assert apply_in_slot(x, 1, "id") == x
    eps = apply_in_slot(x, 1, "counit0")
    assert eps == from_element(d1(), 2)
    dx = apply_in_slot(x, 2, "coproduct0")
    assert dx.arity == 3
    s = apply_in_slot(apply_in_slot(x, 1, "antipode0"), 1, "antipode0")
    assert s == x
    with pytest.raises(SeriesError):
        apply_in_slot(x, 1, "nonsense")


def test_mu_contract_multiplies_legs():
    x = tensor(from_element(L(1, 0), 2), from_element(L(0, 1), 2))
    assert mu_contract(x) == from_element(L(1, 0) * L(0, 1), 2)


def test_render_series():
    x = tensor(from_element(L(1, 0), 1), from_element(AlgElement.one() * Fraction(-1, 2), 1))
    assert render_series(x) == "t^0 · L(1,0) ⊗ 1 : -1/2"


def test_multiply_is_associative_on_series():
    a = SeriesTensor.unit(2, 3) + tensor(from_element(d1(), 3), from_element(L(1, 0), 3)).shift(1)
    b = SeriesTensor.unit(2, 3) + tensor(from_element(L(-1, 1), 3), from_element(d2(), 3)).shift(1)
    c = tensor(from_element(L(0, 1), 3), from_element(L(1, 1), 3))
    assert ts_multiply(ts_multiply(a, b), c) == ts_multiply(a, ts_multiply(b, c))
