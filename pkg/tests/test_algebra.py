import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from vltwist.algebra import (
    D1,
    D2,
    AlgElement,
    L,
    UNIT,
    bracket,
    d1,
    d2,
    falling_factorial,
    gen_L,
    monomial_word,
    multiply,
    power,
    render,
    rising_factorial,
    straighten,
)
from vltwist.scalars import GroupVec

from oracles import as_plain, naive_product, naive_straighten

LATTICE = [GroupVec(x, y) for x in range(-2, 3) for y in range(-2, 3) if (x, y) != (0, 0)]


def _tok(g):
    if g.kind == "d1":
        return ("d", 1)
    if g.kind == "d2":
        return ("d", 2)
    return ("L", tuple(g.index))


def random_generator(rng):
    r = rng.random()
    if r < 0.15:
        return D1
    if r < 0.3:
        return D2
    return gen_L(rng.choice(LATTICE))


def random_element(rng, max_deg=3, n_terms=3):
    x = AlgElement()
    for _ in range(n_terms):
        word = [random_generator(rng) for _ in range(rng.randint(0, max_deg))]
        x = x + straighten(word) * Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return x


def test_straighten_examples():
    assert straighten([]) == AlgElement.one()
    assert straighten([gen_L(1, 0), gen_L(0, 1)]) == L(0, 1) * L(1, 0) + L(1, 1)
    assert straighten([gen_L(1, 0), D1]) == d1() * L(1, 0) - L(1, 0)
    x = straighten([gen_L(1, 0), gen_L(0, 1)])
    assert as_plain(x) == {(0, 0, ((0, 1), (1, 0))): 1, (0, 0, ((1, 1),)): 1}


def test_multiply_examples():
    x = L(2, -1) + d1() * 3
    assert multiply(AlgElement.one(), x) == x
    assert multiply(x, AlgElement.one()) == x
    assert as_plain(multiply(d1(), d2())) == {(1, 1, ()): 1}


def test_bracket_examples():
    assert bracket(L(1, 0), L(0, 1)) == L(1, 1)
    assert bracket(d1(), L(2, 3)) == L(2, 3) * 2
    x = L(1, 2) + d2()
    assert bracket(x, x).is_zero()
    assert bracket(d1(), d2()).is_zero()
    assert bracket(L(1, 2), L(-1, -2)).is_zero()
    assert bracket(L(1, 2), L(2, 4)).is_zero()


def test_zero_index_collapses():
    assert L(0, 0).is_zero()
    with pytest.raises(ValueError):
        gen_L(0, 0)
    # [L(1,1), L(-1,-1)] lands on L(0,0); nothing survives
    assert (L(1, 1) * L(-1, -1) - L(-1, -1) * L(1, 1)).is_zero()
    assert bracket(L(1, 2), L(-1, 1)) == L(0, 3) * 3


def test_power_examples():
    x = L(1, -1) + d2()
    assert power(x, 0) == AlgElement.one()
    assert as_plain(power(L(1, 0), 2)) == {(0, 0, ((1, 0), (1, 0))): 1}
    assert power(d1() + 1, 2) == d1() * d1() + d1() * 2 + 1
    with pytest.raises(ValueError):
        power(x, -1)


def test_factorial_examples():
    T = d1() * Fraction(1, 2) + d2() * 3
    assert rising_factorial(T, 3, 0) == AlgElement.one()
    assert falling_factorial(T, 3, 0) == AlgElement.one()
    assert rising_factorial(d1(), 0, 2) == d1() * d1() + d1()
    assert rising_factorial(d1(), 1, 1) == d1() + 1
    assert falling_factorial(d1(), 0, 2) == d1() * d1() - d1()
    for a in (Fraction(0), Fraction(5, 3), Fraction(-2)):
        for n in range(5):
            assert falling_factorial(T, a, n) == rising_factorial(T, a - n + 1, n)


def test_straighten_matches_oracle():
    rng = random.Random(11)
    for _ in range(200):
        word = [random_generator(rng) for _ in range(rng.randint(0, 5))]
        assert as_plain(straighten(word)) == naive_straighten([_tok(g) for g in word])


def test_multiply_matches_oracle_with_rational_indices():
    rng = random.Random(5)
    pts = [GroupVec.of(Fraction(rng.randint(-3, 3), rng.randint(1, 3)), Fraction(rng.randint(-3, 3), 2))
           for _ in range(6)]
    pts = [p for p in pts if not p.is_zero()]
    for _ in range(60):
        x = AlgElement()
        y = AlgElement()
        for _ in range(2):
            x = x + straighten([gen_L(rng.choice(pts)) for _ in range(rng.randint(0, 2))] + [D1] * rng.randint(0, 1))
            y = y + straighten([D2] * rng.randint(0, 1) + [gen_L(rng.choice(pts)) for _ in range(rng.randint(0, 2))])
        assert as_plain(x * y) == naive_product(as_plain(x), as_plain(y))


def test_associativity():
    rng = random.Random(3)
    for _ in range(100):
        x, y, z = (random_element(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_jacobi():
    rng = random.Random(4)
    for _ in range(100):
        x, y, z = (straighten([random_generator(rng)]) for _ in range(3))
        j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert j.is_zero()


def test_straighten_idempotent():
    rng = random.Random(6)
    for _ in range(50):
        x = random_element(rng, max_deg=4)
        for m in x.monomials():
            assert straighten(monomial_word(m)) == AlgElement({m: 1})


def test_normal_form_invariants():
    rng = random.Random(8)
    for _ in range(50):
        x = random_element(rng)
        for m, c in x.items():
            assert c != 0
            w = m[2]
            assert list(w) == sorted(w)
            assert all(not g.is_zero() for g in w)


def test_unit_and_scalars():
    assert AlgElement.one().coefficient(UNIT) == 1
    assert (d1() * 0).is_zero()
    assert (2 * L(1, 0)) == L(1, 0) + L(1, 0)
    assert (L(1, 0) - L(1, 0)).is_zero()
    assert AlgElement.scalar(Fraction(3, 2)).is_scalar()


def test_render():
    assert render(AlgElement()) == "0"
    assert render(straighten([gen_L(1, 0), D1])) == "-L(1,0) + d1*L(1,0)"
    assert render((d1() + 1) * (d1() + 1)) == "1 + 2*d1 + d1^2"
    assert render(L(Fraction(1, 2), -1) * Fraction(-3, 4)) == "-3/4*L(1/2,-1)"


small = st.integers(-2, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=2, max_size=4))
def test_l_words_match_oracle(points):
    word = [gen_L(*p) for p in points if p != (0, 0)]
    assert as_plain(straighten(word)) == naive_straighten([_tok(g) for g in word])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_bilinearity(seed):
    rng = random.Random(seed)
    x, y, z = (random_element(rng, 2, 2) for _ in range(3))
    k = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
    assert (x + y * k) * z == x * z + (y * z) * k
    assert z * (x + y * k) == z * x + (z * y) * k
