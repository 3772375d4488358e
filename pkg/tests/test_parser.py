from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from vltwist.algebra import AlgElement, L, d1, d2, render
from vltwist.parser import BinOp, LGen, Neg, Num, ParseError, Pow, parse_element, parse_expr


def test_examples():
    assert parse_element("L(1,0)*L(0,1)") == L(0, 1) * L(1, 0) + L(1, 1)
    assert parse_element("L(0,0)").is_zero()
    assert parse_element("falling(d1, 0, 2)") == d1() * d1() - d1()
    assert parse_element("rising(d1, 0, 2)") == d1() * d1() + d1()


def test_precedence_and_associativity():
    assert parse_expr("1 - 2 - 3") == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse_expr("d1 + d2 * d1 ^ 2") == parse_expr("d1 + (d2 * (d1 ^ 2))")
    assert parse_expr("-d1^2") == Neg(Pow(parse_expr("d1"), 2))
    assert parse_element("1 - 2 - 3") == AlgElement.scalar(-4)
    assert parse_element("(d1 + 1)^2") == d1() * d1() + d1() * 2 + 1


def test_rationals_and_lattice():
    assert parse_expr("L(-1/2, 3)") == LGen(Fraction(-1, 2), Fraction(3))
    assert parse_element("3/6 * d2") == d2() * Fraction(1, 2)
    assert parse_element("  L( 1 ,  -2 ) ") == L(1, -2)
    assert parse_element("falling(d1 + d2, -1/2, 3)") == parse_element(
        "(d1 + d2 - 1/2) * (d1 + d2 - 3/2) * (d1 + d2 - 5/2)"
    )


@pytest.mark.parametrize(
    "text, column",
    [
        ("d1 +", 5),
        ("L(1,)", 5),
        ("d1 ^ 1/2", 6),
        ("foo", 1),
        ("d1 d2", 4),
        ("(d1", 4),
        ("d1 $ 2", 4),
        ("rising(d1, 0)", 13),
        ("3/0", 1),
        ("", 1),
    ],
)
def test_errors_carry_columns(text, column):
    with pytest.raises(ParseError) as exc:
        parse_element(text)
    assert exc.value.column == column
    assert str(exc.value).startswith(f"column {column}:")


CANONICAL = [
    "0",
    "1",
    "-3/4*L(1/2,-1)",
    "1 + 2*d1 + d1^2",
    "L(1,1) + L(0,1)*L(1,0)",
    "-L(1,0) + d1*L(1,0)",
    "d1^2*d2*L(-1,2)^2*L(0,1)",
]


@pytest.mark.parametrize("text", CANONICAL)
def test_canonical_strings_are_fixed_points(text):
    assert render(parse_element(text)) == text


gen = st.sampled_from(["d1", "d2", "L(1,0)", "L(0,1)", "L(-1,2)", "L(1/2,1)", "2", "-1/3"])


@st.composite
def expressions(draw, depth=3):
    if depth == 0 or draw(st.booleans()):
        return draw(gen)
    op = draw(st.sampled_from(["+", "-", "*", "^"]))
    left = draw(expressions(depth=depth - 1))
    if op == "^":
        return f"({left})^{draw(st.integers(0, 2))}"
    right = draw(expressions(depth=depth - 1))
    return f"({left}) {op} ({right})"


@settings(max_examples=80, deadline=None)
@given(expressions())
def test_render_round_trip(text):
    x = parse_element(text)
    s = render(x)
    assert parse_element(s) == x
    assert render(parse_element(s)) == s
