"""Expression language for elements of U.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' nat)?
    atom   := rational | 'd1' | 'd2' | 'L' '(' rational ',' rational ')'
            | ('rising' | 'falling') '(' expr ',' rational ',' nat ')'
            | '(' expr ')'
    rational := '-'? nat ('/' nat)?

Unary minus binds looser than ``^``, so ``-d1^2`` is ``-(d1^2)``.  The
canonical rendering of :func:`vltwist.algebra.render` parses back to the same
element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import AlgElement, L, d1, d2, falling_factorial, power, rising_factorial


class ParseError(ValueError):
    """Syntax error; ``column`` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.message = message
        self.column = column


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    name: str  # "d1" or "d2"


@dataclass(frozen=True)
class LGen:
    x1: Fraction
    x2: Fraction


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Factorial:
    kind: str  # "rising" or "falling"
    arg: "Expr"
    shift: Fraction
    n: int


Expr = Union[Num, Gen, LGen, Neg, BinOp, Pow, Factorial]

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+\s*/\s*\d+|\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^(),]))"
)


@dataclass(frozen=True)
class _Tok:
    kind: str  # num, name, op, end
    text: str
    col: int


def tokenize(s: str) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(s)
    while True:
        while pos < n and s[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(s, pos)
        if not m:
            raise ParseError(f"unexpected character {s[pos]!r}", pos + 1)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    toks.append(_Tok("end", "", n + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        t = self.cur
        return t.kind in ("op", "name") and t.text == text

    def expect(self, text: str) -> _Tok:
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self.advance()

    def fail(self, message: str):
        t = self.cur
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"{message}, found {found}", t.col)

    def parse(self) -> Expr:
        e = self.expr()
        if self.cur.kind != "end":
            self.fail("expected operator or end of input")
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self.at("*"):
            self.advance()
            left = BinOp("*", left, self.factor())
        return left

    def factor(self) -> Expr:
        if self.at("-"):
            self.advance()
            return Neg(self.factor())
        base = self.atom()
        if self.at("^"):
            self.advance()
            return Pow(base, self.nat())
        return base

    def nat(self) -> int:
        t = self.cur
        if t.kind != "num" or "/" in t.text:
            self.fail("expected a nonnegative integer")
        self.advance()
        return int(t.text)

    def rational(self) -> Fraction:
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        t = self.cur
        if t.kind != "num":
            self.fail("expected a rational number")
        self.advance()
        num, _, den = t.text.replace(" ", "").partition("/")
        if den and int(den) == 0:
            raise ParseError("zero denominator", t.col)
        return sign * Fraction(int(num), int(den) if den else 1)

    def atom(self) -> Expr:
        t = self.cur
        if t.kind == "num":
            return Num(self.rational())
        if t.kind == "name":
            if t.text in ("d1", "d2"):
                self.advance()
                return Gen(t.text)
            if t.text == "L":
                self.advance()
                self.expect("(")
                x1 = self.rational()
                self.expect(",")
                x2 = self.rational()
                self.expect(")")
                return LGen(x1, x2)
            if t.text in ("rising", "falling"):
                self.advance()
                self.expect("(")
                arg = self.expr()
                self.expect(",")
                shift = self.rational()
                self.expect(",")
                k = self.nat()
                self.expect(")")
                return Factorial(t.text, arg, shift, k)
            self.fail("unknown name")
        if self.at("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        self.fail("expected an operand")


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def evaluate(e: Expr) -> AlgElement:
    if isinstance(e, Num):
        return AlgElement.scalar(e.value)
    if isinstance(e, Gen):
        return d1() if e.name == "d1" else d2()
    if isinstance(e, LGen):
        return L(e.x1, e.x2)
    if isinstance(e, Neg):
        return -evaluate(e.operand)
    if isinstance(e, Pow):
        return power(evaluate(e.base), e.exponent)
    if isinstance(e, Factorial):
        fn = rising_factorial if e.kind == "rising" else falling_factorial
        return fn(evaluate(e.arg), e.shift, e.n)
    if isinstance(e, BinOp):
        x = evaluate(e.left)
        y = evaluate(e.right)
        if e.op == "+":
            return x + y
        if e.op == "-":
            return x - y
        return x * y
    raise TypeError(f"not an expression node: {e!r}")


def parse_element(text: str) -> AlgElement:
    return evaluate(parse_expr(text))


__all__ = [
    "BinOp",
    "Factorial",
    "Gen",
    "LGen",
    "Neg",
    "Num",
    "ParseError",
    "Pow",
    "evaluate",
    "parse_element",
    "parse_expr",
    "tokenize",
]
