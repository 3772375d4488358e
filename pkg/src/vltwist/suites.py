"""Named verification suites.

Each suite maps onto one identity family and returns a :class:`Report`.
Random parameters come from ``random.Random(seed)`` over small rationals
(numerator in [-5, 5], denominator in 1..5), so a suite is a pure function of
its arguments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from .algebra import AlgElement, L, d1, d2, falling_factorial, power, rising_factorial
from .hopf import coproduct0, default_sample, verify_hopf0
from .report import Report, check_equal, check_variants
from .scalars import GroupVec, binom_general, format_rational, rational
from .series import SeriesTensor, binomial_series, tensor, from_element, ts_invert
from .twist import (
    TwistContext,
    build_curly_F,
    build_plain_F,
    build_u,
    build_v,
    generator_label,
    make_context,
    verify_lemma_3_4,
    verify_theorem_2_6,
    verify_twist,
    verify_twisted_hopf,
)

DEFAULT_BETAS = (GroupVec(0, 1), GroupVec(1, 1), GroupVec(-1, 2))
LEMMA_3_2_VALUES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2))
LEMMA_3_4_A = (Fraction(0), Fraction(1), Fraction(-1, 2))
LEMMA_3_4_BETAS = (GroupVec(0, 1), GroupVec(1, 1))


class UnknownSuite(KeyError):
    pass


@dataclass
class Extras:
    """Optional suite parameters; ``None`` means the suite default."""

    a: list | None = None
    d: list | None = None
    beta: list | None = None
    gamma: list | None = None
    seed: int = 0
    cases: int | None = None
    max_degree: int | None = None


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-5, 5), rng.randint(1, 5))


def random_vec(rng: random.Random) -> GroupVec:
    while True:
        v = GroupVec.of(random_rational(rng), random_rational(rng))
        if not v.is_zero():
            return v


def _fmt_list(xs) -> list:
    return [format_rational(x) for x in xs]


def _params(ctx: TwistContext, extras: Extras, **more) -> dict:
    p = ctx.params()
    p["seed"] = extras.seed
    p.update(more)
    return p


def _merge(target: Report, *others: Report):
    for r in others:
        target.extend(r.checks)


def _case(i: int) -> str:
    return f"case={i:02d}"


# -- lemma2_3 ---------------------------------------------------------------------------

def _signed_binom_rhs(a, d, r):
    # the displayed right-hand side of the second summation identity
    return binom_general(a - d + r - 1, r)


def suite_lemma2_3(ctx: TwistContext, extras: Extras) -> Report:
    """Shifted-factorial identities with ``x = T``."""
    rng = random.Random(extras.seed)
    bound = 6 if extras.max_degree is None else extras.max_degree
    if extras.a is not None or extras.d is not None:
        avals = extras.a or [Fraction(0)]
        dvals = extras.d or [Fraction(0)]
        pairs = [(a, d) for a in avals for d in dvals]
    else:
        n_cases = 20 if extras.cases is None else extras.cases
        pairs = [(random_rational(rng), random_rational(rng)) for _ in range(n_cases)]
    x = ctx.T
    one = AlgElement.one()
    rise = lambda a, n: rising_factorial(x, a, n)  # noqa: E731
    fall = lambda a, n: falling_factorial(x, a, n)  # noqa: E731
    report = Report("lemma2_3", _params(
        ctx, extras, max_degree=bound,
        cases=[[format_rational(a), format_rational(d)] for a, d in pairs],
    ))

    def mixed_sum(a, d, r):
        return sum(
            (fall(a, m) * rise(d, r - m) * Fraction((-1) ** (r - m), factorial(m) * factorial(r - m))
             for m in range(r + 1)),
            AlgElement(),
        )

    def falling_sum(a, d, r):
        return sum(
            (fall(a, m) * fall(d - m, r - m) * Fraction((-1) ** m, factorial(m) * factorial(r - m))
             for m in range(r + 1)),
            AlgElement(),
        )

    grid = [(m, n) for m in range(bound + 1) for n in range(bound + 1)]
    rs = range(bound + 1)
    mixed_lhs = {}
    falling_lhs = {}
    for i, (a, d) in enumerate(pairs):
        c = _case(i)
        report.add(check_equal(
            f"rising_split[{c}]",
            lambda: [rise(a, m + n) for m, n in grid],
            lambda: [rise(a, m) * rise(m + a, n) for m, n in grid],
        ))
        report.add(check_equal(
            f"falling_split[{c}]",
            lambda: [fall(a, m + n) for m, n in grid],
            lambda: [fall(a, m) * fall(a - m, n) for m, n in grid],
        ))
        report.add(check_equal(
            f"falling_as_rising[{c}]",
            lambda: [fall(a, m) for m in rs],
            lambda: [rise(a - m + 1, m) for m in rs],
        ))
        mixed_lhs[i] = [mixed_sum(a, d, r) for r in rs]
        falling_lhs[i] = [falling_sum(a, d, r) for r in rs]
        report.add(check_equal(
            f"mixed_sum[{c}]",
            lambda: mixed_lhs[i],
            lambda: [one * binom_general(a - d, r) for r in rs],
        ))
        report.add(check_equal(
            f"falling_sum[{c}]",
            lambda: falling_lhs[i],
            lambda: [one * binom_general(d - a, r) for r in rs],
        ))

    def holds(lhs, rhs_fn):
        return lambda: all(
            lhs[i] == [one * rhs_fn(a, d, r) for r in rs] for i, (a, d) in enumerate(pairs)
        )

    chk, _ = check_variants("mixed_sum_closed_form", {
        "falling": holds(mixed_lhs, lambda a, d, r: binom_general(a - d, r)),
        "rising": holds(mixed_lhs, lambda a, d, r: binom_general(a - d + r - 1, r)),
    })
    report.add(chk)
    chk, _ = check_variants("falling_sum_closed_form", {
        "displayed": holds(falling_lhs, _signed_binom_rhs),
        "sign-corrected": holds(falling_lhs, lambda a, d, r: (-1) ** r * _signed_binom_rhs(a, d, r)),
    })
    report.add(chk)
    return report


# -- lemma3_1 ---------------------------------------------------------------------------

def suite_lemma3_1(ctx: TwistContext, extras: Extras) -> Report:
    """Commutation of ``L_beta``, ``L_alpha^k`` and ``d_j`` past shifted factorials."""
    rng = random.Random(extras.seed)
    bound = 4 if extras.max_degree is None else extras.max_degree
    n_cases = 20 if extras.cases is None else extras.cases
    cases = []
    for i in range(n_cases):
        a = extras.a[i % len(extras.a)] if extras.a else random_rational(rng)
        beta = extras.beta[i % len(extras.beta)] if extras.beta else random_vec(rng)
        gamma = extras.gamma[i % len(extras.gamma)] if extras.gamma else random_vec(rng)
        cases.append((rational(a), beta, gamma))
    report = Report("lemma3_1", _params(
        ctx, extras, max_degree=bound,
        cases=[[format_rational(a), str(b), str(g)] for a, b, g in cases],
    ))
    T = ctx.T
    La = ctx.L_alpha
    ms = range(bound + 1)
    mk = [(m, k) for m in ms for k in ms]
    for i, (a, beta, gamma) in enumerate(cases):
        c = _case(i)
        b = ctx.b(beta)
        Lb = L(beta)
        Lg = L(gamma)
        fall = lambda s, m: falling_factorial(T, s, m)  # noqa: E731
        rise = lambda s, m: rising_factorial(T, s, m)  # noqa: E731
        report.add(check_equal(
            f"Lb_T_falling[{c}]",
            lambda: [Lb * fall(a, m) for m in ms],
            lambda: [fall(a - b, m) * Lb for m in ms],
        ))
        report.add(check_equal(
            f"Lb_T_rising[{c}]",
            lambda: [Lb * rise(a, m) for m in ms],
            lambda: [rise(a - b, m) * Lb for m in ms],
        ))
        report.add(check_equal(
            f"La_pow_T_falling[{c}]",
            lambda: [power(La, k) * fall(a, m) for m, k in mk],
            lambda: [fall(a - k, m) * power(La, k) for m, k in mk],
        ))
        report.add(check_equal(
            f"La_pow_T_rising[{c}]",
            lambda: [power(La, k) * rise(a, m) for m, k in mk],
            lambda: [rise(a - k, m) * power(La, k) for m, k in mk],
        ))
        for j, dj in ((1, d1()), (2, d2())):
            report.add(check_equal(
                f"dj_pow_T_falling[{c},j={j}]",
                lambda: [power(dj, k) * fall(a, m) for m, k in mk],
                lambda: [fall(a, m) * power(dj, k) for m, k in mk],
            ))
            report.add(check_equal(
                f"dj_pow_T_rising[{c},j={j}]",
                lambda: [power(dj, k) * rise(a, m) for m, k in mk],
                lambda: [rise(a, m) * power(dj, k) for m, k in mk],
            ))
            report.add(check_equal(
                f"dj_Lg_pow[{c},j={j}]",
                lambda: [dj * power(Lg, m) for m in ms],
                lambda: [power(Lg, m) * (m * gamma[j - 1]) + power(Lg, m) * dj for m in ms],
            ))
        p = gamma.x1 * beta.x2 - gamma.x2 * beta.x1
        report.add(check_equal(
            f"Lb_Lg_pow[{c}]",
            lambda: [Lb * power(Lg, m) for m in ms],
            lambda: [
                sum(
                    (power(Lg, m - i) * L(beta + gamma.scale(i)) * ((-1) ** i * comb(m, i) * p ** i)
                     for i in range(m + 1)),
                    AlgElement(),
                )
                for m in ms
            ],
        ))
    return report


# -- lemma3_2 ---------------------------------------------------------------------------

def suite_lemma3_2(ctx: TwistContext, extras: Extras) -> Report:
    """Products and inverses inside the twist family."""
    avals = [rational(x) for x in extras.a] if extras.a else list(LEMMA_3_2_VALUES)
    dvals = [rational(x) for x in extras.d] if extras.d else list(LEMMA_3_2_VALUES)
    n = ctx.order
    La = ctx.L_alpha
    report = Report("lemma3_2", _params(ctx, extras, a=_fmt_list(avals), d=_fmt_list(dvals)))
    one = from_element(AlgElement.one(), n)
    for a in avals:
        for d in dvals:
            tag = f"a={format_rational(a)},d={format_rational(d)}"
            report.add(check_equal(
                f"FF[{tag}]",
                lambda: build_curly_F(ctx, a) * build_plain_F(ctx, d),
                lambda: tensor(one, binomial_series(La, a - d, n)),
            ))
            report.add(check_equal(
                f"vu[{tag}]",
                lambda: build_v(ctx, a) * build_u(ctx, d),
                lambda: binomial_series(La, -(a + d), n),
            ))
    for a in sorted(set(avals) | set(dvals)):
        tag = f"a={format_rational(a)}"
        report.add(check_equal(
            f"invert_curly_F[{tag}]", lambda: ts_invert(build_curly_F(ctx, a)), lambda: build_plain_F(ctx, a)
        ))
        report.add(check_equal(
            f"invert_plain_F[{tag}]", lambda: ts_invert(build_plain_F(ctx, a)), lambda: build_curly_F(ctx, a)
        ))
        report.add(check_equal(f"invert_u[{tag}]", lambda: ts_invert(build_u(ctx, a)), lambda: build_v(ctx, -a)))
        report.add(check_equal(f"invert_v[{tag}]", lambda: ts_invert(build_v(ctx, a)), lambda: build_u(ctx, -a)))
        unit2 = SeriesTensor.unit(2, n)
        chk, _ = check_variants(f"plain_F_sign[{tag}]", {
            v: (lambda v=v: build_curly_F(ctx, a) * build_plain_F(ctx, a, v) == unit2)
            for v in ("canonical", "displayed-sign")
        })
        report.add(chk)
        report.add(check_equal(
            f"u_contraction[{tag}]", lambda: build_u(ctx, a, "contraction"), lambda: build_u(ctx, a)
        ))
        report.add(check_equal(
            f"v_contraction[{tag}]", lambda: build_v(ctx, a, "contraction"), lambda: build_v(ctx, a)
        ))
    return report


# -- lemma3_3 -----------------------------------------------------------------------------

def suite_lemma3_3_coproduct(ctx: TwistContext, extras: Extras) -> Report:
    """``Delta0(T^[m]) = sum_i C(m, i) T_{-a}^[i] (x) T_a^[m-i]``."""
    rng = random.Random(extras.seed)
    bound = 5 if extras.max_degree is None else extras.max_degree
    if extras.a:
        avals = [rational(x) for x in extras.a]
    else:
        n_cases = 10 if extras.cases is None else extras.cases
        avals = [Fraction(0)] + [random_rational(rng) for _ in range(n_cases - 1)]
    report = Report("lemma3_3_coproduct", _params(ctx, extras, a=_fmt_list(avals), max_degree=bound))
    T = ctx.T

    def rhs(a, m):
        terms = {}
        for i in range(m + 1):
            x = falling_factorial(T, -a, i)
            y = falling_factorial(T, a, m - i)
            for m1, c1 in x.items():
                for m2, c2 in y.items():
                    key = (0, (m1, m2))
                    terms[key] = terms.get(key, 0) + comb(m, i) * c1 * c2
        return SeriesTensor(2, 0, terms)

    for i, a in enumerate(avals):
        report.add(check_equal(
            f"coproduct_T_falling[{_case(i)}]",
            lambda: [coproduct0(falling_factorial(T, 0, m), 0) for m in range(bound + 1)],
            lambda: [rhs(a, m) for m in range(bound + 1)],
        ))
    return report


def suite_lemma3_3_twist(ctx: TwistContext, extras: Extras) -> Report:
    r = verify_twist(ctx)
    r.suite = "lemma3_3_twist"
    r.params = _params(ctx, extras)
    return r


# -- lemma3_4 -----------------------------------------------------------------------------

def suite_lemma3_4(ctx: TwistContext, extras: Extras) -> Report:
    avals = [rational(x) for x in extras.a] if extras.a else list(LEMMA_3_4_A)
    betas = list(extras.beta) if extras.beta else list(LEMMA_3_4_BETAS)
    report = Report("lemma3_4", _params(ctx, extras, a=_fmt_list(avals), beta=[str(b) for b in betas]))
    for a in avals:
        for beta in betas:
            _merge(report, verify_lemma_3_4(ctx, a, beta))
    return report


# -- twisted coproduct, antipode and Hopf axioms -------------------------------------------------------

def suite_theorem2_6(ctx: TwistContext, extras: Extras) -> Report:
    betas = list(extras.beta) if extras.beta else list(DEFAULT_BETAS)
    r = verify_theorem_2_6(ctx, betas)
    r.params = _params(ctx, extras, beta=[str(b) for b in betas])
    return r


def hopf_generators(betas) -> dict:
    gens = {f"L{generator_label(str(b))}": L(b) for b in betas}
    gens["d1"] = d1()
    gens["d2"] = d2()
    return gens


def suite_hopf_axioms(ctx: TwistContext, extras: Extras) -> Report:
    betas = list(extras.beta) if extras.beta else list(DEFAULT_BETAS)
    counit_order = max(ctx.order, 5)
    r = verify_twisted_hopf(ctx, hopf_generators(betas), counit_order=counit_order)
    r.params = _params(
        ctx, extras, beta=[str(b) for b in betas], counit_order=counit_order
    )
    _merge(r, verify_hopf0(default_sample(extras.seed), order=0))
    return r


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[TwistContext, Extras], Report]
    default_order: int
    description: str


SUITES = {
    s.name: s
    for s in (
        Suite("lemma2_3", suite_lemma2_3, 0, "shifted-factorial identities for x = T"),
        Suite("lemma3_1", suite_lemma3_1, 0, "commuting L_beta, L_alpha^k, d_j past T-factorials"),
        Suite("lemma3_2", suite_lemma3_2, 6, "products and inverses of the twist family"),
        Suite("lemma3_3_coproduct", suite_lemma3_3_coproduct, 0, "Delta0 of T^[m]"),
        Suite("lemma3_3_twist", suite_lemma3_3_twist, 4, "cocycle and counit conditions of the twist"),
        Suite("lemma3_4", suite_lemma3_4, 4, "commutation of generators with the twist family"),
        Suite("theorem2_6", suite_theorem2_6, 5, "closed-form quantized coproduct and antipode"),
        Suite("hopf_axioms", suite_hopf_axioms, 3, "Hopf axioms of the twisted structure"),
    )
}


def run_suite(name: str, ctx: TwistContext | None = None, extras: Extras | None = None) -> Report:
    if name not in SUITES:
        raise UnknownSuite(name)
    suite = SUITES[name]
    if ctx is None:
        ctx = make_context(order=suite.default_order)
    return suite.run(ctx, extras or Extras())


__all__ = [
    "DEFAULT_BETAS",
    "Extras",
    "SUITES",
    "Suite",
    "UnknownSuite",
    "hopf_generators",
    "random_rational",
    "random_vec",
    "run_suite",
]
