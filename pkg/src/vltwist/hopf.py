"""The undeformed Hopf structure on U: every Lie generator is primitive."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .algebra import UNIT, AlgElement, d1, d2, L, monomial_word, multiply, straighten
from .report import Report, check_equal
from .series import SeriesTensor, apply_in_slot, mu_contract


def _runs(word):
    out = []
    for g in word:
        if out and out[-1][0] == g:
            out[-1][1] += 1
        else:
            out.append([g, 1])
    return out


@lru_cache(maxsize=None)
def _coproduct0_monomial(m):
    # a sub-word of a sorted word is sorted, so both legs are already normal
    p, q, w = m
    runs = _runs(w)
    out = {}
    for i in range(p + 1):
        ci = comb(p, i)
        for k in range(q + 1):
            cik = ci * comb(q, k)
            for split in product(*(range(n + 1) for _, n in runs)):
                c = cik
                left = []
                right = []
                for (g, n), s in zip(runs, split):
                    c *= comb(n, s)
                    left.extend([g] * s)
                    right.extend([g] * (n - s))
                key = (0, ((i, k, tuple(left)), (p - i, q - k, tuple(right))))
                out[key] = out.get(key, 0) + c
    return out


def coproduct0_monomial_map(m):
    return 2, _coproduct0_monomial(tuple(m))


@lru_cache(maxsize=None)
def _antipode0_monomial(m):
    word = monomial_word(m)
    x = straighten(list(reversed(word)))
    if len(word) % 2:
        x = -x
    return {(0, (mm,)): c for mm, c in x.items()}


def antipode0_monomial_map(m):
    return 1, _antipode0_monomial(tuple(m))


def counit0_monomial_map(m):
    return 0, ({(0, ()): 1} if tuple(m) == UNIT else {})


def coproduct0(x: AlgElement, order: int) -> SeriesTensor:
    out: dict = {}
    for m, c in x.items():
        for k, v in _coproduct0_monomial(m).items():
            out[k] = out.get(k, 0) + c * v
    return SeriesTensor(2, order, out)


def counit0(x: AlgElement) -> Fraction:
    return x.coefficient(UNIT)


def antipode0(x: AlgElement) -> AlgElement:
    out: dict = {}
    for m, c in x.items():
        for (_, (mm,)), v in _antipode0_monomial(m).items():
            out[mm] = out.get(mm, 0) + c * v
    return AlgElement(out)


def default_sample(seed: int = 0, extra: int = 10) -> list:
    """Generators on a few lattice points plus seeded degree-2 products."""
    import random

    gens = [d1(), d2()] + [L(*v) for v in ((1, 0), (0, 1), (1, 1), (-1, 2))]
    rng = random.Random(seed)
    sample = list(gens)
    for _ in range(extra):
        sample.append(multiply(rng.choice(gens), rng.choice(gens)))
    return sample


def verify_hopf0(sample=None, order: int = 0) -> Report:
    """Coassociativity, counit laws and the antipode law on ``sample``."""
    if sample is None:
        sample = default_sample()
    report = Report("hopf0", {"order": order, "sample_size": len(sample)})
    for i, x in enumerate(sample):
        dx = coproduct0(x, order)
        unit_eps = SeriesTensor(1, order, {(0, (UNIT,)): counit0(x)})
        xs = SeriesTensor(1, order, {(0, (m,)): c for m, c in x.items()})
        report.add(check_equal(
            f"hopf0_coassoc[{i}]",
            lambda: apply_in_slot(dx, 1, "coproduct0"),
            lambda: apply_in_slot(dx, 2, "coproduct0"),
        ))
        report.add(check_equal(f"hopf0_counit_left[{i}]", lambda: apply_in_slot(dx, 1, "counit0"), lambda: xs))
        report.add(check_equal(f"hopf0_counit_right[{i}]", lambda: apply_in_slot(dx, 2, "counit0"), lambda: xs))
        report.add(check_equal(
            f"hopf0_antipode_left[{i}]",
            lambda: mu_contract(apply_in_slot(dx, 1, "antipode0")),
            lambda: unit_eps,
        ))
        report.add(check_equal(
            f"hopf0_antipode_right[{i}]",
            lambda: mu_contract(apply_in_slot(dx, 2, "antipode0")),
            lambda: unit_eps,
        ))
    return report
