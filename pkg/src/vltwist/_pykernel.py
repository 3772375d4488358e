"""Pure-Python product kernel for PBW monomials and sparse tensors.

A normal monomial is ``(p, q, word)`` standing for ``d1^p d2^q L(g1)...L(gn)``
with ``word`` sorted.  Two facts make products cheap:

* an L-word ``W`` of total index ``w`` satisfies ``W d_j = (d_j - w_j) W``,
  so moving derivations left costs one binomial expansion;
* L-words close among themselves, so only the L part needs straightening.

``_ckernel.pyx`` is a typed transcription of this module and must stay in
step with it.  Words hold :class:`GroupVec` values, so ``x + g`` below is
vector addition.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from fractions import Fraction
from math import comb, lcm

IMPLEMENTATION = "python"


@lru_cache(maxsize=None)
def word_index(word):
    s1 = 0
    s2 = 0
    for g in word:
        s1 += g[0]
        s2 += g[1]
    return s1, s2


@lru_cache(maxsize=None)
def insert_right(word, g):
    """Normal form of ``word * L(g)`` as a tuple of ``(word, coeff)``."""
    if not word or word[-1] <= g:
        return ((word + (g,), 1),)
    x = word[-1]
    rest = word[:-1]
    out = {}
    # rest * L(g) * L(x): x is moved back to the right of g
    for v, c in insert_right(rest, g):
        for v2, c2 in insert_right(v, x):
            out[v2] = out.get(v2, 0) + c * c2
    # rest * [L(x), L(g)]
    p = x[0] * g[1] - x[1] * g[0]
    if p:
        s = x + g
        for v, c in insert_right(rest, s):
            out[v] = out.get(v, 0) + p * c
    return tuple((v, c) for v, c in out.items() if c)


@lru_cache(maxsize=None)
def mul_words(w1, w2):
    if not w1 or not w2 or w1[-1] <= w2[0]:
        return ((w1 + w2, 1),)
    cur = {w1: 1}
    for g in w2:
        nxt = {}
        for v, c in cur.items():
            for v2, c2 in insert_right(v, g):
                nxt[v2] = nxt.get(v2, 0) + c * c2
        cur = {v: c for v, c in nxt.items() if c}
    return tuple(cur.items())


def _shift_expansion(base, n, shift):
    """Coefficients of ``(d - shift)^n`` as ``[(exponent, coeff)]`` offset by base."""
    if n == 0:
        return ((base, 1),)
    if shift == 0:
        return ((base + n, 1),)
    neg = -shift
    return tuple((base + i, comb(n, i) * neg ** (n - i)) for i in range(n + 1))


@lru_cache(maxsize=None)
def mul_monomials(m1, m2):
    """Normal form of ``m1 * m2`` as a tuple of ``(monomial, coeff)``."""
    p1, q1, w1 = m1
    p2, q2, w2 = m2
    if not w1:
        return (((p1 + p2, q1 + q2, w2), 1),)
    s1, s2 = word_index(w1)
    ps = _shift_expansion(p1, p2, s1)
    qs = _shift_expansion(q1, q2, s2)
    words = mul_words(w1, w2)
    out = {}
    for p, cp in ps:
        for q, cq in qs:
            cpq = cp * cq
            for w, cw in words:
                key = (p, q, w)
                out[key] = out.get(key, 0) + cpq * cw
    return tuple((k, c) for k, c in out.items() if c)


def _common_denominator(values):
    den = 1
    for c in values:
        d = c.denominator
        if d != 1:
            den = lcm(den, d)
    return den


def _scaled(terms):
    """``(den, {key: int})`` with ``terms[key] == ints[key] / den``."""
    den = _common_denominator(terms.values())
    if den == 1:
        return 1, {k: int(c) for k, c in terms.items()}
    return den, {k: (c * den).numerator for k, c in terms.items()}


@lru_cache(maxsize=None)
def mul_monomials_scaled(m1, m2):
    """``mul_monomials`` with integer coefficients over one denominator."""
    items = mul_monomials(m1, m2)
    den = _common_denominator(c for _, c in items)
    if den == 1:
        return 1, tuple((m, int(c)) for m, c in items)
    return den, tuple((m, (c * den).numerator) for m, c in items)


def _unscale(buckets, den0):
    out = {}
    for den, bucket in buckets.items():
        total = den * den0
        for k, v in bucket.items():
            if v:
                out[k] = out.get(k, 0) + Fraction(v, total)
    return {k: c for k, c in out.items() if c}


def mul_terms(a, b):
    """Product of two element term maps ``{monomial: coeff}``."""
    da, ia = _scaled(a)
    db, ib = _scaled(b)
    buckets = {}
    for m1, c1 in ia.items():
        for m2, c2 in ib.items():
            den, items = mul_monomials_scaled(m1, m2)
            bucket = buckets.get(den)
            if bucket is None:
                bucket = buckets[den] = {}
            c = c1 * c2
            for m, k in items:
                bucket[m] = bucket.get(m, 0) + c * k
    return _unscale(buckets, da * db)


def tensor_mul_terms(a, b, order):
    """Sparse product of two tensor term maps ``{(deg, monos): coeff}``.

    Slots multiply independently; t-degrees add and anything above ``order``
    is dropped.  Accumulation runs on integer numerators.
    """
    da, ia = _scaled(a)
    db, ib = _scaled(b)
    buckets = {}
    for (dega, ma), ca in ia.items():
        for (degb, mb), cb in ib.items():
            d = dega + degb
            if d > order:
                continue
            c = ca * cb
            den = 1
            prods = []
            single = True
            for x, y in zip(ma, mb):
                pden, items = mul_monomials_scaled(x, y)
                if pden != 1:
                    den *= pden
                if len(items) != 1:
                    single = False
                prods.append(items)
            bucket = buckets.get(den)
            if bucket is None:
                bucket = buckets[den] = {}
            if single:
                key = (d, tuple(pr[0][0] for pr in prods))
                for pr in prods:
                    c *= pr[0][1]
                bucket[key] = bucket.get(key, 0) + c
                continue
            for combo in product(*prods):
                cc = c
                for _, k in combo:
                    cc *= k
                key = (d, tuple(m for m, _ in combo))
                bucket[key] = bucket.get(key, 0) + cc
    return _unscale(buckets, da * db)


def clear_caches():
    for fn in (word_index, insert_right, mul_words, mul_monomials, mul_monomials_scaled):
        fn.cache_clear()

