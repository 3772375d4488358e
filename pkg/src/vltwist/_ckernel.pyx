# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled product kernel; a typed transcription of ``_pykernel``.

Caches are plain dicts instead of ``lru_cache``; results are identical.
"""

from fractions import Fraction
from math import comb, lcm

IMPLEMENTATION = "cython"

cdef dict _word_index = {}
cdef dict _insert_right = {}
cdef dict _mul_words = {}
cdef dict _mul_monomials = {}
cdef dict _mul_scaled = {}


def word_index(word):
    r = _word_index.get(word)
    if r is not None:
        return r
    s1 = 0
    s2 = 0
    for g in word:
        s1 += g[0]
        s2 += g[1]
    r = (s1, s2)
    _word_index[word] = r
    return r


cdef tuple _insert(word, g):
    cdef tuple key = (word, g)
    cdef object r = _insert_right.get(key)
    if r is not None:
        return <tuple>r
    cdef Py_ssize_t n = len(word)
    if n == 0 or word[n - 1] <= g:
        r = ((word + (g,), 1),)
        _insert_right[key] = r
        return <tuple>r
    cdef object x = word[n - 1]
    rest = word[:n - 1]
    cdef dict out = {}
    for v, c in _insert(rest, g):
        for v2, c2 in _insert(v, x):
            out[v2] = out.get(v2, 0) + c * c2
    p = x[0] * g[1] - x[1] * g[0]
    if p:
        s = x + g
        for v, c in _insert(rest, s):
            out[v] = out.get(v, 0) + p * c
    r = tuple([(v, c) for v, c in out.items() if c])
    _insert_right[key] = r
    return <tuple>r


def insert_right(word, g):
    """Normal form of ``word * L(g)`` as a tuple of ``(word, coeff)``."""
    return _insert(word, g)


cdef tuple _mwords(w1, w2):
    cdef tuple key = (w1, w2)
    cdef object r = _mul_words.get(key)
    if r is not None:
        return <tuple>r
    if not w1 or not w2 or w1[len(w1) - 1] <= w2[0]:
        r = ((w1 + w2, 1),)
        _mul_words[key] = r
        return <tuple>r
    cdef dict cur = {w1: 1}
    cdef dict nxt
    for g in w2:
        nxt = {}
        for v, c in cur.items():
            for v2, c2 in _insert(v, g):
                nxt[v2] = nxt.get(v2, 0) + c * c2
        cur = {v: c for v, c in nxt.items() if c}
    r = tuple(cur.items())
    _mul_words[key] = r
    return <tuple>r


def mul_words(w1, w2):
    return _mwords(w1, w2)


cdef tuple _shift_expansion(long base, long n, shift):
    if n == 0:
        return ((base, 1),)
    if shift == 0:
        return ((base + n, 1),)
    neg = -shift
    return tuple([(base + i, comb(n, i) * neg ** (n - i)) for i in range(n + 1)])


cdef tuple _mmono(m1, m2):
    cdef tuple key = (m1, m2)
    cdef object r = _mul_monomials.get(key)
    if r is not None:
        return <tuple>r
    cdef long p1 = m1[0], q1 = m1[1], p2 = m2[0], q2 = m2[1]
    w1 = m1[2]
    w2 = m2[2]
    if not w1:
        r = (((p1 + p2, q1 + q2, w2), 1),)
        _mul_monomials[key] = r
        return <tuple>r
    s1, s2 = word_index(w1)
    cdef tuple ps = _shift_expansion(p1, p2, s1)
    cdef tuple qs = _shift_expansion(q1, q2, s2)
    cdef tuple words = _mwords(w1, w2)
    cdef dict out = {}
    for p, cp in ps:
        for q, cq in qs:
            cpq = cp * cq
            for w, cw in words:
                k = (p, q, w)
                out[k] = out.get(k, 0) + cpq * cw
    r = tuple([(k, c) for k, c in out.items() if c])
    _mul_monomials[key] = r
    return <tuple>r


def mul_monomials(m1, m2):
    """Normal form of ``m1 * m2`` as a tuple of ``(monomial, coeff)``."""
    return _mmono(m1, m2)


cdef object _common_denominator(values):
    den = 1
    for c in values:
        d = c.denominator
        if d != 1:
            den = lcm(den, d)
    return den


cdef tuple _scaled(dict terms):
    den = _common_denominator(terms.values())
    if den == 1:
        return 1, {k: int(c) for k, c in terms.items()}
    return den, {k: (c * den).numerator for k, c in terms.items()}


cdef tuple _mscaled(m1, m2):
    cdef tuple key = (m1, m2)
    cdef object r = _mul_scaled.get(key)
    if r is not None:
        return <tuple>r
    cdef tuple items = _mmono(m1, m2)
    den = _common_denominator([c for _, c in items])
    if den == 1:
        r = (1, tuple([(m, int(c)) for m, c in items]))
    else:
        r = (den, tuple([(m, (c * den).numerator) for m, c in items]))
    _mul_scaled[key] = r
    return <tuple>r


def mul_monomials_scaled(m1, m2):
    """``mul_monomials`` with integer coefficients over one denominator."""
    return _mscaled(m1, m2)


cdef dict _unscale(dict buckets, den0):
    cdef dict out = {}
    cdef dict bucket
    for den, bucket in buckets.items():
        total = den * den0
        for k, v in bucket.items():
            if v:
                out[k] = out.get(k, 0) + Fraction(v, total)
    return {k: c for k, c in out.items() if c}


def mul_terms(dict a, dict b):
    """Product of two element term maps ``{monomial: coeff}``."""
    da, ia = _scaled(a)
    db, ib = _scaled(b)
    cdef dict buckets = {}
    cdef dict bucket
    cdef tuple items, pr
    for m1, c1 in (<dict>ia).items():
        for m2, c2 in (<dict>ib).items():
            pr = _mscaled(m1, m2)
            den = pr[0]
            items = pr[1]
            bucket = buckets.get(den)
            if bucket is None:
                bucket = {}
                buckets[den] = bucket
            c = c1 * c2
            for m, k in items:
                bucket[m] = bucket.get(m, 0) + c * k
    return _unscale(buckets, da * db)


cdef object _expand(list prods, Py_ssize_t i, Py_ssize_t n, list monos, object c,
                  long d, dict bucket):
    cdef tuple items, mk
    if i == n:
        key = (d, tuple(monos))
        bucket[key] = bucket.get(key, 0) + c
        return
    items = <tuple>prods[i]
    for mk in items:
        monos[i] = mk[0]
        _expand(prods, i + 1, n, monos, c * mk[1], d, bucket)


def tensor_mul_terms(dict a, dict b, long order):
    """Sparse product of two tensor term maps ``{(deg, monos): coeff}``."""
    da, ia = _scaled(a)
    db, ib = _scaled(b)
    cdef dict buckets = {}
    cdef dict bucket
    cdef tuple ka, kb, ma, mb, pr, items
    cdef long d, dega, degb
    cdef Py_ssize_t i, n
    cdef bint single
    cdef list prods, firsts
    for ka, ca in (<dict>ia).items():
        dega = ka[0]
        ma = <tuple>ka[1]
        n = len(ma)
        for kb, cb in (<dict>ib).items():
            degb = kb[0]
            d = dega + degb
            if d > order:
                continue
            mb = <tuple>kb[1]
            c = ca * cb
            den = 1
            single = True
            prods = []
            for i in range(n):
                pr = _mscaled(ma[i], mb[i])
                if pr[0] != 1:
                    den = den * pr[0]
                items = <tuple>pr[1]
                if len(items) != 1:
                    single = False
                prods.append(items)
            bucket = buckets.get(den)
            if bucket is None:
                bucket = {}
                buckets[den] = bucket
            if single:
                firsts = []
                for i in range(n):
                    items = <tuple>prods[i]
                    pr = <tuple>items[0]
                    firsts.append(pr[0])
                    c = c * pr[1]
                key = (d, tuple(firsts))
                bucket[key] = bucket.get(key, 0) + c
            else:
                _expand(prods, 0, n, [None] * n, c, d, bucket)
    return _unscale(buckets, da * db)


def clear_caches():
    for cache in (_word_index, _insert_right, _mul_words, _mul_monomials, _mul_scaled):
        cache.clear()
