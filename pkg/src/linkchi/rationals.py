"""Exact rational arithmetic and elementary number-theoretic functions.

Every coefficient in this package lives in Q.  ``QQ`` is gmpy2's ``mpq``
when available (much faster), otherwise the stdlib ``Fraction``; both are
arbitrary precision, keep gcd(num, den) = 1 and den >= 1 automatically,
and interoperate with plain ``int``.

Caches below are plain dicts filled idempotently, which is safe for
concurrent readers and concurrent first fills under CPython.
"""

from __future__ import annotations

import threading
from math import comb, isqrt

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

__all__ = [
    "QQ",
    "as_qq",
    "qq_str",
    "divisors",
    "mobius",
    "totient",
    "bernoulli",
    "binomial",
]


def as_qq(value) -> "QQ":
    """Coerce an int, Fraction, mpq or 'a/b' string to QQ."""
    if isinstance(value, str):
        if "/" in value:
            num, den = value.split("/")
            return QQ(int(num), int(den))
        return QQ(int(value))
    return QQ(value)


def qq_str(value) -> str:
    """Render a rational as 'num' or 'num/den'."""
    q = QQ(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_divisor_cache: dict[int, tuple[int, ...]] = {}


def divisors(n: int) -> tuple[int, ...]:
    """Sorted positive divisors of n >= 1."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    cached = _divisor_cache.get(n)
    if cached is not None:
        return cached
    small, large = [], []
    for a in range(1, isqrt(n) + 1):
        if n % a == 0:
            small.append(a)
            if a != n // a:
                large.append(n // a)
    out = tuple(small + large[::-1])
    _divisor_cache[n] = out
    return out


_mobius_cache: dict[int, int] = {1: 1}


def mobius(n: int) -> int:
    """Moebius mu(n): 0 if n has a squared prime factor, else (-1)^(#primes)."""
    if n < 1:
        raise ValueError(f"mobius requires n >= 1, got {n}")
    cached = _mobius_cache.get(n)
    if cached is not None:
        return cached
    m, factors = n, 0
    p = 2
    result = None
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                result = 0
                break
            factors += 1
        else:
            p += 1 if p == 2 else 2
    if result is None:
        if m > 1:
            factors += 1
        result = -1 if factors % 2 else 1
    _mobius_cache[n] = result
    return result


_totient_cache: dict[int, int] = {1: 1}


def totient(n: int) -> int:
    """Euler phi(n) = sum over divisors a of n of mu(a) * n / a."""
    if n < 1:
        raise ValueError(f"totient requires n >= 1, got {n}")
    cached = _totient_cache.get(n)
    if cached is not None:
        return cached
    result = sum(mobius(a) * (n // a) for a in divisors(n))
    _totient_cache[n] = result
    return result


_bernoulli_cache: list = [QQ(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(p: int) -> "QQ":
    """Bernoulli number B_p with sum_{p>=0} B_p x^p / p! = x / (e^x - 1).

    This convention gives B_1 = -1/2 (the other common one uses +1/2);
    the power-sum polynomials in :mod:`linkchi.special` carry explicit
    (-1)^p factors that presuppose it.  Computed by the recurrence
    sum_{i=0}^{p} C(p+1, i) B_i = 0 for p >= 1, memoized.
    """
    if p < 0:
        raise ValueError(f"bernoulli requires p >= 0, got {p}")
    cache = _bernoulli_cache
    if len(cache) <= p:
        # the growable list needs ordered appends, unlike the dict caches
        with _bernoulli_lock:
            while len(cache) <= p:
                m = len(cache)
                acc = QQ(0)
                for i in range(m):
                    acc += comb(m + 1, i) * cache[i]
                cache.append(-acc / (m + 1))
    return cache[p]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient; for n < 0 the generalized n(n-1)...(n-k+1)/k!."""
    if k < 0:
        raise ValueError(f"binomial requires k >= 0, got {k}")
    if n >= 0:
        return comb(n, k)
    # C(n, k) = (-1)^k C(k - n - 1, k) for negative n
    return (-1 if k % 2 else 1) * comb(k - n - 1, k)
