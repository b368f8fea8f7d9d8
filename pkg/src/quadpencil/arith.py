"""Integer and rational helpers: square classes and prime supports."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from sympy import factorint

from .errors import InvalidInput


@lru_cache(maxsize=65536)
def _factor(n):
    return tuple(sorted((int(p), int(e)) for p, e in factorint(n).items()))


def factor_int(n):
    """Prime factorization of |n| as a sorted tuple of (p, e)."""
    n = abs(int(n))
    if n == 0:
        raise InvalidInput("cannot factor 0")
    if n == 1:
        return ()
    return _factor(n)


def squarefree_int(n):
    """Signed squarefree kernel of a nonzero integer."""
    if n == 0:
        raise InvalidInput("square class of 0")
    out = -1 if n < 0 else 1
    for p, e in factor_int(n):
        if e % 2:
            out *= p
    return out


def square_class(q):
    """Square-class representative of a nonzero rational: squarefree int."""
    q = Fraction(q)
    if q == 0:
        raise InvalidInput("square class of 0")
    return squarefree_int(q.numerator * q.denominator)


def is_rational_square(q):
    q = Fraction(q)
    if q < 0:
        return False
    return (math.isqrt(q.numerator) ** 2 == q.numerator
            and math.isqrt(q.denominator) ** 2 == q.denominator)


def prime_support(q):
    """Primes dividing the numerator or denominator of a nonzero rational."""
    q = Fraction(q)
    ps = {p for p, _ in factor_int(q.numerator)}
    ps |= {p for p, _ in factor_int(q.denominator)}
    return sorted(ps)


def valuation(n, p):
    """p-adic valuation of a nonzero rational."""
    q = Fraction(n)
    if q == 0:
        raise InvalidInput("valuation of 0")
    v = 0
    a, b = q.numerator, q.denominator
    while a % p == 0:
        a //= p
        v += 1
    while b % p == 0:
        b //= p
        v -= 1
    return v
