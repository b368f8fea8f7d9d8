"""Irreducible factorization of univariate polynomials over Q.

Squarefree decomposition, then Cantor-Zassenhaus modulo a small prime,
multifactor Hensel lifting up to a Mignotte bound and subset recombination.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import isprime

from .errors import InvalidInput
from .poly import ONE, Poly, squarefree_decomposition


@dataclass(frozen=True)
class PolyFactorization:
    unit: Fraction
    factors: list = field(default_factory=list)  # [(Poly, multiplicity)]

    def expand(self):
        out = Poly([self.unit])
        for p, m in self.factors:
            out = out * p**m
        return out

    def irreducible_factors(self):
        return [p for p, _ in self.factors]


# -- dense arithmetic modulo p (coefficient lists, low degree first) ----------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod(a, p):
    return _trim([c % p for c in a])


def _sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod(out, p)


def _divmod(a, b, p):
    inv = pow(b[-1], -1, p)
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _trim(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                r[k + j] = (r[k + j] - c * bj) % p
    return _trim(q), _trim(r[:db])


def _rem(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gcd(a, b, p):
    a, b = _mod(list(a), p), _mod(list(b), p)
    while b:
        a, b = b, _rem(a, b, p)
    return _monic(a, p) if a else a


def _ext_gcd(a, b, p):
    """(g, s, t) with s*a + t*b = g monic."""
    r0, r1 = _mod(list(a), p), _mod(list(b), p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return ([c * inv % p for c in r0], [c * inv % p for c in s0],
            [c * inv % p for c in t0])


def _powmod(base, e, f, p):
    result, b = [1], _rem(base, f, p)
    while e:
        if e & 1:
            result = _rem(_mul(result, b, p), f, p)
        b = _rem(_mul(b, b, p), f, p)
        e >>= 1
    return result


def _deriv(a, p):
    return _mod([i * c for i, c in enumerate(a)][1:], p)


def _distinct_degree(f, p):
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd(f, _sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod(f, g, p)[0]
            h = _rem(h, f, p)
    if len(f) > 1:
        out.append((_monic(f, p), len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    if len(f) - 1 == d:
        return [f]
    n = len(f) - 1
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = _trim(a)
        if len(a) < 2:
            continue
        b = _sub(_powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = _gcd(f, b, p)
        if 1 < len(g) < len(f):
            return (_equal_degree(g, d, p, rng)
                    + _equal_degree(_divmod(f, g, p)[0], d, p, rng))


def factor_mod_p(f, p, seed=0):
    """Monic irreducible factors of a squarefree polynomial mod an odd prime."""
    rng = random.Random(seed)
    f = _monic(_mod(list(f), p), p)
    out = []
    for g, d in _distinct_degree(f, p):
        out.extend(_equal_degree(g, d, p, rng))
    return sorted(out, key=lambda g: (len(g), g))


# -- Hensel lifting ----------------------------------------------------------

def _sym(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _hensel_pair(f, g, h, p, k):
    """Lift f = g*h mod p (g monic) to mod p**k."""
    _, s, t = _ext_gcd(g, h, p)
    pj = p
    mk = p**k
    for _ in range(1, k):
        e = [(x // pj) % p for x in _sub(f, _mul(g, h, mk), mk)]
        e = _trim(e)
        q, dg = _divmod(_mul(t, e, p), g, p)
        dh = _sub(_mul(s, e, p), [-c % p for c in _mul(q, h, p)], p)
        g = _mod([a + pj * b for a, b in itertools.zip_longest(g, dg, fillvalue=0)], mk)
        h = _mod([a + pj * b for a, b in itertools.zip_longest(h, dh, fillvalue=0)], mk)
        pj *= p
    return g, h


def hensel_lift(f, factors, p, k):
    """Lift monic factors of f mod p (f = lc * prod) to monic factors mod p**k."""
    mk = p**k
    f = _mod(list(f), mk)
    if len(factors) == 1:
        inv = pow(f[-1], -1, mk)
        return [[c * inv % mk for c in f]]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = [1]
    for u in left:
        g = _mul(g, u, p)
    h = [f[-1] % p]
    for u in right:
        h = _mul(h, u, p)
    G, H = _hensel_pair(f, g, h, p, k)
    return hensel_lift(G, left, p, k) + hensel_lift(H, right, p, k)


# -- Zassenhaus ----------------------------------------------------------------

def _choose_prime(f):
    lc = f.lc
    p = 3
    while True:
        if isprime(p) and lc % p:
            fp = _mod(list(f.coeffs), p)
            if len(_gcd(fp, _deriv(fp, p), p)) == 1:
                return p
        p += 2


def _mignotte_bound(f):
    n = f.degree
    norm2 = math.isqrt(sum(c * c for c in f.coeffs)) + 1
    return (2**n) * norm2


def _trial_divide(f, g):
    q, r = f.divmod(g)
    if r.is_zero() and q.is_integral():
        return q
    return None


def _zassenhaus(f):
    """Irreducible factors of a squarefree primitive integer polynomial."""
    if f.degree <= 1:
        return [f]
    p = _choose_prime(f)
    modular = factor_mod_p(f.coeffs, p)
    if len(modular) == 1:
        return [f]
    bound = 2 * abs(f.lc) * _mignotte_bound(f)
    k = 1
    while p**k <= bound:
        k += 1
    mk = p**k
    lifted = hensel_lift(f.coeffs, modular, p, k)
    found = []
    remaining = list(range(len(lifted)))
    g = f
    s = 1
    while 2 * s <= len(remaining):
        progress = False
        for subset in itertools.combinations(remaining, s):
            lc = g.lc
            prod = [lc % mk]
            for i in subset:
                prod = _mul(prod, lifted[i], mk)
            cand = Poly([_sym(c, mk) for c in prod]).primitive()
            q = _trial_divide(g, cand)
            if q is not None:
                found.append(cand)
                g = q.primitive()
                remaining = [i for i in remaining if i not in subset]
                progress = True
                break
        if not progress:
            s += 1
    found.append(g.primitive())
    return found


def factor_poly(a):
    """Complete irreducible factorization of a nonzero polynomial over Q."""
    if a.is_zero():
        raise InvalidInput("cannot factor the zero polynomial")
    unit, parts = squarefree_decomposition(a)
    out = []
    for P, m in parts:
        for q in _zassenhaus(P):
            out.append((q.primitive(), m))
    out.sort(key=lambda pm: pm[0].sort_key())
    return PolyFactorization(Fraction(unit), out)


def is_irreducible(a):
    if a.degree < 1:
        return False
    fz = factor_poly(a)
    return len(fz.factors) == 1 and fz.factors[0][1] == 1


def rational_roots(a):
    """All rational roots of ``a`` (from its linear factors), sorted."""
    if a.is_zero():
        raise InvalidInput("zero polynomial has every root")
    if a.degree < 1:
        return []
    roots = [Fraction(-q[0], q[1]) for q, _ in factor_poly(a).factors if q.degree == 1]
    return sorted(roots)


__all__ = ["PolyFactorization", "factor_poly", "factor_mod_p", "hensel_lift",
           "is_irreducible", "rational_roots", "ONE"]
