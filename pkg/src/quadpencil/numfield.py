"""Arithmetic in a residue field K = Q[s]/(p) for irreducible p.

Only what the residue tests need: reduction, real embeddings through
Sturm sequences, and an exact square test through the norm of
y + k*s in K[y]/(y^2 - a).
"""

from __future__ import annotations

from fractions import Fraction

from .arith import is_rational_square
from .factor import factor_poly
from .forms import interpolate
from .poly import Poly, is_squarefree, radical, resultant


def reduce_mod(a, p):
    return a % p


def mul_mod(a, b, p):
    return (a * b) % p


# -- real embeddings -----------------------------------------------------------

def sturm_sequence(p):
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign_changes(seq, x):
    signs = []
    for q in seq:
        v = q(x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq, lo, hi):
    """Distinct real roots in (lo, hi]."""
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def root_bound(p):
    lc = abs(Fraction(p.lc))
    return 1 + max(abs(Fraction(c)) / lc for c in p.coeffs[:-1]) if p.degree > 0 else 1


def isolate_real_roots(p):
    """Disjoint intervals (lo, hi], each holding exactly one real root of p."""
    p = radical(p)
    if p.degree < 1:
        return []
    seq = sturm_sequence(p)
    m = root_bound(p)
    out = []
    stack = [(-m, m)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(out)


def sign_at_root(u, p, interval):
    """Sign of u at the unique root of p in ``interval`` (u nonzero there)."""
    lo, hi = interval
    pseq = sturm_sequence(radical(p))
    if u.is_const():
        c = u[0]
        if c == 0:
            raise ValueError("u vanishes at the root")
        return 1 if c > 0 else -1
    useq = sturm_sequence(radical(u))
    for _ in range(400):
        if count_roots(useq, lo, hi) == 0:
            v = u(hi)
            if v != 0:
                return 1 if v > 0 else -1
        mid = (lo + hi) / 2
        if count_roots(pseq, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    raise ValueError("could not separate the root from the zeros of u")


def signature_at_roots(entries, p):
    """[(interval, pos - neg)] over the real embeddings of Q[s]/(p)."""
    out = []
    for iv in isolate_real_roots(p):
        s = sum(sign_at_root(u, p, iv) for u in entries)
        out.append((iv, s))
    return out


# -- squares -----------------------------------------------------------------

def shifted_norm(a, p, k):
    """Monic N(X) = prod over roots alpha of p of ((X - k*alpha)^2 - a(alpha))."""
    d = p.degree
    xs = list(range(2 * d + 1))
    ys = []
    for x in xs:
        q = Poly([x * x, -2 * k * x, k * k]) - a
        if q.is_zero():
            ys.append(Fraction(0))
        else:
            ys.append(resultant(p, q))
    return interpolate(xs, ys).monic()


def is_square(a, p, max_shift=32):
    """Whether a (nonzero mod p) is a square in Q[s]/(p).

    Returns True/False, or None if no squarefree shifted norm was found
    within ``max_shift`` shifts.
    """
    a = a % p
    if a.is_zero():
        return True
    d = p.degree
    if d == 1:
        root = Fraction(-p[0], p[1])
        return is_rational_square(a(root))
    for k in range(max_shift + 1):
        n = shifted_norm(a, p, k)
        if n.degree != 2 * d or not is_squarefree(n):
            continue
        return any(f.degree == d for f, _ in factor_poly(n).factors)
    return None
