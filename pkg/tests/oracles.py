"""Independent brute-force oracles; none of them touch the Witt machinery."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from quadpencil.factor import rational_roots
from quadpencil.forms import QuadraticFormQ, interpolate
from quadpencil.poly import Poly, poly_gcd, resultant

# -- Sylvester resultant ----------------------------------------------------------

def det_fraction(m):
    m = [[Fraction(x) for x in row] for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def sylvester_resultant(a, b):
    m, n = a.degree, b.degree
    A = list(reversed(a.coeffs))
    B = list(reversed(b.coeffs))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + A + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + B + [0] * (size - n - 1 - i))
    return det_fraction(rows)


# -- p-adic isotropy by tree search ----------------------------------------------

def _val(n, p):
    if n == 0:
        return math.inf
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _reduce_entries(entries, p):
    """Integral entries with p-valuation 0 or 1 (same form over Q_p up to scaling variables)."""
    out = []
    for a in entries:
        a = Fraction(a)
        n = a.numerator * a.denominator  # same square class
        while n % (p * p) == 0:
            n //= p * p
        out.append(n)
    return out


def padic_isotropic_search(entries, p, k_cap=6):
    """Exhaustive search mod p^k with a Hensel criterion for a diagonal form.

    A primitive x with Q(x) = 0 mod p^(2e+1), e = v_p(grad Q(x)) < k, lifts to
    a p-adic zero.  If the form is isotropic, such an x exists mod p^k for
    k = 2 * max v_p(2 a_i) + 1, which is at most 5 after reduction.
    """
    a = _reduce_entries(entries, p)
    m = len(a)
    E = max(_val(2 * x, p) for x in a)
    K = min(2 * E + 1, k_cap)

    def q(x, mod):
        return sum(c * y * y for c, y in zip(a, x)) % mod

    # level-1 projectively normalized vectors: first unit coordinate = 1
    level = []
    for lead in range(m):
        for tail in itertools.product(range(p), repeat=m - lead - 1):
            x = [0] * lead + [1] + list(tail)
            if q(x, p) == 0:
                level.append(x)
    j = 1
    while level:
        mod = p**j
        for x in level:
            e = min(_val((2 * c * y) % mod, p) for c, y in zip(a, x))
            if e < j and j >= 2 * e + 1:
                return True
        if j >= K:
            return False
        nxt = []
        nmod = mod * p
        for x in level:
            lead = next(i for i, y in enumerate(x) if y % p)
            free = [i for i in range(m) if i != lead]
            for d in itertools.product(range(p), repeat=len(free)):
                y = list(x)
                for i, s in zip(free, d):
                    y[i] = y[i] + mod * s
                if q(y, nmod) == 0:
                    nxt.append(y)
        level = nxt
        j += 1
    return False


def real_isotropic_search(entries, box=2):
    """Indefinite over R iff values of both signs occur on a small grid."""
    signs = set()
    for x in itertools.product(range(-box, box + 1), repeat=len(entries)):
        if any(x):
            v = sum(Fraction(c) * y * y for c, y in zip(entries, x))
            if v == 0:
                return True
            signs.add(v > 0)
    return len(signs) == 2


def box_zero_search(entries, bound):
    """A nontrivial integer zero with entries <= bound, or None.

    Solves for the last coordinate instead of enumerating it.
    """
    a = [Fraction(c) for c in entries]
    m = len(a)
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    a = [int(c * den) for c in a]
    last = a[-1]
    for x in itertools.product(range(-bound, bound + 1), repeat=m - 1):
        if not any(x) or next(v for v in x if v) < 0:
            continue
        s = sum(c * y * y for c, y in zip(a, x))
        if s == 0:
            return list(x) + [0]
        if (-s) % last == 0:
            w2 = -s // last
            if w2 > 0:
                w = math.isqrt(w2)
                if w * w == w2 and w <= bound:
                    return list(x) + [w]
    return None


# -- conic intersections ----------------------------------------------------------------

def _rand_unimodular3(rng):
    while True:
        M = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        if abs(det_fraction(M)) == 1:
            return M


def _apply(q, M):
    G = q.gram
    n = 3
    GM = [[sum(G[i][k] * M[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return QuadraticFormQ(tuple(tuple(sum(M[k][i] * GM[k][j] for k in range(n))
                                      for j in range(n)) for i in range(n)))


def _poly_in_y(q, x0, z0):
    G = q.gram
    # q(x0, y, z0) = G11 y^2 + 2(G01 x0 + G12 z0) y + (G00 x0^2 + 2 G02 x0 z0 + G22 z0^2)
    c2 = G[1][1]
    c1 = 2 * (G[0][1] * x0 + G[1][2] * z0)
    c0 = G[0][0] * x0 * x0 + 2 * G[0][2] * x0 * z0 + G[2][2] * z0 * z0
    return Poly([c0, c1, c2])


def conics_share_rational_point(f, g, rng=None):
    """True/False, or None when the conics share a component."""
    rng = rng or random.Random(0)
    M = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(200):
        F, G = _apply(f, M), _apply(g, M)
        if F.gram[1][1] != 0 and G.gram[1][1] != 0:
            break
        M = _rand_unimodular3(rng)
    else:
        raise RuntimeError("no good coordinates")
    # affine chart z = 1: R(x) = res_y(F(x, y, 1), G(x, y, 1)), degree <= 4
    xs = list(range(9))
    R = interpolate(xs, [resultant(_poly_in_y(F, x, 1), _poly_in_y(G, x, 1)) for x in xs])
    if R.is_zero():
        return None
    for x0 in rational_roots(R):
        a, b = _poly_in_y(F, x0, 1), _poly_in_y(G, x0, 1)
        h = poly_gcd(a, b)
        if h.degree >= 1 and rational_roots(h):
            return True
    # line at infinity z = 0: binary forms F(x, y, 0), G(x, y, 0)
    if F.gram[0][0] == 0 and G.gram[0][0] == 0:
        return True  # (1 : 0 : 0)
    a, b = _poly_in_y(F, 1, 0), _poly_in_y(G, 1, 0)  # y-polys at x = 1
    if a.is_zero() and b.is_zero():
        return None
    h = poly_gcd(a, b) if not (a.is_zero() or b.is_zero()) else (a if b.is_zero() else b)
    return h.degree >= 1 and bool(rational_roots(h))


def max_isotropic_dim_search(entries, bound):
    """Lower bound on the Witt index by exhaustive search in a box."""
    a = [Fraction(c) for c in entries]
    m = len(a)
    vecs = []
    for x in itertools.product(range(-bound, bound + 1), repeat=m):
        if any(x) and next(v for v in x if v) > 0:
            if sum(c * y * y for c, y in zip(a, x)) == 0:
                vecs.append(x)
    if not vecs:
        return 0
    best = 1
    for u, v in itertools.combinations(vecs, 2):
        if sum(c * p * q for c, p, q in zip(a, u, v)) == 0:
            # independent?
            if any(u[i] * v[j] != u[j] * v[i] for i in range(m) for j in range(i + 1, m)):
                best = 2
                break
    return best


def diagonal_box_zero(entries, bound):
    """Exhaustive: does sum a_i x_i^2 = 0 have a nonzero solution with |x_i| <= bound?

    Meet in the middle on the two halves of the diagonal, so the cost is
    O(bound^2) for up to four variables instead of O(bound^4).
    """
    a = [Fraction(c) for c in entries]
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    a = [int(c * den) for c in a]
    half = len(a) // 2
    left, right = a[:half], a[half:]

    def values(coeffs):
        out = {}
        for x in itertools.product(range(bound + 1), repeat=len(coeffs)):
            v = sum(c * y * y for c, y in zip(coeffs, x))
            out[v] = out.get(v, False) or any(x)
        return out

    lv, rv = values(left), values(right)
    for v, nonzero in lv.items():
        if -v in rv and (v != 0 or nonzero or rv[-v]):
            return True
    return False
