"""Random problem generators used by the acceptance suite and the CLI demos."""

from __future__ import annotations

import random
from fractions import Fraction

from .forms import Pencil, QuadraticFormQ, det_poly


def _unimodular(n, rng, ops):
    """Random integer matrix with integer inverse, built from shears."""
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    Pinv = [row[:] for row in P]
    for _ in range(ops):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        # P <- P * (I + c E_ji): column i += c * column j
        for r in range(n):
            P[r][i] += c * P[r][j]
        # Pinv <- (I - c E_ji) * Pinv: row j -= c * row i
        Pinv[j] = [a - c * b for a, b in zip(Pinv[j], Pinv[i])]
    return P, Pinv


def _transform(G, M):
    """M^T G M."""
    n = len(G)
    GM = [[sum(G[i][k] * M[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[sum(M[k][i] * GM[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _random_gram_vanishing_on(n, k, rng, c):
    """Integer-coefficient form in y with the first k coordinates totally isotropic."""
    G = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            if i < k and j < k:
                continue
            a = rng.randint(-c, c)
            if i == j:
                G[i][i] = Fraction(a)
            else:
                G[i][j] = G[j][i] = Fraction(a, 2)
    return G


def _within(q, bound):
    return all(abs(x) <= bound for x in q.upper_coeffs())


def planted_instance(r, n, rng=None, coeff_bound=10, max_tries=500):
    """Pencil whose members all vanish on a known (r+1)-dimensional subspace.

    Returns (pencil, basis) where ``basis`` spans the common totally isotropic
    subspace L; D(t) is guaranteed not to vanish identically.
    """
    rng = rng or random.Random()
    m = n + 1
    k = r + 1
    for _ in range(max_tries):
        P, Pinv = _unimodular(m, rng, rng.randint(1, m))
        Gf = _transform(_random_gram_vanishing_on(m, k, rng, 3), Pinv)
        Gg = _transform(_random_gram_vanishing_on(m, k, rng, 3), Pinv)
        f = QuadraticFormQ(tuple(map(tuple, Gf)))
        g = QuadraticFormQ(tuple(map(tuple, Gg)))
        if not (_within(f, coeff_bound) and _within(g, coeff_bound)):
            continue
        pencil = Pencil(f, g)
        if det_poly(pencil).is_zero():
            continue
        basis = [[P[row][col] for row in range(m)] for col in range(k)]
        return pencil, basis
    raise RuntimeError("could not build a planted instance within the coefficient bound")


def random_form(m, rng, bound):
    coeffs = [rng.randint(-bound, bound) for _ in range(m * (m + 1) // 2)]
    return QuadraticFormQ.from_upper(m, coeffs)


def random_pencil(m, rng, bound=10):
    while True:
        p = Pencil(random_form(m, rng, bound), random_form(m, rng, bound))
        if not det_poly(p).is_zero():
            return p


def conic_pair_through_point(rng, bound=10, point=None, max_tries=1000):
    """Two random conics sharing a rational point (coefficients within bound)."""
    point = point or [rng.randint(-2, 2) for _ in range(3)]
    if all(c == 0 for c in point):
        point = [0, 0, 1]
    monos = [(i, j) for i in range(3) for j in range(i, 3)]
    for _ in range(max_tries):
        forms = []
        for _ in range(2):
            coeffs = [rng.randint(-bound, bound) for _ in monos]
            # fix one coefficient so that the point lies on the conic
            idx = [k for k, (i, j) in enumerate(monos) if point[i] * point[j] != 0]
            k = rng.choice(idx)
            i, j = monos[k]
            rest = sum(c * point[a] * point[b] for c, (a, b) in zip(coeffs, monos)) \
                - coeffs[k] * point[i] * point[j]
            w = point[i] * point[j]
            if rest % w:
                break
            coeffs[k] = -rest // w
            if abs(coeffs[k]) > bound:
                break
            forms.append(QuadraticFormQ.from_upper(3, coeffs))
        if len(forms) == 2:
            p = Pencil(*forms)
            if not det_poly(p).is_zero():
                return p, point
    raise RuntimeError("could not build a conic pair through the point")


def definite_instance(r, n, rng, bound=5):
    """f positive definite (diagonal plus small perturbation), g random."""
    m = n + 1
    while True:
        diag = [rng.randint(1, bound) for _ in range(m)]
        f = QuadraticFormQ.diag(diag)
        g = random_form(m, rng, bound)
        p = Pencil(f, g)
        if not det_poly(p).is_zero():
            return p


def odd_mismatch_instance(r, rng, bound=5):
    """n = 2r+1 pencil whose determinant class is not (-1)^(r+1)."""
    from .forms import square_class_poly
    from .poly import Poly

    m = 2 * r + 2
    want = Poly([(-1) ** (r + 1)])
    while True:
        p = random_pencil(m, rng, bound)
        if square_class_poly(det_poly(p)) != want:
            return p
