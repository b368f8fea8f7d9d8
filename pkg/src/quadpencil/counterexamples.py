"""Pencils that are singular everywhere, built from a genus-one curve.

A curve C = {q1 = q2 = 0} in P^3 with points over every completion of Q but
none over Q is padded to 7 (or 10) variables with cross terms x5*x6, x5*x7
(and x8*x9, x8*x10).  Every member of the padded pencil is singular, each
local point a of C spans a totally isotropic space {(a, 0, 0, 0), e6, e7}
over the completion, and yet no such rational space exists.  This module
builds the pairs, certifies local solvability, and runs a bounded rational
point search (evidence, not proof, of global emptiness).
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from sympy.ntheory import sqrt_mod

from .arith import is_rational_square, valuation
from .decision import check_hypothesis
from .errors import InvalidInput
from .forms import Pencil, QuadraticFormQ, diagonalize_q
from .local import REAL, Place
from .numfield import count_roots, sturm_sequence
from .poly import Poly, poly_gcd

DEFAULT_PRECISION = 6
DEFAULT_DEPTH = 6
DEFAULT_REAL_GRID = 10


@dataclass(frozen=True)
class GenusOneInput:
    q1: QuadraticFormQ
    q2: QuadraticFormQ
    name: str = "custom"
    provenance: str = ""

    def __post_init__(self):
        if self.q1.dim != 4 or self.q2.dim != 4:
            raise InvalidInput(
                f"genus-one input needs two forms in 4 variables, got {self.q1.dim} and {self.q2.dim}")

    @property
    def pencil(self):
        return Pencil(self.q1, self.q2)


def load_lind_reichardt():
    """The shipped curve 2y^2 = x^4 - 17z^4 as two quadrics in P^3."""
    text = resources.files("quadpencil").joinpath("data/lind_reichardt.json").read_text()
    data = json.loads(text)
    forms = [QuadraticFormQ.from_upper(data[k]["dim"], [Fraction(c) for c in data[k]["upper"]])
             for k in ("q1", "q2")]
    return GenusOneInput(forms[0], forms[1], data["name"], data["provenance"])


# -- builders --------------------------------------------------------------

def _padded(q, dim, cross):
    g = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(4):
        for j in range(4):
            g[i][j] = q.gram[i][j]
    for i, j in cross:
        g[i][j] += Fraction(1, 2)
        g[j][i] += Fraction(1, 2)
    return QuadraticFormQ(tuple(map(tuple, g)))


def build_remark3_7(source):
    """Q1 = q1 + x5*x6, Q2 = q2 + x5*x7 in seven variables."""
    return Pencil(_padded(source.q1, 7, [(4, 5)]), _padded(source.q2, 7, [(4, 6)]))


def build_remark3_10(source):
    """Q1 = q1 + x5*x6 + x8*x9, Q2 = q2 + x5*x7 + x8*x10; the case r = 4, n = 9."""
    return Pencil(_padded(source.q1, 10, [(4, 5), (7, 8)]),
                  _padded(source.q2, 10, [(4, 6), (7, 9)]))


# -- totally isotropic lifts -------------------------------------------------

def _is_zero_mod(x, modulus):
    x = Fraction(x)
    if modulus is None:
        return x == 0
    return x.numerator % modulus == 0 and math.gcd(x.denominator, modulus) == 1


def _check_common_zero(point, source, modulus):
    if len(point) != 4:
        raise InvalidInput(f"expected a 4-vector, got length {len(point)}")
    if all(_is_zero_mod(c, modulus) if modulus else c == 0 for c in point):
        raise InvalidInput("the zero vector spans no line")
    for name, q in (("q1", source.q1), ("q2", source.q2)):
        if not _is_zero_mod(q(point), modulus):
            where = "" if modulus is None else f" modulo {modulus}"
            raise InvalidInput(f"point is not a zero of {name}{where}")


def _lift(point, dim, extra):
    a = list(point) + [0] * (dim - 4)
    basis = [a]
    for k in extra:
        e = [0] * dim
        e[k] = 1
        basis.append(e)
    return basis


def lift_to_3space(point, source, modulus=None):
    """Basis {(a,0,0,0), e6, e7} of a common isotropic space of the 7-variable pair.

    With ``modulus`` the point only needs to vanish modulo it (a p-adic
    approximation); otherwise it must be an exact common zero.
    """
    _check_common_zero(point, source, modulus)
    return _lift(point, 7, (5, 6))


def lift_to_5space(point, source, modulus=None):
    """Basis {(a,0,...), e6, e7, e9, e10} for the 10-variable pair."""
    _check_common_zero(point, source, modulus)
    return _lift(point, 10, (5, 6, 8, 9))


def is_totally_isotropic(pencil, basis, modulus=None):
    """Both forms vanish on span(basis), exactly or modulo ``modulus``."""
    return all(_is_zero_mod(x, modulus)
               for q in (pencil.f, pencil.g)
               for row in q.restrict(basis) for x in row)


def lift_identity_holds(pencil, source):
    """Symbolic check that Q_i(a, x5=0, rest) = q_i(a) for every a.

    The leading 4x4 blocks must be q1, q2, the padding variables must meet
    the first four only through zeros, and each padding variable other than
    x5, x8 may only pair with x5 or x8.  Then the lifted span is totally
    isotropic exactly when a is a common zero.
    """
    dim = pencil.dim
    pivots = {4, 7} & set(range(dim))
    for Q, q in ((pencil.f, source.q1), (pencil.g, source.q2)):
        G = Q.gram
        if any(G[i][j] != q.gram[i][j] for i in range(4) for j in range(4)):
            return False
        for i in range(4, dim):
            for j in range(dim):
                if G[i][j] != 0 and i not in pivots and j not in pivots:
                    return False
    return True


# -- local witnesses ---------------------------------------------------------

@dataclass
class PadicWitness:
    place: Place
    point: tuple
    precision: int
    minor: tuple
    minor_valuation: int
    values: tuple

    @property
    def modulus(self):
        return self.place.p ** self.precision

    def to_dict(self):
        return {
            "place": str(self.place),
            "point": [str(c) for c in self.point],
            "precision": f"{self.place.p}^{self.precision}",
            "jacobian_minor": list(self.minor),
            "minor_valuation": self.minor_valuation,
            "value_valuations": ["inf" if v == math.inf else v for v in self.values],
        }


@dataclass
class RealWitness:
    member: tuple
    base: tuple
    w_plus: tuple
    w_minus: tuple
    interval: tuple
    approx_point: tuple

    def to_dict(self):
        return {
            "place": "inf",
            "member": [str(c) for c in self.member],
            "base_zero": [str(c) for c in self.base],
            "direction_positive": list(self.w_plus),
            "direction_negative": list(self.w_minus),
            "root_interval": [str(x) for x in self.interval],
            "approx_point": [float(x) for x in self.approx_point],
        }


def _integral_upper(q):
    """Integer monomial coefficients of a positive multiple of q."""
    coeffs = [Fraction(c) for c in q.upper_coeffs()]
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    n = q.dim
    out = {}
    k = 0
    for i in range(n):
        for j in range(i, n):
            c = int(coeffs[k] * den)
            k += 1
            if c:
                out[(i, j)] = c
    return out


class _IntQuad:
    """An integral quadratic polynomial with its gradient."""

    def __init__(self, q):
        self.n = q.dim
        self.terms = _integral_upper(q)

    def __call__(self, x):
        return sum(c * x[i] * x[j] for (i, j), c in self.terms.items())

    def grad(self, x):
        g = [0] * self.n
        for (i, j), c in self.terms.items():
            if i == j:
                g[i] += 2 * c * x[i]
            else:
                g[i] += c * x[j]
                g[j] += c * x[i]
        return g

    def in_last(self, x, k):
        """Coefficients (a, b, c) of the polynomial y -> Q(x with x_k = y)."""
        a = b = c = 0
        for (i, j), coef in self.terms.items():
            if i == k and j == k:
                a += coef
            elif i == k:
                b += coef * x[j]
            elif j == k:
                b += coef * x[i]
            else:
                c += coef * x[i] * x[j]
        return a, b, c


def _v(n, p):
    return math.inf if n == 0 else valuation(n, p)


def _quadratic_roots_mod(a, b, c, p):
    a, b, c = a % p, b % p, c % p
    if p == 2 or a == 0:
        if a == 0 and b == 0:
            return None if c == 0 else []
        if p == 2:
            return [y for y in range(2) if (a * y * y + b * y + c) % 2 == 0]
        return [(-c * pow(b, -1, p)) % p]
    disc = (b * b - 4 * a * c) % p
    roots = sqrt_mod(disc, p, all_roots=True) or []
    inv = pow(2 * a, -1, p)
    return sorted({((-b + s) * inv) % p for s in roots})


def _level_one(F, G, m, p):
    """Primitive zeros mod p, normalized so the first unit coordinate is 1."""
    for lead in range(m):
        if lead == m - 1:
            x = [0] * m
            x[lead] = 1
            if F(x) % p == 0 and G(x) % p == 0:
                yield x
            continue
        last = m - 1
        for mid in itertools.product(range(p), repeat=m - lead - 2):
            x = [0] * lead + [1] + list(mid) + [0]
            rf = _quadratic_roots_mod(*F.in_last(x, last), p)
            rg = _quadratic_roots_mod(*G.in_last(x, last), p)
            if rf is None and rg is None:
                ys = range(p)
            elif rf is None:
                ys = rg
            elif rg is None:
                ys = rf
            else:
                ys = sorted(set(rf) & set(rg))
            for y in ys:
                x[last] = y
                yield list(x)


def _best_minor(F, G, x, p):
    gf, gg = F.grad(x), G.grad(x)
    best = None
    for i, j in itertools.combinations(range(len(x)), 2):
        d = gf[i] * gg[j] - gf[j] * gg[i]
        e = _v(d, p)
        if best is None or e < best[0]:
            best = (e, (i, j))
            if e == 0:
                break
    return best


def _hensel_ok(F, G, x, p):
    e, minor = _best_minor(F, G, x, p)
    if e == math.inf:
        return None
    if min(_v(F(x), p), _v(G(x), p)) > 2 * e:
        return e, minor
    return None


def _newton(F, G, x, minor, e, p, precision):
    i, j = minor
    N = precision + 2 * e + 2
    mod = p ** N
    x = list(x)
    for _ in range(64):
        fv, gv = F(x), G(x)
        if min(_v(fv, p), _v(gv, p)) >= precision:
            return x
        gf, gg = F.grad(x), G.grad(x)
        det = gf[i] * gg[j] - gf[j] * gg[i]
        di = Fraction(gg[j] * fv - gf[j] * gv, det)
        dj = Fraction(gf[i] * gv - gg[i] * fv, det)
        for k, d in ((i, di), (j, dj)):
            y = Fraction(x[k]) - d
            x[k] = (y.numerator * pow(y.denominator, -1, mod)) % mod
    raise RuntimeError("Newton iteration did not converge")


def _padic_search(pair, p, depth, precision, node_budget):
    F, G = _IntQuad(pair.f), _IntQuad(pair.g)
    m = pair.dim
    budget = [node_budget]

    def dfs(x, lead, j):
        budget[0] -= 1
        if budget[0] < 0:
            return None
        ok = _hensel_ok(F, G, x, p)
        if ok:
            return x, ok
        if j >= depth:
            return None
        mod = p ** j
        nmod = mod * p
        free = [k for k in range(m) if k != lead]
        for d in itertools.product(range(p), repeat=len(free)):
            y = list(x)
            for k, s in zip(free, d):
                y[k] += mod * s
            if F(y) % nmod == 0 and G(y) % nmod == 0:
                hit = dfs(y, lead, j + 1)
                if hit:
                    return hit
        return None

    for x in _level_one(F, G, m, p):
        lead = next(k for k, c in enumerate(x) if c % p)
        hit = dfs(x, lead, 1)
        if hit:
            x, (e, minor) = hit
            x = _newton(F, G, x, minor, e, p, precision)
            vals = (_v(F(x), p), _v(G(x), p))
            return PadicWitness(Place(p), tuple(x), precision, minor, e, vals)
        if budget[0] < 0:
            break
    return None


def _definite(q):
    d = diagonalize_q(q)
    return all(c > 0 for c in d) or all(c < 0 for c in d)


def _box_zero(q, bound):
    n = q.dim
    for x in itertools.product(range(-bound, bound + 1), repeat=n):
        if any(x) and next(c for c in x if c) > 0 and q(x) == 0:
            return list(x)
    return None


def _poly_vec(v, w_plus, w_minus):
    """Coordinates of w(lam) = (1 - lam) w_plus + lam w_minus."""
    return [Poly([a, b - a]) for a, b in zip(w_plus, w_minus)]


def _eval_form(q, vec):
    n = q.dim
    out = Poly([0])
    for i in range(n):
        for j in range(n):
            if q.gram[i][j]:
                out = out + vec[i] * vec[j] * q.gram[i][j]
    return out


def _bilinear_const(q, v, vec):
    n = q.dim
    out = Poly([0])
    for i in range(n):
        for j in range(n):
            if q.gram[i][j] and v[i]:
                out = out + vec[j] * (q.gram[i][j] * v[i])
    return out


def _secant_point(h, v, vec):
    """Second intersection of the line v + s*w with {h = 0}, as polynomials."""
    hw = _eval_form(h, vec)
    b = _bilinear_const(h, v, vec)
    return [hw * vi - b * wi * 2 for vi, wi in zip(v, vec)]


def _real_search(pair, grid, seed, samples=400):
    f, g = pair.f, pair.g
    if _definite(f) or _definite(g):
        return None
    rng = random.Random(seed)
    members = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    members += [(Fraction(1), Fraction(c)) for c in (1, -1, 2, -2, 3, -3)]
    for lam, mu in members:
        h = pair.member(lam, mu)
        other = g if lam else f
        if _definite(h):
            return None
        v = None
        for b in (1, 2, 3):
            v = _box_zero(h, b)
            if v is not None:
                break
        if v is None:
            continue
        pos, neg = [], []
        for _ in range(samples):
            w = [rng.randint(-grid, grid) for _ in range(pair.dim)]
            P = [c(0) for c in _secant_point(h, v, [Poly([x]) for x in w])]
            if not any(P):
                continue
            s = other(P)
            if s > 0:
                pos.append(w)
            elif s < 0:
                neg.append(w)
            if pos and neg:
                hit = _certify_path(h, other, v, pos[-1], neg[-1])
                if hit:
                    return RealWitness((lam, mu), tuple(v), tuple(pos[-1]), tuple(neg[-1]),
                                       hit[0], hit[1])
                pos.pop()
    return None


def _certify_path(h, other, v, w_plus, w_minus):
    vec = _poly_vec(v, w_plus, w_minus)
    P = _secant_point(h, v, vec)
    nonzero = [c for c in P if not c.is_zero()]
    if not nonzero:
        return None
    gcd = nonzero[0]
    for c in nonzero[1:]:
        gcd = poly_gcd(gcd, c)
    if gcd.degree >= 1 and count_roots(sturm_sequence(gcd), Fraction(-1, 10**9), Fraction(1)):
        return None
    K = _eval_form(other, P)
    lo, hi = Fraction(0), Fraction(1)
    if not (K(lo) > 0 > K(hi)):
        return None
    for _ in range(40):
        mid = (lo + hi) / 2
        if K(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo, hi), tuple(c(lo) for c in P)


def local_common_zero(pair, place, search_bound=None, precision=DEFAULT_PRECISION,
                      seed=0, node_budget=200000):
    """A certified common zero of (f, g) over the completion, or None.

    Finite p: exhaustive search mod p, deepened to at most p^search_bound,
    until a primitive point passes the Hensel test for some 2x2 Jacobian
    minor; it is then Newton-lifted so both values vanish mod p^precision.
    Real place: a rational zero v of some member h, two directions along
    which the second intersection point of {h = 0} gives opposite signs of
    the other form, and a path between them avoiding 0.  ``search_bound``
    is the direction grid half-width there.
    """
    place = place if isinstance(place, Place) else Place.parse(place)
    if place.is_real:
        return _real_search(pair, search_bound or DEFAULT_REAL_GRID, seed)
    return _padic_search(pair, place.p, search_bound or DEFAULT_DEPTH, precision, node_budget)


# -- global evidence ---------------------------------------------------------

@dataclass
class GlobalSearch:
    height: int
    parameter_bound: int
    pairs_checked: int
    points: list = field(default_factory=list)

    def to_dict(self):
        return {
            "height_bound": self.height,
            "parameter_bound": self.parameter_bound,
            "pairs_checked": self.pairs_checked,
            "points_found": [[str(c) for c in p] for p in self.points],
        }


_CONIC = QuadraticFormQ.from_upper(3, [0, 0, 1, -1, 0, 0])


def bounded_global_search(source, height=10**4):
    """All rational points of C with max(|X0|, |X1|, |X2|) <= height.

    Needs q1 = X0*X2 - X1^2 (independent of the last variable): its primitive
    integer points are +-(s^2, s*t, t^2) with gcd(s, t) = 1, so |s|, |t| <=
    sqrt(height) is an exhaustive range.  The last coordinate is then solved
    from q2 exactly.
    """
    G1 = source.q1.gram
    if any(G1[3][k] for k in range(4)) or \
            any(G1[i][j] != _CONIC.gram[i][j] for i in range(3) for j in range(3)):
        raise InvalidInput("global search needs q1 = X0*X2 - X1^2 in the first three variables")
    B = math.isqrt(height)
    G2 = source.q2.gram
    a = G2[3][3]
    points = []
    checked = 0
    for s in range(0, B + 1):
        for t in range(-B, B + 1):
            if math.gcd(s, t) != 1 or (s == 0 and t != 1):
                continue
            checked += 1
            X = (s * s, s * t, t * t)
            b = 2 * sum(G2[3][i] * X[i] for i in range(3))
            c = sum(G2[i][j] * X[i] * X[j] for i in range(3) for j in range(3))
            if a == 0:
                ys = [-c / b] if b else ([0] if c == 0 else [])
            else:
                disc = b * b - 4 * a * c
                ys = []
                if disc >= 0 and is_rational_square(disc):
                    r = Fraction(math.isqrt(disc.numerator), math.isqrt(disc.denominator))
                    ys = sorted({(-b + r) / (2 * a), (-b - r) / (2 * a)})
            points.extend([(*X, y) for y in ys])
    return GlobalSearch(height, B, checked, points)


# -- demo --------------------------------------------------------------------

def primes_up_to(n):
    sieve = [True] * (n + 1)
    out = []
    for k in range(2, n + 1):
        if sieve[k]:
            out.append(k)
            sieve[k * k::k] = [False] * len(sieve[k * k::k])
    return out


def remark3_demo(variant="7", source=None, prime_bound=100, precision=DEFAULT_PRECISION,
                 search_bound=None, height=10**4):
    """Report for the padded pair: degeneracy, local lifts, bounded global search."""
    source = source or load_lind_reichardt()
    if variant == "7":
        pair, lift, r, n = build_remark3_7(source), lift_to_3space, 2, 6
    elif variant == "10":
        pair, lift, r, n = build_remark3_10(source), lift_to_5space, 4, 9
    else:
        raise InvalidInput(f"unknown variant {variant!r}; expected '7' or '10'")
    report = check_hypothesis(pair)
    rows = []
    all_ok = True
    for place in [REAL] + [Place(p) for p in primes_up_to(prime_bound)]:
        w = local_common_zero(source.pencil, place, search_bound, precision)
        row = {"place": str(place), "common_zero": w is not None}
        if isinstance(w, PadicWitness):
            basis = lift(list(w.point), source, w.modulus)
            row["lift_isotropic_mod"] = f"{place.p}^{precision}"
            row["lift_verified"] = is_totally_isotropic(pair, basis, w.modulus)
            row["witness"] = w.to_dict()
        elif isinstance(w, RealWitness):
            row["lift_verified"] = lift_identity_holds(pair, source)
            row["witness"] = w.to_dict()
        all_ok &= w is not None and row["lift_verified"]
        rows.append(row)
    search = bounded_global_search(source, height)
    return {
        "variant": variant,
        "r": r,
        "n": n,
        "dim": pair.dim,
        "curve": source.name,
        "hypothesis": report.to_dict(),
        "lift_identity": lift_identity_holds(pair, source),
        "local_solvability": rows,
        "locally_solvable_everywhere_checked": all_ok,
        "global_search": search.to_dict(),
        "global_status": ("no rational point on the curve; this is quoted from the literature "
                          "and not proved here" if not search.points else
                          "rational point found"),
        "provenance": source.provenance,
    }
