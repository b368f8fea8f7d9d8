"""Quadratic forms over Q and over Q(t) as symmetric Gram matrices.

Convention: q(x) = x^T G x, so a cross term c*x_i*x_j puts c/2 in G[i][j]
and G[j][i].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import squarefree_int
from .errors import DegenerateForm, InvalidInput
from .poly import ONE, Poly, squarefree_part
from .ratfunc import RatFunc


def _rf(x):
    if isinstance(x, RatFunc):
        return x
    return RatFunc(x)


def _check_symmetric(gram):
    m = len(gram)
    for row in gram:
        if len(row) != m:
            raise InvalidInput("Gram matrix is not square")
    for i in range(m):
        for j in range(i + 1, m):
            if gram[i][j] != gram[j][i]:
                raise InvalidInput(f"Gram matrix not symmetric at ({i}, {j})")


@dataclass(frozen=True)
class QuadraticFormQ:
    gram: tuple

    def __post_init__(self):
        g = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        _check_symmetric(g)
        object.__setattr__(self, "gram", g)

    @property
    def dim(self):
        return len(self.gram)

    @classmethod
    def diag(cls, entries):
        n = len(entries)
        return cls(tuple(tuple(Fraction(entries[i]) if i == j else Fraction(0)
                               for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n):
        return cls.diag([0] * n)

    @classmethod
    def from_upper(cls, dim, coeffs):
        """Build from monomial coefficients of x_i*x_j, i <= j, row-major."""
        coeffs = list(coeffs)
        if len(coeffs) != dim * (dim + 1) // 2:
            raise InvalidInput(
                f"form of dimension {dim} needs {dim * (dim + 1) // 2} entries, got {len(coeffs)}")
        g = [[Fraction(0)] * dim for _ in range(dim)]
        k = 0
        for i in range(dim):
            for j in range(i, dim):
                c = Fraction(coeffs[k])
                k += 1
                if i == j:
                    g[i][i] = c
                else:
                    g[i][j] = g[j][i] = c / 2
        return cls(tuple(map(tuple, g)))

    def upper_coeffs(self):
        out = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                out.append(self.gram[i][i] if i == j else 2 * self.gram[i][j])
        return out

    def __call__(self, x):
        n = self.dim
        return sum(self.gram[i][j] * x[i] * x[j] for i in range(n) for j in range(n))

    def bilinear(self, x, y):
        n = self.dim
        return sum(self.gram[i][j] * x[i] * y[j] for i in range(n) for j in range(n))

    def is_diagonal(self):
        return all(self.gram[i][j] == 0 for i in range(self.dim)
                   for j in range(self.dim) if i != j)

    def diagonal(self):
        return [self.gram[i][i] for i in range(self.dim)]

    def to_ff(self):
        return QuadraticFormFF(tuple(tuple(RatFunc(x) for x in row) for row in self.gram))

    def restrict(self, basis):
        """Gram matrix of the form on the span of ``basis`` (B^T G B)."""
        return [[self.bilinear(u, v) for v in basis] for u in basis]


@dataclass(frozen=True)
class QuadraticFormFF:
    gram: tuple

    def __post_init__(self):
        g = tuple(tuple(_rf(x) for x in row) for row in self.gram)
        _check_symmetric(g)
        object.__setattr__(self, "gram", g)

    @property
    def dim(self):
        return len(self.gram)

    @classmethod
    def diag(cls, entries):
        n = len(entries)
        z = RatFunc(0)
        return cls(tuple(tuple(_rf(entries[i]) if i == j else z for j in range(n))
                         for i in range(n)))

    def is_diagonal(self):
        return all(self.gram[i][j].is_zero() for i in range(self.dim)
                   for j in range(self.dim) if i != j)

    def specialize(self, t0):
        return QuadraticFormQ(tuple(tuple(x(t0) for x in row) for row in self.gram))


@dataclass(frozen=True)
class DiagonalFF:
    """Diagonal normal form over Q(t): squarefree integer polynomial entries.

    Each entry is c*P with c a signed squarefree integer and P a squarefree
    primitive polynomial with positive leading coefficient.
    """

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for e in self.entries:
            if e.is_zero():
                raise InvalidInput("zero entry in a diagonal normal form")

    def __len__(self):
        return len(self.entries)

    def to_form(self):
        return QuadraticFormFF.diag(list(self.entries))


@dataclass(frozen=True)
class Pencil:
    f: QuadraticFormQ
    g: QuadraticFormQ

    def __post_init__(self):
        if self.f.dim != self.g.dim:
            raise InvalidInput(f"pencil forms differ in dimension: {self.f.dim} vs {self.g.dim}")

    @property
    def dim(self):
        return self.f.dim

    def member(self, lam, mu=1):
        """The rational member lam*f + mu*g."""
        return QuadraticFormQ(tuple(tuple(lam * a + mu * b for a, b in zip(ra, rb))
                                    for ra, rb in zip(self.f.gram, self.g.gram)))

    def at(self, t0):
        """The member f + t0*g."""
        return self.member(1, t0)

    def swapped(self):
        return Pencil(self.g, self.f)


# -- square classes -----------------------------------------------------------

def square_class_poly(a):
    """Square-class representative of a nonzero element of Q[t] or Q(t).

    Rational functions are reduced via num*den, which has the same class.
    """
    if isinstance(a, RatFunc):
        a = a.num * a.den
    if isinstance(a, (int, Fraction)):
        a = Poly([a])
    if a.is_zero():
        raise InvalidInput("square class of zero")
    unit, P = a.unit_and_primitive()
    c = squarefree_int(unit.numerator * unit.denominator)
    return squarefree_part(P).scale(c) if P.degree > 0 else Poly([c])


def same_square_class(a, b):
    return square_class_poly(a) == square_class_poly(b)


# -- congruence diagonalization ---------------------------------------------

def _congruence(gram, zero, one, weight):
    """Symmetric Gaussian elimination.

    Returns (diag, P) where P^T G P = diag(diag); nonzero pivots first,
    zeros collected at the end.  ``weight`` ranks candidate pivots.
    """
    n = len(gram)
    A = [list(row) for row in gram]
    P = [[one if i == j else zero for j in range(n)] for i in range(n)]

    def add_col(src, dst, c):
        # basis vector dst <- dst + c*src
        for r in range(n):
            P[r][dst] = P[r][dst] + c * P[r][src]
        for r in range(n):
            A[r][dst] = A[r][dst] + c * A[r][src]
        for r in range(n):
            A[dst][r] = A[dst][r] + c * A[src][r]

    def swap(i, j):
        if i == j:
            return
        for r in range(n):
            P[r][i], P[r][j] = P[r][j], P[r][i]
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]

    diag = []
    for k in range(n):
        cands = [i for i in range(k, n) if not _iszero(A[i][i])]
        if not cands:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n)
                         if not _iszero(A[i][j])), None)
            if pair is None:
                break
            i, j = pair
            add_col(j, i, one)
            cands = [i]
        piv = min(cands, key=lambda i: (weight(A[i][i]), i))
        swap(k, piv)
        pv = A[k][k]
        for j in range(k + 1, n):
            if not _iszero(A[k][j]):
                add_col(k, j, -(A[k][j] / pv))
        diag.append(pv)
    while len(diag) < n:
        diag.append(zero)
    return diag, P


def _iszero(x):
    return x.is_zero() if hasattr(x, "is_zero") else x == 0


def diagonalize_q_with_basis(q):
    diag, P = _congruence(q.gram, Fraction(0), Fraction(1), lambda x: 0)
    return diag, P


def diagonalize_q(q):
    """Diagonal entries of a congruent diagonal form; zeros at the end."""
    return diagonalize_q_with_basis(q)[0]


def diagonalize_ff_raw(q):
    """Diagonal rational-function entries and change of basis over Q(t)."""
    return _congruence(q.gram, RatFunc(0), RatFunc(1), lambda x: x.weight)


def diagonalize_ff(q):
    """Square-class diagonal normal form of a nondegenerate form over Q(t)."""
    diag, _ = diagonalize_ff_raw(q)
    if any(d.is_zero() for d in diag):
        raise DegenerateForm("form over Q(t) is degenerate")
    return DiagonalFF(tuple(square_class_poly(d) for d in diag))


# -- linear algebra -------------------------------------------------------------

def _kernel(rows, zero, one):
    """Basis of the right kernel of a matrix over a field."""
    if not rows:
        return []
    m = [list(r) for r in rows]
    nr, nc = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if not _iszero(m[i][c])), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and not _iszero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * nc
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def radical_q(q):
    """Exact basis of the kernel of the Gram matrix over Q."""
    return _kernel(q.gram, Fraction(0), Fraction(1))


def radical_ff(q):
    """Kernel basis of the Gram matrix over Q(t)."""
    return _kernel(q.gram, RatFunc(0), RatFunc(1))


def det_q(gram):
    """Exact determinant of a rational square matrix."""
    m = [[Fraction(x) for x in row] for row in gram]
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
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def interpolate(xs, ys):
    """Newton interpolation over Q."""
    xs = [Fraction(x) for x in xs]
    coef = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Poly([coef[-1]])
    for i in range(n - 2, -1, -1):
        p = p * Poly([-xs[i], 1]) + coef[i]
    return p


# -- pencil-level operations -----------------------------------------------------

def pencil_form(p):
    """q(t) = f + t*g over Q(t)."""
    return QuadraticFormFF(tuple(tuple(RatFunc(Poly([a, b])) for a, b in zip(ra, rb))
                                 for ra, rb in zip(p.f.gram, p.g.gram)))


def det_poly(p):
    """D(t) = det(M_f + t*M_g), exact; possibly the zero polynomial."""
    n = p.dim
    xs = list(range(n + 1))
    ys = [det_q(p.at(x).gram) for x in xs]
    return interpolate(xs, ys)


def det_ff(q):
    """Determinant of a form over Q(t) as a RatFunc."""
    diag, _ = diagonalize_ff_raw(q)
    out = RatFunc(1)
    for d in diag:
        out = out * d
    # the basis changes used have determinant +-1
    return out


def _hyperbolic_entries(r):
    out = []
    for _ in range(r + 1):
        out.extend([Poly([1]), Poly([-1])])
    return out


def target_even(r, delta):
    """(r+1) hyperbolic planes followed by <(-1)^(r+1) * delta>."""
    if r < 0:
        raise InvalidInput("r must be non-negative")
    if isinstance(delta, (int, Fraction)):
        delta = Poly([delta])
    if delta.is_zero():
        raise InvalidInput("delta must be nonzero")
    sign = -1 if (r + 1) % 2 else 1
    return QuadraticFormFF.diag(_hyperbolic_entries(r) + [delta.scale(sign)])


def target_odd(r):
    """(r+1) hyperbolic planes."""
    if r < 0:
        raise InvalidInput("r must be non-negative")
    return QuadraticFormFF.diag(_hyperbolic_entries(r))


def hyperbolic_q(k=1):
    return QuadraticFormQ.diag([1, -1] * k)


def orth_sum(a, b):
    """Block-diagonal sum of two forms of the same kind."""
    if type(a) is not type(b):
        a, b = _as_ff(a), _as_ff(b)
    zero = Fraction(0) if isinstance(a, QuadraticFormQ) else RatFunc(0)
    n, m = a.dim, b.dim
    rows = [list(r) + [zero] * m for r in a.gram]
    rows += [[zero] * n + list(r) for r in b.gram]
    return type(a)(tuple(map(tuple, rows)))


def scale(a, c):
    """c * a for a nonzero scalar (or nonzero rational function) c."""
    if _iszero(c) if not isinstance(c, (int, Fraction)) else c == 0:
        raise InvalidInput("scaling by zero")
    if isinstance(a, QuadraticFormQ):
        if isinstance(c, (int, Fraction)):
            return QuadraticFormQ(tuple(tuple(c * x for x in row) for row in a.gram))
        a = a.to_ff()
    c = _rf(c)
    return QuadraticFormFF(tuple(tuple(c * x for x in row) for row in a.gram))


def _as_ff(a):
    return a.to_ff() if isinstance(a, QuadraticFormQ) else a


__all__ = [
    "QuadraticFormQ", "QuadraticFormFF", "DiagonalFF", "Pencil", "ONE",
    "square_class_poly", "same_square_class", "diagonalize_q",
    "diagonalize_q_with_basis", "diagonalize_ff", "diagonalize_ff_raw",
    "radical_q", "radical_ff", "det_q", "det_poly", "det_ff", "interpolate",
    "pencil_form", "target_even", "target_odd", "hyperbolic_q", "orth_sum", "scale",
]
