"""Dense univariate polynomials over Q in the variable ``t``.

Coefficients are stored low degree first as a tuple of ``int`` or
``Fraction``; integral Fractions are collapsed to ``int`` so that integer
polynomials compare equal however they were produced.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce

from .errors import InvalidInput


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient {c!r}")


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def t(cls):
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    # -- basic queries ------------------------------------------------
    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_const(self):
        return len(self.coeffs) <= 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({to_str(self)!r})"

    def __str__(self):
        return to_str(self)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        result, base = Poly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        return Poly([c * x for x in self.coeffs])

    def divmod(self, other):
        """Division with remainder over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        db = other.degree
        lcb = Fraction(other.lc)
        if len(rem) - 1 < db:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lcb
            quo[k] = c
            if c:
                for j, bj in enumerate(other.coeffs):
                    rem[k + j] -= c * bj
        return Poly(quo), Poly(rem[:db])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other):
        """True if ``self`` divides ``other`` in Q[t]."""
        return (other % self).is_zero()

    # -- calculus / evaluation ---------------------------------------
    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other):
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    # -- content ------------------------------------------------------
    def content(self):
        """Positive rational c with self/c primitive integral; 0 for zero."""
        if not self.coeffs:
            return 0
        nums = [Fraction(c).numerator for c in self.coeffs]
        dens = [Fraction(c).denominator for c in self.coeffs]
        g = reduce(math.gcd, nums)
        lcm = reduce(lambda x, y: x * y // math.gcd(x, y), dens)
        return Fraction(abs(g), lcm)

    def primitive(self):
        """Primitive integer polynomial with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return Poly([Fraction(x) / c for x in self.coeffs])

    def unit_and_primitive(self):
        """(u, P) with self = u*P, P primitive integral with positive lc."""
        P = self.primitive()
        if P.is_zero():
            return Fraction(0), P
        return Fraction(self.lc) / Fraction(P.lc), P

    def monic(self):
        if not self.coeffs:
            return self
        lc = Fraction(self.lc)
        return Poly([Fraction(c) / lc for c in self.coeffs])

    def sort_key(self):
        return (self.degree, self.coeffs)


ZERO = Poly()
ONE = Poly([1])
T = Poly([0, 1])


def _prem(a, b):
    """Pseudo-remainder of integer polynomials: lc(b)^(da-db+1)*a mod b."""
    da, db = a.degree, b.degree
    r = list(a.coeffs)
    lcb = b.lc
    e = da - db + 1
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        c = r[-1]
        r = [x * lcb for x in r]
        for j, bj in enumerate(b.coeffs):
            r[k + j] -= c * bj
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        f = lcb**e
        r = [x * f for x in r]
    return Poly(r)


def _primitive_int(a):
    return a.primitive() if a.coeffs else a


def poly_gcd(a, b):
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if a.is_zero() and b.is_zero():
        raise InvalidInput("gcd of two zero polynomials")
    a, b = _primitive_int(a), _primitive_int(b)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = _prem(a, b)
        a, b = b, _primitive_int(r)
    return a.primitive()


def squarefree_decomposition(a):
    """Yun's algorithm on the primitive part of ``a``.

    Returns (unit, [(P_i, i), ...]) with a = unit * prod P_i**i, each P_i
    squarefree, primitive, positive leading coefficient, pairwise coprime;
    trivial P_i are omitted.
    """
    if a.is_zero():
        raise InvalidInput("squarefree decomposition of zero")
    unit, f = a.unit_and_primitive()
    out = []
    if f.degree == 0:
        return unit, out
    d0 = f.derivative()
    g = poly_gcd(f, d0).monic()
    b = f.exact_div(g)
    c = d0.exact_div(g)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        aa = (poly_gcd(b, d) if not d.is_zero() else b).monic()
        if aa.degree > 0:
            out.append((aa.primitive(), i))
        b = b.exact_div(aa)
        c = d.exact_div(aa)
        d = c - b.derivative()
        i += 1
    prod = ONE
    for p, m in out:
        prod = prod * p**m
    unit = unit * Fraction(f.lc) / Fraction(prod.lc)
    return unit, [(p.primitive(), m) for p, m in out]


def squarefree_part(a):
    """Square-class kernel of ``a`` modulo nonzero squares of Q(t).

    The product of the factors of odd multiplicity, primitive with positive
    leading coefficient; the constant content is discarded.
    """
    if a.is_zero():
        raise InvalidInput("squarefree part of the zero polynomial")
    _, parts = squarefree_decomposition(a)
    out = ONE
    for p, m in parts:
        if m % 2:
            out = out * p
    return out


def radical(a):
    """a / gcd(a, a') made primitive: the product of distinct factors."""
    if a.is_zero():
        raise InvalidInput("radical of the zero polynomial")
    if a.degree <= 0:
        return ONE
    return a.exact_div(poly_gcd(a, a.derivative())).primitive()


def is_squarefree(a):
    return a.degree <= 0 or poly_gcd(a, a.derivative()).degree == 0


def _clear(a):
    """(k, A) with A = k*a integral, k a positive integer."""
    c = a.content()
    k = Fraction(c).denominator
    return k, a.scale(k)


def resultant(a, b):
    """Resultant via the subresultant pseudo-remainder sequence."""
    if a.is_zero() or b.is_zero():
        raise InvalidInput("resultant of a zero polynomial")
    ka, A = _clear(a)
    kb, B = _clear(b)
    da, db = A.degree, B.degree
    # res(ka*a, kb*b) = ka^db kb^da res(a, b)
    scale = Fraction(1, ka**db * kb**da)
    if da == 0:
        return scale * Fraction(A.lc) ** db
    if db == 0:
        return scale * Fraction(B.lc) ** da
    ca, cb = A.content(), B.content()
    A = A.scale(Fraction(1) / ca)
    B = B.scale(Fraction(1) / cb)
    t = Fraction(ca) ** db * Fraction(cb) ** da
    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = -1
    g, h = 1, 1
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = -s
        R = _prem(A, B)
        A = B
        if R.is_zero():
            return Fraction(0)
        div = g * h**delta
        B = Poly([c // div for c in R.coeffs])
        g = A.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if B.degree == 0:
            dA = A.degree
            if dA == 0:
                hh = Fraction(1)
            else:
                hh = Fraction(B.lc) ** dA / Fraction(h) ** (dA - 1)
            return scale * s * t * hh


# -- string grammar -------------------------------------------------------

def _coeff_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_str(p, var="t"):
    """Descending-degree string with explicit '*' and '^': '2*t^2 - 1'."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _coeff_str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{_coeff_str(mag)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(r"^(\d+(?:/\d+)?)?(?:\*?([a-z])(?:\^(\d+))?)?$")


def parse_poly(text, var="t"):
    """Inverse of :func:`to_str` (also accepts unsigned leading terms)."""
    s = text.replace(" ", "")
    if not s:
        raise InvalidInput("empty polynomial string")
    tokens = re.findall(r"[+-]?[^+-]+", s)
    if "".join(tokens) != s:
        raise InvalidInput(f"cannot parse polynomial {text!r}")
    acc = {}
    for tok in tokens:
        sign = -1 if tok[0] == "-" else 1
        body = tok.lstrip("+-")
        m = _TERM.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise InvalidInput(f"bad term {tok!r} in {text!r}")
        coef, v, e = m.groups()
        if v is not None and v != var:
            raise InvalidInput(f"unexpected variable {v!r} in {text!r}")
        c = Fraction(coef) if coef else Fraction(1)
        if c.denominator == 0:
            raise InvalidInput(f"zero denominator in {text!r}")
        k = 0 if v is None else (int(e) if e else 1)
        acc[k] = acc.get(k, 0) + sign * c
    n = max(acc) + 1
    return Poly([acc.get(i, 0) for i in range(n)])
