"""Local invariants of rational quadratic forms at the places of Q.

Hilbert symbols, Hasse invariants (product over i < j of (a_i, a_j)_v),
signatures, and the classical casework for local isotropy.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from sympy import isprime

from .arith import prime_support, square_class, squarefree_int
from .errors import DegenerateForm, InvalidInput


@dataclass(frozen=True, order=True)
class Place:
    """A place of Q; ``p == 0`` encodes the real place."""

    p: int

    def __post_init__(self):
        if self.p != 0 and not isprime(self.p):
            raise InvalidInput(f"{self.p} is not a prime")

    @property
    def is_real(self):
        return self.p == 0

    def __str__(self):
        return "inf" if self.p == 0 else str(self.p)

    @classmethod
    def parse(cls, text):
        text = str(text).strip().lower()
        if text in ("inf", "infinity", "real", "oo"):
            return REAL
        try:
            return cls(int(text))
        except ValueError:
            raise InvalidInput(f"bad place {text!r}") from None


REAL = Place(0)


def _legendre(a, p):
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _split(a, p):
    alpha = 0
    while a % p == 0:
        a //= p
        alpha += 1
    return alpha, a


def _hilbert_int(a, b, p):
    if p == 0:
        return -1 if (a < 0 and b < 0) else 1
    alpha, u = _split(a, p)
    beta, v = _split(b, p)
    if p == 2:
        eps = lambda x: ((x - 1) // 2) % 2  # noqa: E731
        omega = lambda x: ((x * x - 1) // 8) % 2  # noqa: E731
        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= _legendre(u, p)
    if alpha % 2:
        s *= _legendre(v, p)
    return s


def hilbert_symbol(a, b, v):
    """(a, b)_v for nonzero rationals a, b."""
    if Fraction(a) == 0 or Fraction(b) == 0:
        raise InvalidInput("Hilbert symbol of zero")
    if not isinstance(v, Place):
        v = Place.parse(v)
    return _hilbert_int(square_class(a), square_class(b), v.p)


def hasse_invariant(entries, v):
    """Product over i < j of (a_i, a_j)_v."""
    cls = []
    for a in entries:
        if Fraction(a) == 0:
            raise InvalidInput("zero entry in Hasse invariant")
        cls.append(square_class(a))
    if not isinstance(v, Place):
        v = Place.parse(v)
    out = 1
    # running product trick: prod_{i<j} (a_i, a_j) = prod_j (a_1...a_{j-1}, a_j)
    prefix = 1
    for a in cls:
        if prefix != 1:
            out *= _hilbert_int(prefix, a, v.p)
        prefix = squarefree_int(prefix * a)
    return out


def is_local_square(d, v):
    """Whether a nonzero rational is a square in the completion at v."""
    d = square_class(d)
    if v.is_real:
        return d > 0
    if d % v.p == 0:
        return False
    if v.p == 2:
        return d % 8 == 1
    return _legendre(d, v.p) == 1


@dataclass(frozen=True)
class LocalProfile:
    place: Place
    dim: int
    det_class: int
    hasse: int
    signature: tuple = None  # (pos, neg) at the real place only

    def __post_init__(self):
        if self.hasse not in (1, -1):
            raise InvalidInput("Hasse invariant must be +1 or -1")
        if self.place.is_real:
            if self.signature is None:
                raise InvalidInput("real profile needs a signature")
            if sum(self.signature) != self.dim:
                raise InvalidInput("signature does not add up to the dimension")

    def to_dict(self):
        d = {"place": str(self.place), "dim": self.dim, "det_class": self.det_class,
             "hasse": self.hasse}
        if self.signature is not None:
            d["signature"] = list(self.signature)
        return d


def local_profile(entries, v):
    """Invariants at v of the diagonal form with the given nonzero entries."""
    if not isinstance(v, Place):
        v = Place.parse(v)
    entries = [Fraction(a) for a in entries]
    if any(a == 0 for a in entries):
        raise DegenerateForm("local profile of a degenerate diagonal form")
    det = Fraction(1)
    for a in entries:
        det *= a
    sig = None
    if v.is_real:
        pos = sum(1 for a in entries if a > 0)
        sig = (pos, len(entries) - pos)
    return LocalProfile(v, len(entries), square_class(det), hasse_invariant(entries, v), sig)


def _check(profile):
    if profile.det_class == 0:
        raise DegenerateForm("degenerate local profile")


def is_isotropic_local(profile):
    """Isotropy over the completion, decided from (dim, det, hasse, signature)."""
    _check(profile)
    v, n, d, eps = profile.place, profile.dim, profile.det_class, profile.hasse
    if v.is_real:
        pos, neg = profile.signature
        return pos > 0 and neg > 0
    if n <= 1:
        return False
    if n == 2:
        return is_local_square(-d, v)
    if n == 3:
        return _hilbert_int(-1, -d, v.p) == eps
    if n == 4:
        return (not is_local_square(d, v)) or eps == _hilbert_int(-1, -1, v.p)
    return True


def split_hyperbolic(profile):
    """Profile of q' where q = H + q' (requires q isotropic)."""
    v, d = profile.place, profile.det_class
    new_d = squarefree_int(-d)
    hasse = profile.hasse * _hilbert_int(-1, new_d, v.p)
    sig = None
    if v.is_real:
        pos, neg = profile.signature
        sig = (pos - 1, neg - 1)
    return replace(profile, dim=profile.dim - 2, det_class=new_d, hasse=hasse, signature=sig)


def add_hyperbolic(profile):
    """Profile of H + q."""
    v = profile.place
    new_d = squarefree_int(-profile.det_class)
    hasse = profile.hasse * _hilbert_int(-1, profile.det_class, v.p)
    sig = None
    if v.is_real:
        pos, neg = profile.signature
        sig = (pos + 1, neg + 1)
    return replace(profile, dim=profile.dim + 2, det_class=new_d, hasse=hasse, signature=sig)


def witt_index_local(profile):
    _check(profile)
    k = 0
    while profile.dim >= 2 and is_isotropic_local(profile):
        profile = split_hyperbolic(profile)
        k += 1
    return k


def relevant_places(entries):
    """The real place, 2, and the primes in the square classes of the entries."""
    primes = {2}
    for a in entries:
        if Fraction(a) == 0:
            raise InvalidInput("zero entry")
        primes.update(prime_support(square_class(a)))
    return [REAL] + [Place(p) for p in sorted(primes)]
