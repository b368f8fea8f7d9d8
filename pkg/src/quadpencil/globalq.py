"""Hasse-Minkowski decisions for rational quadratic forms.

A form is handled through its complete invariant tuple: dimension,
determinant class, Hasse invariants at the finitely many places where they
can be nontrivial, and the real signature.  Witt indices are computed by
peeling hyperbolic planes off the tuple; no isotropic vectors are built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import prime_support, squarefree_int
from .errors import DegenerateForm
from .forms import QuadraticFormQ, diagonalize_q
from .local import (
    REAL,
    LocalProfile,
    Place,
    is_isotropic_local,
    local_profile,
    relevant_places,
    split_hyperbolic,
)


@dataclass(frozen=True)
class GlobalInvariants:
    dim: int
    det_class: int
    hasse_by_place: dict = field(hash=False)
    signature: tuple

    def places(self):
        return sorted(self.hasse_by_place)

    def profile(self, v):
        """Local profile at any place (Hasse +1 off the stored support)."""
        h = self.hasse_by_place.get(v, 1)
        sig = self.signature if v.is_real else None
        return LocalProfile(v, self.dim, self.det_class, h, sig)

    def reciprocity_ok(self):
        out = 1
        for h in self.hasse_by_place.values():
            out *= h
        return out == 1

    def peel(self):
        """Invariants of q' with q = H + q'."""
        new = {v: split_hyperbolic(self.profile(v)).hasse for v in self.places()}
        pos, neg = self.signature
        return GlobalInvariants(self.dim - 2, squarefree_int(-self.det_class), new,
                                (pos - 1, neg - 1))

    def key(self):
        """Canonical tuple; equal keys <=> isometric (Hasse-Minkowski)."""
        nontrivial = tuple(sorted((v.p, h) for v, h in self.hasse_by_place.items() if h == -1))
        return (self.dim, self.det_class, self.signature, nontrivial)

    def to_dict(self):
        return {
            "dim": self.dim,
            "det_class": self.det_class,
            "signature": list(self.signature),
            "hasse": {str(v): h for v, h in sorted(self.hasse_by_place.items())},
        }


def _entries(q):
    if isinstance(q, QuadraticFormQ):
        d = diagonalize_q(q)
    else:
        d = [Fraction(a) for a in q]
    if any(a == 0 for a in d):
        raise DegenerateForm("degenerate rational quadratic form")
    return d


def invariants_of(entries):
    """Complete invariants of a nondegenerate form (entries or a Gram form)."""
    entries = _entries(entries)
    if not entries:
        return GlobalInvariants(0, 1, {REAL: 1, Place(2): 1}, (0, 0))
    hasse = {}
    for v in relevant_places(entries):
        hasse[v] = local_profile(entries, v).hasse
    det = Fraction(1)
    for a in entries:
        det *= a
    pos = sum(1 for a in entries if a > 0)
    return GlobalInvariants(len(entries), squarefree_int(det.numerator * det.denominator),
                            hasse, (pos, len(entries) - pos))


def _support(inv):
    ps = set(inv.hasse_by_place) | {REAL, Place(2)}
    ps |= {Place(p) for p in prime_support(inv.det_class)}
    return sorted(ps)


def invariants_isotropic(inv):
    """Hasse-Minkowski on an invariant tuple."""
    if inv.dim <= 1:
        return False
    if inv.dim == 2:
        # -det a rational square; local tests alone would need every prime
        return inv.det_class == -1
    return all(is_isotropic_local(inv.profile(v)) for v in _support(inv))


def is_isotropic_Q(entries):
    return invariants_isotropic(invariants_of(entries))


def invariants_witt_index(inv):
    k = 0
    while invariants_isotropic(inv):
        inv = inv.peel()
        k += 1
    return k


def witt_index_Q(entries):
    return invariants_witt_index(invariants_of(entries))


def anisotropic_part(entries):
    """Invariants of the anisotropic kernel."""
    inv = invariants_of(entries)
    while invariants_isotropic(inv):
        inv = inv.peel()
    return inv


def is_hyperbolic_Q(entries):
    inv = invariants_of(entries)
    return inv.dim % 2 == 0 and invariants_witt_index(inv) == inv.dim // 2


def _neg(entries):
    return [-a for a in _entries(entries)]


def is_witt_equivalent_Q(a, b):
    return is_hyperbolic_Q(_entries(a) + _neg(b))


def is_isometric_Q(a, b):
    ea, eb = _entries(a), _entries(b)
    return len(ea) == len(eb) and is_witt_equivalent_Q(ea, eb)
