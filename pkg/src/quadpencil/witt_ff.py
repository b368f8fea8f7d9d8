"""Witt classes over Q(t): second residues, specialization, triviality.

A nondegenerate form over Q(t) is zero in the Witt group iff all of its
second residues at monic irreducible p(t) vanish and its constant part, read
off by specializing at a point where the diagonal is unramified, is
hyperbolic over Q.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import factor_int
from .errors import BadSpecializationPoint, InvalidInput
from .factor import factor_poly
from .forms import (
    DiagonalFF,
    QuadraticFormFF,
    diagonalize_ff,
    orth_sum,
    scale,
    square_class_poly,
)
from .globalq import invariants_of, is_hyperbolic_Q
from .numfield import is_square, signature_at_roots
from .poly import Poly

DEFAULT_RESIDUE_DEGREE_LIMIT = 12
DEFAULT_SPECIALIZATION_ATTEMPTS = 3


class Outcome(str, enum.Enum):
    YES = "yes"
    NO = "no"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class ResidueSite:
    p: Poly

    @property
    def degree(self):
        return self.p.degree

    def __str__(self):
        return str(self.p)


@dataclass(frozen=True)
class ResidueForm:
    site: ResidueSite
    entries: tuple

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class ResidueVerdict:
    kind: Outcome  # YES = hyperbolic, NO = not hyperbolic, INDETERMINATE = inconclusive
    reason: str

    @property
    def determinate(self):
        return self.kind is not Outcome.INDETERMINATE


@dataclass
class SiteCheck:
    site: ResidueSite
    residue: ResidueForm
    verdict: ResidueVerdict

    def to_dict(self):
        return {
            "site": str(self.site.p),
            "degree": self.site.degree,
            "residue": [str(e) for e in self.residue.entries],
            "verdict": _VERDICT_NAMES[self.verdict.kind],
            "reason": self.verdict.reason,
        }


_VERDICT_NAMES = {Outcome.YES: "hyperbolic", Outcome.NO: "not_hyperbolic",
                  Outcome.INDETERMINATE: "inconclusive"}


@dataclass
class Specialization:
    t0: int
    entries: list
    invariants: object
    hyperbolic: bool
    failing_places: list = field(default_factory=list)

    def to_dict(self):
        return {
            "t0": self.t0,
            "entries": [_qstr(e) for e in self.entries],
            "invariants": self.invariants.to_dict(),
            "hyperbolic": self.hyperbolic,
            "failing_places": self.failing_places,
        }


@dataclass
class TrivialityCertificate:
    diagonal: DiagonalFF
    checks: list
    specialization: Specialization
    extra_specializations: list
    overall: Outcome

    def residues_empty(self):
        return all(len(c.residue) == 0 for c in self.checks)

    def inconclusive_sites(self):
        return [c for c in self.checks if not c.verdict.determinate]

    def to_dict(self):
        return {
            "diagonal": [str(e) for e in self.diagonal.entries],
            "residue_checks": [c.to_dict() for c in self.checks],
            "specialization": self.specialization.to_dict() if self.specialization else None,
            "extra_specializations": [s.to_dict() for s in self.extra_specializations],
            "overall": self.overall.value,
        }


def _qstr(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=4096)
def _factors(e):
    return tuple(p for p, _ in factor_poly(e).factors)


def all_residue_sites(d):
    """Distinct irreducible factors of the entries, ordered by degree then coefficients."""
    seen = set()
    for e in d.entries:
        if e.degree > 0:
            seen.update(_factors(e))
    return [ResidueSite(p) for p in sorted(seen, key=lambda p: p.sort_key())]


def _canonical_residue(u):
    """Clear denominators by a square and strip square content."""
    c = u.content()
    den = Fraction(c).denominator
    u = u.scale(den * den)
    content = int(u.content())
    sq = 1
    for p, e in factor_int(content):
        sq *= p ** (e // 2)
    return u.scale(Fraction(1, sq * sq)) if sq > 1 else u


def second_residue_at(d, site):
    """Residue form over Q[t]/(p): <u mod p> for each entry u*p."""
    p = site.p
    out = []
    for e in d.entries:
        q, r = e.divmod(p)
        if not r.is_zero():
            continue
        if (q % p).is_zero():
            raise InvalidInput(f"entry {e} is not squarefree at {p}")
        out.append(_canonical_residue(q % p))
    return ResidueForm(site, tuple(out))


def _pair_hyperbolic(x, y, p):
    return is_square(-(x * y) % p, p)


def residue_hyperbolic(rf, degree_limit=DEFAULT_RESIDUE_DEGREE_LIMIT):
    """Decide (or bound) hyperbolicity of a residue form."""
    m = len(rf.entries)
    site = rf.site
    if m == 0:
        return ResidueVerdict(Outcome.YES, "empty residue")
    if m % 2:
        return ResidueVerdict(Outcome.NO, f"odd residue dimension {m}")
    if site.degree == 1:
        root = Fraction(-site.p[0], site.p[1])
        vals = [Fraction(u(root)) for u in rf.entries]
        if is_hyperbolic_Q(vals):
            return ResidueVerdict(Outcome.YES, "hyperbolic over Q")
        return ResidueVerdict(Outcome.NO, "not hyperbolic over Q "
                              f"(invariants {invariants_of(vals).to_dict()})")
    if site.degree > degree_limit:
        return ResidueVerdict(Outcome.INDETERMINATE,
                              f"residue field degree {site.degree} exceeds limit {degree_limit}")
    p = site.p
    for (lo, hi), s in signature_at_roots(list(rf.entries), p):
        if s != 0:
            return ResidueVerdict(
                Outcome.NO, f"signature {s} at the real root in ({_qstr(lo)}, {_qstr(hi)}]")
    rest = list(rf.entries)
    undecided = False
    i = 0
    while i < len(rest):
        for j in range(i + 1, len(rest)):
            h = _pair_hyperbolic(rest[i], rest[j], p)
            if h is None:
                undecided = True
            elif h:
                del rest[j]
                del rest[i]
                break
        else:
            i += 1
    if not rest:
        return ResidueVerdict(Outcome.YES, "residue splits into hyperbolic pairs")
    if len(rest) == 2 and not undecided:
        return ResidueVerdict(Outcome.NO, "anisotropic binary residue")
    disc = Poly([(-1) ** (len(rest) // 2)])
    for u in rest:
        disc = (disc * u) % p
    sq = is_square(disc, p)
    if sq is False:
        return ResidueVerdict(Outcome.NO, "discriminant is not a square in the residue field")
    return ResidueVerdict(
        Outcome.INDETERMINATE,
        f"dimension {len(rest)} kernel over a degree-{site.degree} field passes the "
        "parity, discriminant and real-signature tests")


def specialize(d, t0):
    vals = []
    for e in d.entries:
        v = Fraction(e(t0))
        if v == 0:
            raise BadSpecializationPoint(f"entry {e} vanishes at t = {t0}")
        vals.append(v)
    return vals


def admissible_points(d, count, start=0):
    """The first ``count`` integers >= start where no entry vanishes."""
    out = []
    t0 = start
    while len(out) < count:
        if all(e(t0) != 0 for e in d.entries):
            out.append(t0)
        t0 += 1
    return out


def _specialization(d, t0):
    vals = specialize(d, t0)
    inv = invariants_of(vals) if vals else None
    hyp = is_hyperbolic_Q(vals) if vals else True
    failing = []
    if vals and not hyp:
        if inv.dim % 2:
            failing.append("dimension")
        if inv.signature[0] != inv.signature[1]:
            failing.append("inf")
        want = 1 if (inv.dim // 2) % 2 == 0 else -1
        if inv.det_class != want:
            failing.append("det")
        target = invariants_of([1, -1] * (inv.dim // 2)) if inv.dim % 2 == 0 else None
        if target is not None:
            for v, h in sorted(inv.hasse_by_place.items()):
                if not v.is_real and h != target.profile(v).hasse:
                    failing.append(str(v))
    if inv is None:
        inv = invariants_of([])
    return Specialization(t0, vals, inv, hyp, failing)


def witt_trivial_diagonal(d, degree_limit=DEFAULT_RESIDUE_DEGREE_LIMIT,
                          specialization_attempts=DEFAULT_SPECIALIZATION_ATTEMPTS):
    checks = []
    for site in all_residue_sites(d):
        rf = second_residue_at(d, site)
        checks.append(SiteCheck(site, rf, residue_hyperbolic(rf, degree_limit)))
    points = admissible_points(d, max(1, specialization_attempts))
    spec = _specialization(d, points[0])
    extra = []
    any_no = any(c.verdict.kind is Outcome.NO for c in checks)
    any_undecided = any(not c.verdict.determinate for c in checks)
    if any_no or not spec.hyperbolic:
        overall = Outcome.NO
    elif any_undecided:
        overall = Outcome.INDETERMINATE
        for t0 in points[1:]:
            s = _specialization(d, t0)
            extra.append(s)
            if not s.hyperbolic:
                overall = Outcome.NO
                break
    else:
        overall = Outcome.YES
    return TrivialityCertificate(d, checks, spec, extra, overall)


def is_witt_trivial_ff(q, degree_limit=DEFAULT_RESIDUE_DEGREE_LIMIT,
                       specialization_attempts=DEFAULT_SPECIALIZATION_ATTEMPTS):
    """Witt-triviality of a nondegenerate form over Q(t), with certificate."""
    return witt_trivial_diagonal(diagonalize_ff(_as_ff(q)), degree_limit, specialization_attempts)


@dataclass
class IsometryDecision:
    outcome: Outcome
    reason: str
    certificate: TrivialityCertificate = None
    det_classes: tuple = None

    def to_dict(self):
        return {
            "outcome": self.outcome.value,
            "reason": self.reason,
            "det_classes": [str(x) for x in self.det_classes] if self.det_classes else None,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


def _det_class(d):
    out = Poly([1])
    for e in d.entries:
        out = out * e
    return square_class_poly(out)


def is_isometric_ff(a, b, degree_limit=DEFAULT_RESIDUE_DEGREE_LIMIT,
                    specialization_attempts=DEFAULT_SPECIALIZATION_ATTEMPTS):
    """Equal dimension and Witt equivalence over Q(t), with certificate."""
    if a.dim != b.dim:
        return IsometryDecision(Outcome.NO, f"dimensions differ ({a.dim} vs {b.dim})")
    da, db = diagonalize_ff(_as_ff(a)), diagonalize_ff(_as_ff(b))
    ca, cb = _det_class(da), _det_class(db)
    if ca != cb:
        return IsometryDecision(Outcome.NO, "determinant classes differ", None, (ca, cb))
    diff = DiagonalFF(da.entries + tuple(square_class_poly(-e) for e in db.entries))
    cert = witt_trivial_diagonal(diff, degree_limit, specialization_attempts)
    reasons = {Outcome.YES: "difference is hyperbolic",
               Outcome.NO: "difference is not hyperbolic",
               Outcome.INDETERMINATE: "a residue over a field of degree >= 2 is undecided"}
    return IsometryDecision(cert.overall, reasons[cert.overall], cert, (ca, cb))


def _as_ff(q):
    return q if isinstance(q, QuadraticFormFF) else q.to_ff()


def difference_form(a, b):
    """a + (-b) as a single form over Q(t)."""
    return orth_sum(_as_ff(a), scale(_as_ff(b), -1))


__all__ = [
    "Outcome", "ResidueSite", "ResidueForm", "ResidueVerdict", "SiteCheck",
    "Specialization", "TrivialityCertificate", "IsometryDecision",
    "all_residue_sites", "second_residue_at", "residue_hyperbolic", "specialize",
    "admissible_points", "witt_trivial_diagonal", "is_witt_trivial_ff",
    "is_isometric_ff", "difference_form",
]
