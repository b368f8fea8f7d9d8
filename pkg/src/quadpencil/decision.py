"""Decide whether {f = g = 0} in P^n over Q contains a rational r-plane.

For a pencil with a nonsingular member and n in {2r+1, 2r+2} the question
reduces to an isometry over Q(t):

* n = 2r+2:  f + t*g  ~  (r+1)H + <(-1)^(r+1) * delta(t)>
* n = 2r+1:  f + t*g  ~  (r+1)H

where delta(t) is the determinant class of f + t*g.  The same answer holds
over every completion of Q, so a verdict is simultaneously local and global.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch, HypothesisViolation
from .factor import factor_poly
from .forms import (
    Pencil,
    det_poly,
    pencil_form,
    radical_ff,
    radical_q,
    square_class_poly,
    target_even,
    target_odd,
)
from .poly import Poly, is_squarefree
from .witt_ff import (
    DEFAULT_RESIDUE_DEGREE_LIMIT,
    DEFAULT_SPECIALIZATION_ATTEMPTS,
    IsometryDecision,
    Outcome,
    is_isometric_ff,
)

DISCRIMINANT_CONVENTION = "delta(t) = det(M_f + t*M_g) modulo nonzero squares of Q(t)"
MEANING = ("A 'yes' means X contains an r-dimensional linear subspace defined over Q; "
           "for these (n, r) this holds iff X contains one over R and over every Q_p, "
           "so the verdict answers both the global and the everywhere-local question.")


class Case(str, enum.Enum):
    EVEN = "even"  # n = 2r + 2
    ODD = "odd"  # n = 2r + 1


@dataclass(frozen=True)
class Problem:
    pencil: Pencil
    n: int
    r: int

    def __post_init__(self):
        if self.r < 0:
            raise DimensionMismatch(f"r must be non-negative, got {self.r}")
        if self.n not in (2 * self.r + 1, 2 * self.r + 2):
            raise DimensionMismatch(f"n = {self.n} is neither 2r+1 nor 2r+2 for r = {self.r}")
        if self.pencil.dim != self.n + 1:
            raise DimensionMismatch(
                f"forms have {self.pencil.dim} variables but n + 1 = {self.n + 1}")

    @property
    def case(self):
        return Case.EVEN if self.n == 2 * self.r + 2 else Case.ODD


@dataclass
class HypothesisReport:
    holds: bool
    D: Poly
    radical_member: list = None  # kernel basis of f (the member t = 0)
    radical_generic: list = None  # kernel basis of f + t*g over Q(t)

    def to_dict(self):
        d = {"status": "holds" if self.holds else "violated", "D": str(self.D)}
        if not self.holds:
            d["radical_member_t0"] = [[str(x) for x in v] for v in self.radical_member]
            d["radical_generic"] = [[str(x) for x in v] for v in self.radical_generic]
        return d


@dataclass
class Verdict:
    outcome: Outcome
    case: Case
    hypothesis: HypothesisReport
    delta: Poly
    delta_factorization: object
    isometry: IsometryDecision
    gate: str = None
    warnings: list = field(default_factory=list)

    @property
    def certificate(self):
        return self.isometry.certificate if self.isometry else None

    def to_dict(self):
        fz = self.delta_factorization
        return {
            "decision": self.outcome.value,
            "case": self.case.value,
            "hypothesis": self.hypothesis.to_dict(),
            "delta": {
                "polynomial": str(self.delta),
                "convention": DISCRIMINANT_CONVENTION,
                "factorization": {
                    "unit": _qstr(fz.unit),
                    "factors": [{"factor": str(p), "multiplicity": m} for p, m in fz.factors],
                },
            },
            "gate": self.gate,
            "isometry": self.isometry.to_dict() if self.isometry else None,
            "meaning": MEANING,
            "warnings": list(self.warnings),
        }


def _qstr(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def check_hypothesis(p):
    """Some member of the pencil is nonsingular iff D(t) is not identically 0."""
    D = det_poly(p)
    if not D.is_zero():
        return HypothesisReport(True, D)
    return HypothesisReport(False, D, radical_q(p.f), radical_ff(pencil_form(p)))


def compute_delta(p, report=None):
    report = report or check_hypothesis(p)
    if not report.holds:
        raise HypothesisViolation("every member of the pencil is singular (D(t) = 0)", report)
    return square_class_poly(report.D)


def smoothness_diagnostic(problem, D=None):
    """Warning for n = 2r+1 when the intersection looks smooth."""
    if problem.case is not Case.ODD:
        return None
    D = det_poly(problem.pencil) if D is None else D
    if D.is_zero():
        return None
    if D.degree == problem.n + 1 and is_squarefree(D):
        return (f"n = 2r+1 and D(t) is squarefree of degree n+1: X is a smooth complete "
                f"intersection, whose linear subspaces have dimension at most r-1 = "
                f"{problem.r - 1}; a 'yes' is impossible here")
    return None


def decide(problem, residue_degree_limit=DEFAULT_RESIDUE_DEGREE_LIMIT,
           specialization_attempts=DEFAULT_SPECIALIZATION_ATTEMPTS):
    """Verdict on the existence of a rational r-plane on X = {f = g = 0}."""
    p = problem.pencil
    report = check_hypothesis(p)
    delta = compute_delta(p, report)
    fz = factor_poly(delta)
    warnings = []
    w = smoothness_diagnostic(problem, report.D)
    if w:
        warnings.append(w)
    q = pencil_form(p)
    r = problem.r
    kw = dict(degree_limit=residue_degree_limit,
              specialization_attempts=specialization_attempts)
    if problem.case is Case.EVEN:
        iso = is_isometric_ff(q, target_even(r, delta), **kw)
        return Verdict(iso.outcome, Case.EVEN, report, delta, fz, iso, None, warnings)
    want = Poly([(-1) ** (r + 1)])
    if delta != want:
        gate = (f"determinant class {delta} differs from (-1)^(r+1) = {want}; "
                "f + t*g cannot be hyperbolic")
        return Verdict(Outcome.NO, Case.ODD, report, delta, fz, None, gate, warnings)
    iso = is_isometric_ff(q, target_odd(r), **kw)
    return Verdict(iso.outcome, Case.ODD, report, delta, fz, iso, None, warnings)
