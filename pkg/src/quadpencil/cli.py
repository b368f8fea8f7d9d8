"""Command-line front end: problem files in, JSON certificates out.

Exit codes: 0 for a determinate answer, 2 for "indeterminate", 1 for errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .counterexamples import remark3_demo
from .decision import Problem, decide
from .errors import HypothesisViolation, InvalidInput, QuadPencilError
from .forms import Pencil, QuadraticFormQ, diagonalize_q, pencil_form
from .globalq import invariants_of, is_isotropic_Q, witt_index_Q
from .local import Place, is_isotropic_local, local_profile, witt_index_local
from .witt_ff import (
    DEFAULT_RESIDUE_DEGREE_LIMIT,
    DEFAULT_SPECIALIZATION_ATTEMPTS,
    Outcome,
    is_witt_trivial_ff,
)

TASKS = ("decide-rplane", "invariants", "witt-trivial", "demo-remark3")
OPTION_DEFAULTS = {
    "search_bound": None,
    "residue_degree_limit": DEFAULT_RESIDUE_DEGREE_LIMIT,
    "specialization_attempts": DEFAULT_SPECIALIZATION_ATTEMPTS,
}
EXIT_OK, EXIT_ERROR, EXIT_INDETERMINATE = 0, 1, 2


@dataclass(frozen=True)
class ProblemFile:
    task: str
    n: int = None
    r: int = None
    f: QuadraticFormQ = None
    g: QuadraticFormQ = None
    options: dict = field(default_factory=lambda: dict(OPTION_DEFAULTS))
    variant: str = None
    place: str = None


# -- parsing -----------------------------------------------------------------

def parse_rational(token, location):
    if isinstance(token, bool) or not isinstance(token, (str, int)):
        raise InvalidInput(f"expected a rational string, got {token!r}", location)
    try:
        return Fraction(str(token).strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"not a rational number: {token!r}", location) from None


def _int_field(data, key, location, required=True):
    if key not in data:
        if required:
            raise InvalidInput(f"missing field {key!r}", location)
        return None
    v = data[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise InvalidInput(f"{key} must be an integer", f"{location}.{key}")
    return v


def parse_form(block, location):
    if not isinstance(block, dict):
        raise InvalidInput("form block must be an object", location)
    dim = _int_field(block, "dim", location)
    if dim < 1:
        raise InvalidInput("dim must be positive", f"{location}.dim")
    entries = block.get("entries")
    if not isinstance(entries, list):
        raise InvalidInput("missing list 'entries'", location)
    need = dim * (dim + 1) // 2
    if len(entries) != need:
        raise InvalidInput(f"a form in {dim} variables needs {need} entries, got {len(entries)}",
                           f"{location}.entries")
    coeffs = [parse_rational(e, f"{location}.entries[{k}]") for k, e in enumerate(entries)]
    return QuadraticFormQ.from_upper(dim, coeffs)


def parse_problem(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"malformed JSON: {e.msg}", f"line {e.lineno}, column {e.colno}") from None
    if not isinstance(data, dict):
        raise InvalidInput("problem must be a JSON object", "$")
    task = data.get("task", "decide-rplane")
    if task not in TASKS:
        raise InvalidInput(f"unknown task {task!r}; expected one of {', '.join(TASKS)}", "$.task")
    options = dict(OPTION_DEFAULTS)
    raw = data.get("options", {})
    if not isinstance(raw, dict):
        raise InvalidInput("options must be an object", "$.options")
    for k, v in raw.items():
        if k not in OPTION_DEFAULTS:
            raise InvalidInput(f"unknown option {k!r}", f"$.options.{k}")
        if v is not None and (isinstance(v, bool) or not isinstance(v, int) or v < 1):
            raise InvalidInput(f"{k} must be a positive integer", f"$.options.{k}")
        options[k] = v
    pf = ProblemFile(task=task, options=options, variant=data.get("variant"),
                     place=None if data.get("place") is None else str(data["place"]))
    if task == "demo-remark3":
        if pf.variant not in ("7", "10"):
            raise InvalidInput("demo-remark3 needs variant '7' or '10'", "$.variant")
        return pf
    if "f" not in data:
        raise InvalidInput("missing f block", "$")
    f = parse_form(data["f"], "$.f")
    if task == "invariants":
        if pf.place is None:
            raise InvalidInput("invariants needs a place", "$.place")
        Place.parse(pf.place)
        return replace(pf, f=f)
    if "g" not in data:
        raise InvalidInput("missing g block", "$")
    g = parse_form(data["g"], "$.g")
    if f.dim != g.dim:
        raise InvalidInput(f"f has {f.dim} variables but g has {g.dim}", "$.g.dim")
    pf = replace(pf, f=f, g=g)
    if task == "decide-rplane":
        pf = replace(pf, n=_int_field(data, "n", "$"), r=_int_field(data, "r", "$"))
    return pf


def _qstr(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _form_block(q):
    return {"dim": q.dim, "entries": [_qstr(c) for c in q.upper_coeffs()]}


def dump_problem(pf):
    """Inverse of parse_problem up to formatting."""
    d = {"task": pf.task, "options": dict(pf.options)}
    for key in ("n", "r", "variant", "place"):
        if getattr(pf, key) is not None:
            d[key] = getattr(pf, key)
    if pf.f is not None:
        d["f"] = _form_block(pf.f)
    if pf.g is not None:
        d["g"] = _form_block(pf.g)
    return json.dumps(d, indent=2, sort_keys=True) + "\n"


# -- running -----------------------------------------------------------------

def _exit_for(outcome):
    return EXIT_INDETERMINATE if outcome is Outcome.INDETERMINATE else EXIT_OK


def _run_decide(pf):
    opts = pf.options
    problem = Problem(Pencil(pf.f, pf.g), pf.n, pf.r)
    v = decide(problem, opts["residue_degree_limit"], opts["specialization_attempts"])
    full = v.to_dict()
    cert = v.certificate
    report = {
        "task": pf.task,
        "n": pf.n,
        "r": pf.r,
        "decision": full["decision"],
        "case": full["case"],
        "hypothesis": full["hypothesis"],
        "delta": full["delta"],
        "gate": full["gate"],
        "residue_checks": [c.to_dict() for c in cert.checks] if cert else [],
        "specialization": cert.specialization.to_dict() if cert and cert.specialization else None,
        "isometry": full["isometry"],
        "meaning": full["meaning"],
        "warnings": full["warnings"],
    }
    return report, _exit_for(v.outcome)


def _run_witt(pf):
    opts = pf.options
    cert = is_witt_trivial_ff(pencil_form(Pencil(pf.f, pf.g)), opts["residue_degree_limit"],
                              opts["specialization_attempts"])
    report = {"task": pf.task, "form": "f + t*g", "decision": cert.overall.value}
    report.update(cert.to_dict())
    return report, _exit_for(cert.overall)


def _run_invariants(pf):
    place = Place.parse(pf.place)
    d = diagonalize_q(pf.f)
    prof = local_profile(d, place)
    report = {
        "task": pf.task,
        "diagonal": [_qstr(c) for c in d],
        "local": prof.to_dict(),
        "isotropic_local": is_isotropic_local(prof),
        "witt_index_local": witt_index_local(prof),
        "global": invariants_of(d).to_dict(),
        "isotropic_Q": is_isotropic_Q(d),
        "witt_index_Q": witt_index_Q(d),
    }
    return report, EXIT_OK


def _run_demo(pf):
    report = remark3_demo(pf.variant, search_bound=pf.options["search_bound"])
    report = {"task": pf.task, **report}
    return report, EXIT_OK


_RUNNERS = {"decide-rplane": _run_decide, "witt-trivial": _run_witt,
            "invariants": _run_invariants, "demo-remark3": _run_demo}


def run(pf):
    """(document, exit code); the document has a 'report' and a 'timing' field."""
    start = time.perf_counter()
    try:
        report, code = _RUNNERS[pf.task](pf)
    except HypothesisViolation as e:
        report = {"task": pf.task, "error": e.to_dict(),
                  "hypothesis": e.report.to_dict() if e.report else None}
        code = EXIT_ERROR
    except QuadPencilError as e:
        report, code = {"task": pf.task, "error": e.to_dict()}, EXIT_ERROR
    return {"report": report, "timing": {"seconds": round(time.perf_counter() - start, 3)}}, code


def render(doc):
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- argparse ----------------------------------------------------------------

def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(doc, path):
    text = render(doc)
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser():
    ap = argparse.ArgumentParser(prog="quadpencil", description=(
        "Decide whether {f = g = 0} in P^n over Q contains a rational r-plane "
        "(n = 2r+1 or 2r+2)."))
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", help="run the task in a problem file (default decide-rplane)")
    d.add_argument("--input", required=True, help="problem file, or - for stdin")
    d.add_argument("--output", help="report file (default stdout)")
    d.add_argument("--residue-degree-limit", type=int)
    d.add_argument("--search-bound", type=int)
    d.add_argument("--specialization-attempts", type=int)

    m = sub.add_parser("demo", help="everywhere-singular pencils from a genus-one curve")
    m.add_argument("variant", choices=["remark3-7", "remark3-10"])
    m.add_argument("--output")
    m.add_argument("--search-bound", type=int)

    i = sub.add_parser("invariants", help="local and global invariants of one form")
    i.add_argument("--form", required=True, help="form block {dim, entries} or a problem file")
    i.add_argument("--place", required=True, help="a prime or inf")
    i.add_argument("--output")
    return ap


def _override(pf, args):
    opts = dict(pf.options)
    for key in ("residue_degree_limit", "search_bound", "specialization_attempts"):
        val = getattr(args, key, None)
        if val is not None:
            opts[key] = val
    return replace(pf, options=opts)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "decide":
            pf = _override(parse_problem(_read(args.input)), args)
        elif args.command == "demo":
            pf = _override(ProblemFile("demo-remark3", variant=args.variant.split("-")[1]), args)
        else:
            text = _read(args.form)
            data = json.loads(text) if text.strip().startswith("{") else None
            block = data.get("f", data) if isinstance(data, dict) else None
            if block is None:
                raise InvalidInput("form file must hold a JSON object", args.form)
            f = parse_form(block, "$.f" if "f" in data else "$")
            Place.parse(args.place)
            pf = ProblemFile("invariants", f=f, place=args.place)
    except QuadPencilError as e:
        _emit({"report": {"error": e.to_dict()}, "timing": {"seconds": 0.0}}, args.output)
        return EXIT_ERROR
    except (OSError, json.JSONDecodeError) as e:
        err = InvalidInput(str(e))
        _emit({"report": {"error": err.to_dict()}, "timing": {"seconds": 0.0}}, args.output)
        return EXIT_ERROR
    doc, code = run(pf)
    _emit(doc, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
