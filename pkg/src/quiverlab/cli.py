"""Command line interface: ``quiverlab <subcommand> [file.json] [flags]``.

Every subcommand writes one JSON document to stdout.  Exit codes: 0 success,
2 invalid input, 3 budget exceeded, 4 internal consistency failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from typing import Any, Sequence

from . import __version__
from .errors import CapacityError, IntegrityError, ValidationError
from .flatness import (DEFAULT_BUDGET, equality_decompositions, equality_types, expected_dimension,
                       flatness_certificate, is_generic, is_indivisible, sigma_condition)
from .hilbert import abelian_invariant_oracle, koszul_euler_series, matter_series, symmetric_power_series
from .hilbert.molien import DEFAULT_MAX_TERMS
from .io import Problem, format_rational, parse_input, quiver_to_dict
from .quiver import ParamPair, Quiver, cartan_matrix, frame, p_fn, support_components
from .reflections import reflect_at, reflection_admissibility, reflection_orbit
from .slices import p_identity_sides, parse_rep_type, slice_quiver, validate_rep_type
from .type_a import (TypeAQuiver, WalgParams, defect, flat_type_a, walg_dims, walg_flat,
                     walg_identity_checks)

log = logging.getLogger("quiverlab")

EXIT_OK, EXIT_VALIDATION, EXIT_CAPACITY, EXIT_INTEGRITY = 0, 2, 3, 4


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def thread_cap(environ=os.environ) -> int:
    """Validated value of QUIVERLAB_THREADS; all computations currently run on one thread."""
    raw = environ.get("QUIVERLAB_THREADS")
    if raw is None or raw == "":
        return 1
    if not raw.strip().isdigit() or int(raw) < 1:
        raise ValidationError(f"QUIVERLAB_THREADS must be a positive integer, got {raw!r}")
    return int(raw)


def _params_json(q: Quiver, params: ParamPair) -> dict[str, dict[str, str]]:
    return {
        "lambda": {lab: format_rational(x) for lab, x in zip(q.labels, params.lam)},
        "theta": {lab: format_rational(x) for lab, x in zip(q.labels, params.theta)},
    }


def _components(q: Quiver, v) -> list[list[str]]:
    comps = [[q.labels[i] for i in c] for c in support_components(q, v)]
    if len(comps) > 1:
        log.warning("dimension vector has disconnected support %s; flatness forces connected "
                    "support, so analyse each component separately", comps)
    return comps


def _vertex_index(q: Quiver, token: str) -> int:
    if token in q.labels:
        return q.index(token)
    if token.isdigit() and 1 <= int(token) <= q.n:
        return int(token) - 1
    raise ValidationError(f"unknown vertex {token!r}")


def _need(problem: Problem | None) -> Problem:
    if problem is None:
        raise ValidationError("this subcommand needs an input file")
    return problem


def cmd_flat(args, problem: Problem) -> dict[str, Any]:
    q, v, _ = problem.effective()
    rep = flatness_certificate(q, v, args.budget)
    out: dict[str, Any] = {
        "flat": rep.flat,
        "p": rep.p_value,
        "best_sum": rep.best_sum,
        "witness": [list(w) for w in rep.witness] if rep.witness else None,
        "expected_dimension": expected_dimension(q, v) if rep.flat else None,
        "vertices": list(q.labels),
        "dim": list(v),
        "support_components": _components(q, v),
    }
    if args.all_witnesses:
        out["equality_decompositions"] = [[list(w) for w in d]
                                          for d in equality_decompositions(q, v, args.budget)]
        out["representation_types"] = [[{"k": k, "v": list(w)} for k, w in t]
                                       for t in equality_types(q, v, args.budget)]
    return out


def cmd_sigma(args, problem: Problem) -> dict[str, Any]:
    q, v, params = problem.effective()
    return {"sigma": sigma_condition(q, v, params, args.budget), "p": p_fn(q, v),
            "support_components": _components(q, v)}


def cmd_generic(args, problem: Problem) -> dict[str, Any]:
    q, v, params = problem.effective()
    ok, offender = is_generic(v, params, args.budget)
    return {"generic": ok, "offender": list(offender) if offender else None,
            "indivisible": is_indivisible(v)}


def cmd_slice(args, problem: Problem) -> dict[str, Any]:
    if not args.type:
        raise ValidationError("slice needs --type")
    q, v, params = problem.effective()
    tau = parse_rep_type(args.type)
    problems = validate_rep_type(q, v, params, tau)
    res = slice_quiver(q, tau)
    p_hat, p_orig = p_identity_sides(q, tau)
    hat = res.slice_quiver
    return {
        "slice_quiver": quiver_to_dict(hat, res.slice_dim),
        "dims": list(res.slice_dim),
        "provenance": {hat.labels[t]: list(w) for t, w in res.provenance.items()},
        "type_violations": problems,
        "paper_check": {"p_hat": p_hat, "p": p_orig, "equal": p_hat == p_orig},
    }


def cmd_reflect(args, problem: Problem) -> dict[str, Any]:
    if args.vertex is None:
        raise ValidationError("reflect needs --vertex")
    q, v, params = problem.effective()
    i = _vertex_index(q, args.vertex)
    adm = reflection_admissibility(q, v, params, i)
    new_v, new_params = reflect_at(q, v, params, i)
    out = quiver_to_dict(q, new_v, new_params)
    out["admissibility"] = {"loop_free": adm.loop_free, "lmn": adm.lmn, "pm1": adm.pm1}
    out["paper_check"] = {"p_before": p_fn(q, v), "p_after": p_fn(q, new_v)}
    return out


def cmd_orbit(args, problem: Problem) -> dict[str, Any]:
    q, v, params = problem.effective()
    orbit = reflection_orbit(q, v, params, args.max)
    states = [{"dim": dict(zip(q.labels, w)), **_params_json(q, pp)} for w, pp in orbit.states]
    return {"vertices": list(q.labels), "size": len(states), "truncated": orbit.truncated,
            "states": states}


def cmd_typea(args, problem: Problem) -> dict[str, Any]:
    if args.shape is None or args.n is None:
        raise ValidationError("typea needs --shape and --n")
    qa = TypeAQuiver(args.n, affine=args.shape == "cycle")
    q = qa.quiver
    if problem.quiver.n != qa.n or cartan_matrix(problem.quiver) != cartan_matrix(q):
        raise ValidationError(f"input quiver is not a {args.shape} with {args.n} vertices")
    v, d = problem.dim, problem.framing or (0,) * qa.n
    flat, bad = flat_type_a(qa, v, d)
    labels = problem.quiver.labels
    fq, fv, _ = frame(q, v, d)
    general = flatness_certificate(fq, fv, args.budget).flat
    return {
        "flat": flat,
        "violating_subset": [labels[i] for i in sorted(bad)] if bad is not None else None,
        "defect": list(defect(q, v, d)),
        "paper_check": {"framed_flatness": general, "agree": general == flat},
    }


def cmd_walg(args, problem: Problem | None) -> dict[str, Any]:
    if args.r is None or args.d is None:
        raise ValidationError("walg needs --r and --d")
    params = WalgParams(args.r, args.d)
    v = walg_dims(params)
    out: dict[str, Any] = {"v": list(v), "flat": walg_flat(params),
                           "identity_checks": walg_identity_checks(params)}
    if any(v):
        qa = TypeAQuiver(params.n - 1)
        fq, fv, _ = frame(qa.quiver, v, params.d)
        general = flatness_certificate(fq, fv, args.budget).flat
        out["paper_check"] = {"framed_flatness": general, "agree": general == out["flat"]}
    return out


_SYMPOW = re.compile(r"sympow\((\d+)\)")


def cmd_hilbert(args, problem: Problem | None) -> dict[str, Any]:
    method = args.method
    if args.order < 0:
        raise ValidationError("--order must be nonnegative")
    m = _SYMPOW.fullmatch(method)
    if m:
        series = symmetric_power_series(int(m.group(1)), args.order)
    else:
        q, v, _ = _need(problem).effective()
        max_terms = args.budget if args.budget_given else DEFAULT_MAX_TERMS
        if method == "molien":
            series = koszul_euler_series(q, v, args.order, max_terms)
        elif method == "matter":
            series = matter_series(q, v, args.order, max_terms)
        elif method == "oracle":
            series = abelian_invariant_oracle(q, v, args.order)
        else:
            raise ValidationError(f"unknown method {method!r}")
    try:
        coeffs = series.as_ints()
    except ValueError as exc:
        raise IntegrityError(str(exc)) from None
    return {"coefficients": [str(c) for c in coeffs], "method": method, "order": args.order}


def cmd_frame(args, problem: Problem) -> dict[str, Any]:
    if problem.framing is None:
        raise ValidationError("input has no nonzero framing")
    q, v, params = problem.effective()
    return quiver_to_dict(q, v, params)


COMMANDS = {
    "flat": cmd_flat, "sigma": cmd_sigma, "generic": cmd_generic, "slice": cmd_slice,
    "reflect": cmd_reflect, "orbit": cmd_orbit, "typea": cmd_typea, "walg": cmd_walg,
    "hilbert": cmd_hilbert, "frame": cmd_frame,
}
_FILE_OPTIONAL = {"walg", "hilbert"}


class _Parser(argparse.ArgumentParser):
    """Argument errors become validation errors so they are reported as JSON."""

    def error(self, message):
        raise ValidationError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quiverlab", description="Flatness, slices, reflections and Hilbert "
                                                   "series for quiver moment maps.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "walg":
            p.add_argument("file", nargs="?", help="ignored")
        else:
            p.add_argument("file", nargs="?" if name in _FILE_OPTIONAL else None)
        p.add_argument("--budget", type=int, default=None,
                       help=f"state cap (default {DEFAULT_BUDGET})")
        if name == "flat":
            p.add_argument("--all-witnesses", action="store_true")
        if name == "slice":
            p.add_argument("--type")
        if name == "reflect":
            p.add_argument("--vertex")
        if name == "orbit":
            p.add_argument("--max", type=int, default=100)
        if name == "typea":
            p.add_argument("--shape", choices=["path", "cycle"])
            p.add_argument("--n", type=int)
        if name == "walg":
            p.add_argument("--r", type=_int_list)
            p.add_argument("--d", type=_int_list)
        if name == "hilbert":
            p.add_argument("--order", type=int, default=6)
            p.add_argument("--method", default="molien")
    return parser


def _emit(doc: dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="quiverlab: %(message)s")
    path = None
    try:
        args = build_parser().parse_args(argv)
        path = args.file
        thread_cap()
        args.budget_given = args.budget is not None
        if args.budget is None:
            args.budget = DEFAULT_BUDGET
        if args.budget < 1:
            raise ValidationError("--budget must be positive")
        problem = parse_input(path) if path is not None and args.command != "walg" else None
        if problem is None and args.command not in _FILE_OPTIONAL:
            raise ValidationError("missing input file")
        doc = COMMANDS[args.command](args, problem)
    except ValidationError as exc:
        _emit({"error": str(exc), "path": path})
        return EXIT_VALIDATION
    except CapacityError as exc:
        _emit({"error": str(exc), "path": path})
        return EXIT_CAPACITY
    except IntegrityError as exc:
        _emit({"error": str(exc), "path": path})
        return EXIT_INTEGRITY
    _emit(doc)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
