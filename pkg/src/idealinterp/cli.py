"""Batch front-end: read a problem document, dispatch, emit basis + certificate + stats.

Documents are UTF-8 JSON with rationals as strings ("p" or "p/q") so results
round-trip exactly; see PROBLEM_SCHEMA for the structure.  Identical input
documents produce byte-identical output documents.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import sys
from pathlib import Path
from typing import Any

import jsonschema

from .counters import OpCounters
from .errors import (
    DependentConditions,
    DependentPolynomials,
    DocumentError,
    IdealInterpError,
    NotDInvariant,
    ParseError,
    SpliceNotApplicable,
    SpliceVerificationFailed,
)
from .functionals import ConditionSpace, Problem
from .multi_point import groebner_multi, groebner_via_mmm
from .parsing import format_monomial, format_polynomial, parse_polynomial, parse_rational
from .polynomials import MonomialOrder
from .single_point import GroebnerResult, groebner_single
from .splice import SpliceInput, splice_two
from .verify import certify

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_BAD_DOCUMENT = 2
EXIT_NOT_D_INVARIANT = 3
EXIT_DEPENDENT = 4
EXIT_CERTIFICATE_FAILED = 5

_NAME = r"^[A-Za-z_][A-Za-z_0-9]*$"
_RATIONAL = r"^-?\d+(/\d+)?$"

PROBLEM_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["variables", "order", "points"],
    "additionalProperties": False,
    "properties": {
        "variables": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "string", "pattern": _NAME},
        },
        "order": {
            "type": "object",
            "required": ["kind"],
            "additionalProperties": False,
            "properties": {
                "kind": {"enum": ["lex", "grlex"]},
                "priority": {
                    "type": "array",
                    "items": {"type": "string", "pattern": _NAME},
                },
            },
        },
        "points": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["point", "space"],
                "additionalProperties": False,
                "properties": {
                    "point": {
                        "type": "array",
                        "items": {"type": "string", "pattern": _RATIONAL},
                    },
                    "space": {
                        "type": "array",
                        "minItems": 1,
                        "items": {"type": "string"},
                    },
                },
            },
        },
        "options": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "algorithm": {"enum": ["auto", "single", "mmm", "splice"]},
                "checkDInvariance": {"type": "boolean"},
                "emitCertificate": {"type": "boolean"},
                "emitStats": {"type": "boolean"},
            },
        },
    },
}

_DEFAULT_OPTIONS = {
    "algorithm": "auto",
    "checkDInvariance": True,
    "emitCertificate": False,
    "emitStats": False,
}


def load_problem(doc: dict) -> tuple[Problem, dict]:
    """Validate a problem document and build the Problem it describes."""
    try:
        jsonschema.validate(doc, PROBLEM_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "$" + "".join(
            f"[{p}]" if isinstance(p, int) else f".{p}" for p in exc.absolute_path
        )
        raise DocumentError(exc.message, path) from None

    variables = list(doc["variables"])
    if len(set(variables)) != len(variables):
        raise DocumentError("duplicate variable names", "$.variables")
    order_doc = doc["order"]
    priority_names = order_doc.get("priority", variables)
    if sorted(priority_names) != sorted(variables):
        raise DocumentError(
            "priority must be a permutation of the variables", "$.order.priority"
        )
    order = MonomialOrder(
        order_doc["kind"], tuple(variables.index(name) for name in priority_names)
    )

    spaces = []
    for i, entry in enumerate(doc["points"]):
        coords = entry["point"]
        if len(coords) != len(variables):
            raise DocumentError(
                f"point has {len(coords)} coordinates, expected {len(variables)}",
                f"$.points[{i}].point",
            )
        try:
            point = tuple(parse_rational(c) for c in coords)
        except ValueError as exc:
            raise DocumentError(str(exc), f"$.points[{i}].point") from None
        polys = []
        for j, text in enumerate(entry["space"]):
            try:
                polys.append(parse_polynomial(text, variables))
            except ParseError as exc:
                raise DocumentError(str(exc), f"$.points[{i}].space[{j}]") from None
        try:
            spaces.append(ConditionSpace(point, tuple(polys)))
        except ValueError as exc:
            raise DocumentError(str(exc), f"$.points[{i}]") from None

    try:
        problem = Problem(tuple(variables), order, tuple(spaces))
    except ValueError as exc:
        raise DocumentError(str(exc), "$.points") from None

    options = dict(_DEFAULT_OPTIONS)
    options.update(doc.get("options", {}))
    return problem, options


def _solve(problem: Problem, options: dict) -> tuple[GroebnerResult, str, list[str]]:
    algorithm = options["algorithm"]
    check = options["checkDInvariance"]
    notes: list[str] = []

    if algorithm == "auto":
        algorithm = "single" if len(problem.conditions) == 1 else "mmm"

    if algorithm == "single":
        if len(problem.conditions) != 1:
            raise DocumentError(
                "single-point algorithm requires exactly one point", "$.options.algorithm"
            )
        result = groebner_single(
            problem.conditions[0], problem.order, check_d_invariance=check
        )
        return result, "single", notes

    if algorithm == "splice":
        try:
            result = _solve_splice(problem, check)
            return result, "splice", notes
        except (SpliceNotApplicable, SpliceVerificationFailed) as exc:
            notes.append(f"splice fell back to mmm: {exc}")
            result = groebner_via_mmm(problem, check_d_invariance=check)
            return result, "mmm", notes

    result = groebner_via_mmm(problem, check_d_invariance=check)
    return result, "mmm", notes


def _solve_splice(problem: Problem, check: bool) -> GroebnerResult:
    if len(problem.conditions) != 2:
        raise SpliceNotApplicable("splice requires exactly two condition groups")
    subresults = []
    subproblems = []
    for cond in problem.conditions:
        sub = Problem(problem.variables, problem.order, (cond,))
        subproblems.append(sub)
        subresults.append(
            groebner_single(cond, problem.order, check_d_invariance=check)
        )
    return splice_two(
        SpliceInput(
            subresults[0], subproblems[0], subresults[1], subproblems[1], problem.order
        )
    )


def run(doc: dict) -> dict:
    """Process one problem document into a result document."""
    problem, options = load_problem(doc)
    result, algorithm, notes = _solve(problem, options)
    order = problem.order
    names = problem.variables

    out: dict[str, Any] = {
        "algorithm": algorithm,
        "groebnerBasis": [format_polynomial(g, names, order) for g in result.basis],
        "quotientBasis": [format_monomial(m, names) for m in result.quotient_basis],
        "leadingMonomials": [format_monomial(m, names) for m in result.leading_monomials],
        "notes": notes,
        "certificate": None,
        "stats": None,
    }
    if options["emitCertificate"]:
        certificate = result.certificate or certify(result, problem)
        out["certificate"] = certificate.to_json()
    if options["emitStats"]:
        c: OpCounters = result.counters
        out["stats"] = {
            "n": result.n,
            "m": result.m,
            "fieldOps": c.field_ops,
            "functionalEvals": c.functional_evals,
            "functionalEvalsLambda": c.functional_evals_lambda,
            "functionalEvalsMmm": c.functional_evals_mmm,
            "rankDecisions": c.rank_decisions,
        }
    return out


def render_json(out: dict) -> str:
    return json.dumps(out, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_text(out: dict) -> str:
    lines = [f"algorithm: {out['algorithm']}"]
    lines.append(f"groebner basis ({len(out['groebnerBasis'])}):")
    lines.extend(f"  {g}" for g in out["groebnerBasis"])
    lines.append("quotient basis: " + ", ".join(out["quotientBasis"]))
    lines.append("leading monomials: " + ", ".join(out["leadingMonomials"]))
    cert = out.get("certificate")
    if cert is not None:
        lines.append(f"certificate: {'PASS' if cert['pass'] else 'FAIL'}")
        for key in ("vanishing", "reduced", "buchberger", "dimension"):
            ok = cert[f"{key}Ok"]
            note = "" if ok else f" ({cert['details'].get(key, 'failed')})"
            extra = (
                f" ({cert['dimension']})"
                if key == "dimension" and ok and cert["dimension"] is not None
                else ""
            )
            lines.append(f"  {key}: {'ok' if ok else 'FAIL'}{extra}{note}")
    stats = out.get("stats")
    if stats is not None:
        lines.append(
            "stats: n={n} m={m} fieldOps={fieldOps} functionalEvals={functionalEvals} "
            "(lambda {functionalEvalsLambda}, mmm {functionalEvalsMmm}) "
            "rankDecisions={rankDecisions}".format(**stats)
        )
    for note in out.get("notes", ()):
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def _error_code(exc: BaseException) -> int:
    if isinstance(exc, (DocumentError, ParseError, json.JSONDecodeError)):
        return EXIT_BAD_DOCUMENT
    if isinstance(exc, NotDInvariant):
        return EXIT_NOT_D_INVARIANT
    if isinstance(exc, (DependentConditions, DependentPolynomials)):
        return EXIT_DEPENDENT
    return EXIT_INTERNAL


def _process_text(text: str, overrides: dict) -> tuple[int, dict | None, str | None]:
    """Returns (exit code, result document or None, error message or None)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        return EXIT_BAD_DOCUMENT, None, f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
    if not isinstance(doc, dict):
        return EXIT_BAD_DOCUMENT, None, "document must be a JSON object"
    doc = dict(doc)
    options = dict(doc.get("options", {}))
    options.update(overrides)
    doc["options"] = options
    try:
        out = run(doc)
    except IdealInterpError as exc:
        return _error_code(exc), None, str(exc)
    if options.get("emitCertificate") and not out["certificate"]["pass"]:
        return EXIT_CERTIFICATE_FAILED, out, None
    return EXIT_OK, out, None


def _cli_overrides(args: argparse.Namespace) -> dict:
    overrides: dict[str, Any] = {}
    if args.algorithm is not None:
        overrides["algorithm"] = args.algorithm
    if args.no_d_invariance_check:
        overrides["checkDInvariance"] = False
    if args.certificate:
        overrides["emitCertificate"] = True
    if args.stats:
        overrides["emitStats"] = True
    return overrides


def _batch_worker(item: tuple[str, dict]) -> tuple[str, int, dict | None, str | None]:
    path, overrides = item
    text = Path(path).read_text(encoding="utf-8")
    code, out, err = _process_text(text, overrides)
    return path, code, out, err


def _run_batch(directory: str, overrides: dict, fmt: str) -> int:
    folder = Path(directory)
    if not folder.is_dir():
        print(f"error: {directory} is not a directory", file=sys.stderr)
        return EXIT_BAD_DOCUMENT
    inputs = sorted(
        p for p in folder.glob("*.json") if not p.name.endswith(".result.json")
    )
    if not inputs:
        print(f"error: no input documents in {directory}", file=sys.stderr)
        return EXIT_BAD_DOCUMENT
    items = [(str(p), overrides) for p in inputs]
    results: list[tuple[str, int, dict | None, str | None]]
    if len(items) > 1:
        try:
            with concurrent.futures.ProcessPoolExecutor() as pool:
                results = list(pool.map(_batch_worker, items))
        except (OSError, concurrent.futures.process.BrokenProcessPool):
            results = [_batch_worker(item) for item in items]
    else:
        results = [_batch_worker(item) for item in items]
    worst = EXIT_OK
    for path, code, out, err in results:
        target = Path(path).with_suffix(".result.json")
        if out is not None:
            payload = render_json(out) if fmt == "json" else render_text(out)
            target.write_text(payload, encoding="utf-8")
            print(f"{path}: {'ok' if code == EXIT_OK else f'exit {code}'} -> {target}")
        else:
            print(f"{path}: error: {err}", file=sys.stderr)
        worst = max(worst, code)
    return worst


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealinterp",
        description=(
            "Compute the reduced Groebner basis of the vanishing ideal of "
            "interpolation conditions given by points with differential multiplicities."
        ),
    )
    parser.add_argument("--input", help="problem document (default: stdin)")
    parser.add_argument("--output", help="result file (default: stdout)")
    parser.add_argument(
        "--algorithm", choices=["auto", "single", "mmm", "splice"], default=None
    )
    parser.add_argument(
        "--no-d-invariance-check",
        action="store_true",
        help="run even when a condition space is not closed under differentiation",
    )
    parser.add_argument(
        "--certificate", action="store_true", help="verify the result and emit a certificate"
    )
    parser.add_argument("--stats", action="store_true", help="emit operation counters")
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument(
        "--batch", metavar="DIR", help="process every *.json document in DIR"
    )
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    overrides = _cli_overrides(args)
    if args.batch:
        return _run_batch(args.batch, overrides, args.format)

    if args.input:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BAD_DOCUMENT
    else:
        text = sys.stdin.read()

    code, out, err = _process_text(text, overrides)
    if out is None:
        print(f"error: {err}", file=sys.stderr)
        return code
    payload = render_json(out) if args.format == "json" else render_text(out)
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return code


def main() -> int:
    return run_cli()


if __name__ == "__main__":
    sys.exit(main())
