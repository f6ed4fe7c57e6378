"""Command-line interface.

Exit status: 0 on success (AllPass, Refuted, NoneFound, normal form
reached), 1 when a law fails, a candidate survives or fuel runs out, 2 on
usage and parse errors.  ``LAMWORK_FUEL`` overrides the default fuel.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .adequacy import (
    CandidateSurvives, NotClosed, WrongSystem, check_predecessor, format_certificate, refute,
    search_predecessor,
)
from .numerals import BUILTIN_NAMES, UnknownSystem, builtin, format_report, verify_laws
from .reduction import DEFAULT_FUEL, hnf_shape, head_reduce, normalize, trace_lines, trace_records
from .syntax import ParseError, SourceText, canonical, parse_program, print_term
from .terms import Term, free_vars, size

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_fuel() -> int:
    raw = os.environ.get("LAMWORK_FUEL")
    if raw is None:
        return DEFAULT_FUEL
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"LAMWORK_FUEL must be a natural number, got {raw!r}") from None
    if value < 0:
        raise UsageError("LAMWORK_FUEL must be a natural number")
    return value


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return value


def _load_defs(paths: Sequence[str] | None) -> dict[str, Term]:
    defs: dict[str, Term] = {}
    for path in paths or ():
        with open(path, encoding="utf-8") as fh:
            defs, main = parse_program(SourceText(fh.read(), path), defs)
        if main is not None:
            raise UsageError(f"{path}: definitions file contains a bare term")
    return defs


def _read_term(arg: str, defs: dict[str, Term]) -> Term:
    """A term from a file path or inline text; a file may start with definitions."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            src = SourceText(fh.read(), arg)
    else:
        src = SourceText(arg, "<argument>")
    env, main = parse_program(src, defs)
    if main is not None:
        return main
    added = [name for name in env if name not in defs]
    if not added:
        raise UsageError(f"{src.origin}: no term given")
    return env[added[-1]]


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _shape_dict(term: Term):
    shape = hnf_shape(term)
    if not hasattr(shape, "binders"):
        return None
    return {"binders": shape.binders, "head": shape.head, "args": shape.args}


# -- commands ----------------------------------------------------------------

def cmd_parse(args) -> int:
    term = _read_term(args.term, _load_defs(args.defs))
    payload = {
        "canonical": canonical(term),
        "readable": print_term(term),
        "size": size(term),
        "free_vars": sorted(free_vars(term)),
    }
    _emit(args, payload, payload["canonical"])
    return EXIT_OK


def _reduce(args, fn) -> int:
    term = _read_term(args.term, _load_defs(args.defs))
    out = fn(term, args.fuel, trace=args.trace)
    payload = {
        "strategy": out.strategy.value,
        "status": out.status.value,
        "steps": out.steps,
        "fuel": args.fuel,
        "result": canonical(out.result),
        "hnf_shape": _shape_dict(out.result) if out.reached else None,
    }
    if out.space_exhausted:
        payload["space_exhausted"] = True
    if args.trace:
        payload["trace"] = trace_records(out)
    lines = trace_lines(out) if args.trace else []
    lines.append(f"{out.status.value} after {out.steps} steps ({out.strategy.value})")
    lines.append(canonical(out.result))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if out.reached else EXIT_FAIL


def cmd_reduce(args) -> int:
    return _reduce(args, head_reduce)


def cmd_normalize(args) -> int:
    return _reduce(args, normalize)


def cmd_numerals_verify(args) -> int:
    if args.bound < 1:
        raise UsageError("--bound must be at least 1")
    report = verify_laws(builtin(args.system), args.bound, args.fuel)
    _emit(args, report.to_dict(), format_report(report))
    return EXIT_OK if report.all_pass else EXIT_FAIL


def cmd_pred_check(args) -> int:
    candidate = _read_term(args.candidate, _load_defs(args.defs))
    report = check_predecessor(builtin(args.system), candidate, args.bound, args.fuel)
    text = [f"candidate {canonical(candidate)} against {report.system}, n < {report.bound}"]
    if report.all_pass:
        text.append("AllPass")
    else:
        rec = report.per_index[report.first_failure]
        obs = "<no normal form within fuel>" if rec.observed is None else canonical(rec.observed)
        text.append(f"FirstFailure n={rec.n}: P d_{rec.n + 1} = {obs}")
    _emit(args, report.to_dict(), "\n".join(text))
    return EXIT_OK if report.all_pass else EXIT_FAIL


def cmd_refute(args) -> int:
    candidate = _read_term(args.candidate, _load_defs(args.defs))
    cert = refute(builtin(args.system), candidate, args.fuel)
    _emit(args, cert.to_dict(), format_certificate(cert))
    if isinstance(cert, CandidateSurvives) or cert.verdict != "Refuted":
        return EXIT_FAIL
    return EXIT_OK


def cmd_search(args) -> int:
    if args.max_size < 1:
        raise UsageError("--max-size must be at least 1")
    res = search_predecessor(builtin(args.system), args.max_size, args.law_bound, args.fuel,
                             workers=args.workers)
    text = [
        f"search {res.system}: closed terms of size <= {res.max_size}, laws n < {res.law_bound}, fuel {res.fuel}",
        f"{res.verdict}" + ("" if res.found is None else f": {canonical(res.found)}"),
        f"tried {res.tried}, rejected at n=0 {res.rejected_at_zero}, rejected at n>=1 "
        f"{res.rejected_later}, fuel exhausted {res.fuel_exhausted}",
    ]
    _emit(args, res.to_dict(), "\n".join(text))
    return EXIT_OK if res.found is None else EXIT_FAIL


def cmd_selftest(args) -> int:
    from . import selftest

    results = selftest.run(quick=not args.full)
    payload = {
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in results],
        "passed": all(c.passed for c in results),
    }
    text = "\n".join(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}" for c in results)
    _emit(args, payload, text)
    return EXIT_OK if payload["passed"] else EXIT_FAIL


# -- argument parsing --------------------------------------------------------

def build_parser(default_fuel: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lamwork", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, term=None, system=None, bound=False, trace=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--fuel", type=_natural, default=default_fuel,
                       help=f"beta-contraction budget (default {default_fuel})")
        p.add_argument("--json", action="store_true", help="emit JSON")
        if term == "positional":
            p.add_argument("term", help="inline term or path to a term file")
        elif term == "candidate":
            p.add_argument("--candidate", required=True, help="inline term or path to a term file")
        if term:
            p.add_argument("--defs", action="append", metavar="FILE", help="definitions file (repeatable)")
        if system:
            p.add_argument("--system", choices=BUILTIN_NAMES, default=system)
        if bound:
            p.add_argument("--bound", type=_natural, default=50)
        if trace:
            p.add_argument("--trace", action="store_true", help="print every intermediate term")
        return p

    add("parse", cmd_parse, "parse a term and echo its canonical form", term="positional")
    add("reduce", cmd_reduce, "head-reduce a term", term="positional", trace=True)
    add("normalize", cmd_normalize, "normal-order reduce a term", term="positional", trace=True)
    add("numerals-verify", cmd_numerals_verify, "check numeral-system laws", system="nour", bound=True)
    add("pred-check", cmd_pred_check, "check a predecessor candidate", term="candidate",
        system="nour", bound=True)
    add("refute", cmd_refute, "refute a predecessor candidate for the pair-based numerals",
        term="candidate", system="nour")
    p = add("search", cmd_search, "brute-force search for a predecessor", system="nour")
    p.add_argument("--max-size", type=_natural, default=10)
    p.add_argument("--law-bound", type=_natural, default=3)
    p.add_argument("--workers", type=_natural, default=1)
    p = add("selftest", cmd_selftest, "run the invariant suite at reduced bounds")
    p.add_argument("--full", action="store_true", help="use the full acceptance bounds")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        parser = build_parser(_default_fuel())
    except UsageError as exc:
        print(f"lamwork: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (ParseError, UsageError, NotClosed, WrongSystem, OSError) as exc:
        print(f"lamwork: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownSystem as exc:
        print(f"lamwork: unknown numeral system {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
