"""Command-line front end.

Exit codes: 0 success/verified, 1 verification false or inconsistent data,
2 certification budget exhausted (Unknown verdict), 3 unusable input
(syntax, dimensions, flags, files).  Output on stdout is byte-deterministic
for identical inputs; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .endo import Endo
from .locfin import InconsistencyError, inverse_from_minpoly, lf_certify
from .poly import Poly
from .tame import TameWord, normal_form, word_to_endo
from .textio import MapDocument, ParseError, parse_map, render_map, render_poly
from .witness import (
    VerificationError,
    witness_obs2,
    witness_obs3,
    witness_obs4,
)


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; our contract reserves 2 for Unknown
    # verdicts, so route usage problems through exit 3 instead
    def error(self, message):
        raise _UsageError(message)


def _emit_json(doc: dict):
    print(json.dumps(doc, indent=2))


# ----------------------------------------------------------------------
# input plumbing

def _load_map_from_file(path: str, n_flag) -> Endo:
    doc = MapDocument.from_json(Path(path).read_text())
    if n_flag is not None and n_flag != doc.n:
        raise ValueError(f"--n {n_flag} contradicts file dimension {doc.n}")
    return doc.to_endo()


def _load_single_map(args) -> Endo:
    if args.map is not None and args.file is not None:
        raise ValueError("give --map or --file, not both")
    if args.file is not None:
        return _load_map_from_file(args.file, args.n)
    if args.map is None:
        raise ValueError("need a map: --map EXPRS or --file PATH")
    if args.n is None:
        raise ValueError("--n is required with an inline --map")
    return parse_map(args.map, args.n)


def _as_elementary(g: Endo):
    """Recognize (X_1, ..., X_i + g, ..., X_n) and recover (i, g)."""
    from .tame import Elementary

    xs = Poly.variables(g.n)
    off = [i for i in range(g.n) if g.coords[i] != xs[i]]
    if not off:
        return Elementary(1, Poly.zero(g.n))  # the identity moves nothing
    if len(off) > 1:
        raise ValueError("not an elementary map: several coordinates move")
    i = off[0]
    return Elementary(i + 1, g.coords[i] - xs[i])  # validates X_i-freeness


def _map_output(g: Endo, fmt: str):
    if fmt == "json":
        _emit_json(MapDocument.from_endo(g).to_json_dict())
    else:
        print(render_map(g))


# ----------------------------------------------------------------------
# subcommands

def _cmd_compose(args) -> int:
    if args.file:
        if args.map:
            raise ValueError("give --map or --file, not both")
        maps = [_load_map_from_file(p, args.n) for p in args.file]
    else:
        if not args.map:
            raise ValueError("need at least one --map or --file")
        if args.n is None:
            raise ValueError("--n is required with inline --map")
        maps = [parse_map(m, args.n) for m in args.map]
    result = maps[0]
    for g in maps[1:]:
        result = result.compose(g)
    _map_output(result, args.format)
    return 0


def _cmd_iterate(args) -> int:
    g = _load_single_map(args)
    _map_output(g.iterate(args.times), args.format)
    return 0


def _cmd_jacobian(args) -> int:
    g = _load_single_map(args)
    det = g.jacobian_det()
    if args.format == "json":
        _emit_json({"n": g.n, "jacobian_det": render_poly(det)})
    else:
        print(render_poly(det))
    return 0


def _print_report_text(report):
    mu = report.minimal_polynomial
    print(f"verdict: {report.verdict}")
    print(f"minimal_polynomial: {mu if mu is not None else 'none'}")
    print("iterate_degrees:", " ".join(str(d) for d in report.iterate_degrees))
    print(
        f"budget_used: iterations={report.budget_used[0]} "
        f"max_degree={report.budget_used[1]}"
    )


def _cmd_lf_certify(args) -> int:
    g = _load_single_map(args)
    report = lf_certify(g, max_iter=args.budget_iter, max_deg=args.budget_deg)
    if args.format == "json":
        _emit_json(report.to_json_dict())
    else:
        _print_report_text(report)
    return 0 if report.certified else 2


def _cmd_minpoly_invert(args) -> int:
    g = _load_single_map(args)
    report = lf_certify(g, max_iter=args.budget_iter, max_deg=args.budget_deg)
    if not report.certified:
        if args.format == "json":
            _emit_json(report.to_json_dict())
        else:
            _print_report_text(report)
        return 2
    inv = inverse_from_minpoly(g, report.minimal_polynomial)
    if args.format == "json":
        _emit_json({
            "minimal_polynomial": report.minimal_polynomial.to_coeff_strings(),
            "inverse": MapDocument.from_endo(inv).to_json_dict(),
        })
    else:
        print(f"minimal_polynomial: {report.minimal_polynomial}")
        print(f"inverse: {render_map(inv)}")
    return 0


def _cmd_normal_form(args) -> int:
    word = TameWord.from_json(Path(args.file).read_text())
    nf = normal_form(word)
    ok = word_to_endo(nf.to_word()) == word_to_endo(word)
    if args.format == "json":
        doc = nf.to_word().to_json_dict()
        doc["recomposition_verified"] = ok
        _emit_json(doc)
    else:
        for f in nf.to_word().to_json_dict()["factors"]:
            print(json.dumps(f))
        print(f"recomposition_verified: {str(ok).lower()}")
    return 0 if ok else 1


def _witness_output(w, fmt: str) -> int:
    if fmt == "json":
        _emit_json(w.to_json_dict())
    else:
        for line in w.transcript:
            print(line)
    return 0


def _cmd_witness_obs2(args) -> int:
    e = _as_elementary(_load_single_map(args))
    return _witness_output(witness_obs2(e), args.format)


def _cmd_witness_obs3(args) -> int:
    e = _as_elementary(_load_single_map(args))
    return _witness_output(witness_obs3(e, a=args.a, j=args.j), args.format)


def _cmd_nagata_verify(args) -> int:
    return _witness_output(witness_obs4(), args.format)


def _cmd_parse_check(args) -> int:
    g = _load_single_map(args)
    _map_output(g, args.format)
    return 0


# ----------------------------------------------------------------------

def _add_map_flags(sub, repeatable=False):
    if repeatable:
        sub.add_argument("--map", action="append",
                         help="inline map expressions (repeatable, composed left to right)")
        sub.add_argument("--file", action="append",
                         help="JSON map document path (repeatable)")
    else:
        sub.add_argument("--map", help="inline comma-separated coordinate expressions")
        sub.add_argument("--file", help="JSON map document path")
    sub.add_argument("--n", type=int, help="ambient dimension (required with --map)")


def _add_budget_flags(sub):
    sub.add_argument("--budget-iter", type=int, default=16,
                     help="iteration budget (default 16)")
    sub.add_argument("--budget-deg", type=int, default=512,
                     help="degree budget (default 512)")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="polyaut",
        description="Exact computation with polynomial automorphisms over Q.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, func, help_text):
        sub = subs.add_parser(name, help=help_text)
        sub.set_defaults(func=func)
        sub.add_argument("--format", choices=("text", "json"), default="text")
        return sub

    sub = add("compose", _cmd_compose, "compose maps left to right")
    _add_map_flags(sub, repeatable=True)

    sub = add("iterate", _cmd_iterate, "m-th iterate of a map")
    _add_map_flags(sub)
    sub.add_argument("--times", type=int, required=True, help="iteration count")

    sub = add("jacobian", _cmd_jacobian, "Jacobian determinant")
    _add_map_flags(sub)

    sub = add("lf-certify", _cmd_lf_certify,
              "certify local finiteness and compute the minimal polynomial")
    _add_map_flags(sub)
    _add_budget_flags(sub)

    sub = add("minpoly-invert", _cmd_minpoly_invert,
              "invert a map through its minimal polynomial")
    _add_map_flags(sub)
    _add_budget_flags(sub)

    sub = add("normal-form", _cmd_normal_form,
              "rewrite a tame word as elementaries then one diagonal")
    sub.add_argument("--file", required=True, help="JSON word document path")

    sub = add("witness-obs2", _cmd_witness_obs2,
              "doubling-conjugation witness for an elementary map")
    _add_map_flags(sub)

    sub = add("witness-obs3", _cmd_witness_obs3,
              "determinant-one conjugation witness for an elementary map")
    _add_map_flags(sub)
    sub.add_argument("--a", type=Fraction, default=Fraction(2),
                     help="scaling parameter, not 0 or +-1 (default 2)")
    sub.add_argument("--j", type=int, default=None,
                     help="balancing index (default: smallest != i)")

    add("nagata-verify", _cmd_nagata_verify,
        "verify the wild degree-5 conjugation chain")

    sub = add("parse-check", _cmd_parse_check,
              "parse a map and echo its canonical rendering")
    _add_map_flags(sub)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"polyaut: error: {exc}", file=sys.stderr)
        return 3
    try:
        return args.func(args)
    except (InconsistencyError, VerificationError) as exc:
        print(f"polyaut: verification failed: {exc}", file=sys.stderr)
        return 1
    except (ParseError, ValueError, OSError) as exc:
        print(f"polyaut: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
