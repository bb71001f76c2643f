"""Command-line surface: bound tables, LP verification reports, phenomenon
transforms and SVG interval charts.

Exit codes: 0 ok, 2 parse error, 3 validation error, 4 verification failure,
5 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import bounds as _bounds
from . import figure as _figure
from . import oracle as _oracle
from . import transforms as _transforms
from .core import (
    MarginalSet,
    default_event_set,
    format_decimal,
    format_exact,
    indicator_string,
    make_event_set,
    parse_probability,
    subset_iter,
    subset_labels,
    validate_marginals,
)
from .errors import EventologyError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_VERIFY = 4
EXIT_IO = 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_marginals(args: argparse.Namespace) -> MarginalSet:
    if getattr(args, "probs", None):
        try:
            probs = [parse_probability(t) for t in args.probs.split(",")]
        except (ValueError, ZeroDivisionError) as e:
            raise CliError(EXIT_PARSE, f"cannot parse probability list {args.probs!r}: {e}")
        try:
            return validate_marginals(default_event_set(len(probs)), probs)
        except EventologyError as e:
            raise CliError(EXIT_VALIDATION, str(e))
    if getattr(args, "input", None):
        try:
            with open(args.input) as f:
                doc = json.load(f)
        except OSError as e:
            raise CliError(EXIT_IO, f"cannot read {args.input}: {e}")
        except json.JSONDecodeError as e:
            raise CliError(EXIT_PARSE, f"invalid JSON in {args.input}: {e}")
        try:
            labels = doc["events"]
            probs = [parse_probability(str(t)) for t in doc["probabilities"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise CliError(EXIT_PARSE, f"malformed input document: {e}")
        try:
            return validate_marginals(make_event_set(labels), probs)
        except EventologyError as e:
            raise CliError(EXIT_VALIDATION, str(e))
    raise CliError(EXIT_PARSE, "no marginals given: use -p or --input")


def _fmt(args: argparse.Namespace) -> Callable[[Fraction], str]:
    if getattr(args, "exact", False):
        return format_exact
    digits = getattr(args, "digits", 6)
    return lambda q: format_decimal(q, digits)


def _bound_rows(m: MarginalSet, fmt: Callable[[Fraction], str], force_general: bool):
    bd = _bounds.boundary_distributions(m, force_general=force_general)
    star = _transforms.independent_epd(m)
    for x in subset_iter(m.n):
        yield {
            "subset": indicator_string(x, m.n),
            "labels": list(subset_labels(x, m.events)),
            "lower": fmt(bd.lower[x]),
            "star": fmt(star[x]),
            "upper": fmt(bd.upper[x]),
        }


def _emit_rows(m: MarginalSet, args: argparse.Namespace, out) -> None:
    rows = list(_bound_rows(m, _fmt(args), getattr(args, "general", False)))
    if args.format == "json":
        json.dump({"N": m.n, "rows": rows}, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write("subset,labels,lower,star,upper\n")
        for r in rows:
            out.write(
                f"{r['subset']},{'+'.join(r['labels'])},{r['lower']},{r['star']},{r['upper']}\n"
            )
    else:
        width = max(12, max(len("+".join(r["labels"])) for r in rows) + 2)
        out.write(f"{'subset':<{m.n + 2}} {'labels':<{width}} {'lower':>12} {'star':>12} {'upper':>12}\n")
        for r in rows:
            out.write(
                f"{r['subset']:<{m.n + 2}} {'+'.join(r['labels']):<{width}} "
                f"{r['lower']:>12} {r['star']:>12} {r['upper']:>12}\n"
            )


def cmd_bounds(args: argparse.Namespace) -> int:
    m = _load_marginals(args)
    _emit_rows(m, args, sys.stdout)
    return EXIT_OK


def _report_dict(report: _oracle.VerificationReport) -> dict:
    n = report.marginals.n
    return {
        "N": n,
        "probabilities": [format_exact(p) for p in report.marginals.probs],
        "verdict": "pass" if report.verdict else "fail",
        "subsets": [
            {
                "subset": indicator_string(r.subset, n),
                "closed_form_lower": format_exact(r.closed_form_lower),
                "lp_min": format_exact(r.lp_min),
                "closed_form_upper": format_exact(r.closed_form_upper),
                "lp_max": format_exact(r.lp_max),
                "witness_min": [format_exact(a) for a in r.witness_min.atoms],
                "witness_max": [format_exact(a) for a in r.witness_max.atoms],
            }
            for r in report.records
        ],
    }


def cmd_verify(args: argparse.Namespace) -> int:
    if args.random:
        try:
            instances = [
                _oracle.random_marginals(args.n, args.seed + k, half_rare=args.half_rare)
                for k in range(args.random)
            ]
        except EventologyError as e:
            raise CliError(EXIT_VALIDATION, str(e))
    else:
        instances = [_load_marginals(args)]
    reports = []
    for m in instances:
        try:
            reports.append(_oracle.verify_bounds(m))
        except EventologyError as e:
            raise CliError(EXIT_VALIDATION, str(e))
    json.dump([_report_dict(r) for r in reports], sys.stdout, indent=2)
    sys.stdout.write("\n")
    for r in reports:
        bad = r.first_mismatch()
        if bad is not None:
            n = r.marginals.n
            raise CliError(
                EXIT_VERIFY,
                f"sharpness mismatch at subset {indicator_string(bad.subset, n)}: "
                f"closed-form [{bad.closed_form_lower}, {bad.closed_form_upper}] vs "
                f"LP [{bad.lp_min}, {bad.lp_max}]",
            )
    return EXIT_OK


def cmd_figure(args: argparse.Namespace) -> int:
    m = _load_marginals(args)
    spec = _figure.FigureSpec(width_px=args.width, height_px=args.height)
    try:
        svg = _figure.render_figure(m, spec)
    except EventologyError as e:
        raise CliError(EXIT_VALIDATION, str(e))
    try:
        with open(args.out, "w") as f:
            f.write(svg)
    except OSError as e:
        raise CliError(EXIT_IO, f"cannot write {args.out}: {e}")
    return EXIT_OK


def cmd_phenomenon(args: argparse.Namespace) -> int:
    m = _load_marginals(args)
    kept_labels = [t for t in args.kept.split(",") if t] if args.kept else []
    kept = 0
    for lab in kept_labels:
        if lab not in m.events.labels:
            raise CliError(EXIT_VALIDATION, f"unknown event label in --kept: {lab!r}")
        kept |= 1 << m.events.labels.index(lab)
    pm = _transforms.identity_phenomenon(m.n, kept)
    new_labels = tuple(
        lab if (kept >> i) & 1 else lab + "^c" for i, lab in enumerate(m.events.labels)
    )
    new_probs = tuple(
        p if (kept >> i) & 1 else 1 - p for i, p in enumerate(m.probs)
    )
    try:
        transformed = validate_marginals(make_event_set(new_labels), new_probs)
    except EventologyError as e:
        raise CliError(EXIT_VALIDATION, str(e))
    fmt = _fmt(args)
    bd = _bounds.boundary_distributions(m)
    star = _transforms.independent_epd(m)
    lower = _transforms.apply_phenomenon(bd.lower, pm)
    upper = _transforms.apply_phenomenon(bd.upper, pm)
    star_t = _transforms.apply_phenomenon(star.values, pm)
    out = sys.stdout
    out.write("marginals: " + ", ".join(
        f"{lab}={fmt(p)}" for lab, p in zip(new_labels, new_probs)
    ) + "\n")
    out.write("subset labels lower star upper\n")
    for x in subset_iter(m.n):
        labs = "+".join(subset_labels(x, transformed.events)) or "-"
        out.write(
            f"{indicator_string(x, m.n)} {labs} {fmt(lower[x])} {fmt(star_t[x])} {fmt(upper[x])}\n"
        )
    return EXIT_OK


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("-p", "--probs", help="comma list of probabilities, events auto-named x1..xN")
    p.add_argument("-i", "--input", help="JSON file with events and probabilities")


def _add_format_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--exact", action="store_true", help="print fractions instead of decimals")
    p.add_argument("--digits", type=int, default=6, help="decimal rendering digits")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfrare",
        description="Fréchet bounds of the 1st kind for finite event sets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="per-subset lower/independent/upper table")
    _add_input_args(p)
    _add_format_args(p)
    p.add_argument("--general", action="store_true",
                   help="force the general formulas even for half-rare input")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="LP sharpness verification report")
    _add_input_args(p)
    p.add_argument("--random", type=int, default=0, metavar="K",
                   help="verify K randomly drawn marginal sets instead of one input")
    p.add_argument("--n", type=int, default=3, help="event count for --random")
    p.add_argument("--half-rare", action="store_true", help="draw half-rare marginals")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="render the interval chart as SVG")
    _add_input_args(p)
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=480)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("phenomenon", help="complement events outside a kept set")
    _add_input_args(p)
    _add_format_args(p)
    p.add_argument("--kept", required=True,
                   help="comma list of labels left uncomplemented; may be empty")
    p.set_defaults(func=cmd_phenomenon)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
