"""Command-line entry point: ``hpindex {compute,cohort,fit,synth}``.

Exit status is 0 on success, 1 when the data fail validation (or a fit is
impossible) and 2 on usage errors, following argparse.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import cohort as co
from .dataio import dataset_from_records, emit_dataset, emit_report, parse_dataset, summary_rows
from .errors import ComparisonError, ConfigurationError, DomainError, FitError, ValidationError
from .fitting import fit_power_law, fit_proportional, hirsch_a_histogram, score_power_law
from .indices import index_report
from .model import CreditScheme, build_profile
from .synth import SyntheticCohortSpec, generate_synthetic_cohort

FIT_DEFAULTS = {
    "power": ("mean_n_pi", "h_pi_over_h"),
    "proportional": ("h", "sqrt_c_tot"),
}


class UsageError(Exception):
    pass


def _split(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _q_list(text: str) -> list[Fraction]:
    try:
        qs = [Fraction(t) for t in _split(text)]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid q list {text!r}") from None
    if any(q <= 0 for q in qs):
        raise argparse.ArgumentTypeError("q values must be positive")
    return qs


def _read_dataset(args):
    fmt = args.input_format
    if fmt is None:
        fmt = "jsonl" if str(args.data).endswith((".jsonl", ".ndjson")) else "csv"
    if args.data == "-":
        return parse_dataset(sys.stdin, fmt)
    try:
        with open(args.data, encoding="utf-8", newline="") as fh:
            return parse_dataset(fh, fmt)
    except OSError as exc:
        raise UsageError(f"cannot read {args.data}: {exc.strerror}") from None


def _write(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> None:
    scheme = CreditScheme.parse(args.scheme)
    records = sorted(_read_dataset(args).to_records(), key=lambda r: r.researcher_id)
    reports = [index_report(build_profile(rec, scheme), args.q) for rec in records]
    _write(args, emit_report(reports, args.format))


def cmd_cohort(args) -> None:
    metrics = _split(args.metrics)
    compare = _split(args.compare) if args.compare else []
    if args.compare and len(compare) != 2:
        raise UsageError("--compare takes exactly two metrics, e.g. h,h_pi")
    for m in [args.rank_by, *compare]:
        if m and m not in metrics:
            metrics.append(m)
    if args.hist_width is not None and "hirsch_a" not in metrics:
        metrics.append("hirsch_a")

    records = _read_dataset(args).to_records()
    table = co.build_cohort_table(records, metrics)
    out: dict = {"table": table}
    if args.rank_by:
        out["ranking"] = co.rank_by(table, args.rank_by)
    if compare:
        ra, rb = co.rank_by(table, compare[0]), co.rank_by(table, compare[1])
        out["comparison"] = {
            "a": compare[0],
            "b": compare[1],
            "rank_shift": co.rank_shift(ra, rb),
            "kendall_tau_b": co.rank_correlation(ra, rb) if len(table.rows) > 1 else None,
        }
    if args.excess:
        out["excess"] = co.excess_comparison(records, args.excess)
    if args.hist_width is not None:
        values = [v for v in table.column("hirsch_a").values() if v is not None]
        out["hirsch_a_histogram"] = hirsch_a_histogram(values, args.hist_width)
    if args.emit_curves:
        out["curves"] = co.citation_curves(records, list(CreditScheme))

    if args.format == "json":
        _write(args, emit_report(out, "json"))
        return
    # CSV carries one table; pick the most specific one requested
    if args.emit_curves:
        payload = out["curves"]
    elif args.excess:
        payload = out["excess"]
    elif compare:
        payload = out["comparison"]["rank_shift"]
    elif args.rank_by:
        payload = out["ranking"]
    elif args.summary:
        payload = summary_rows(table)
    else:
        payload = table
    _write(args, emit_report(payload, "csv"))


def cmd_fit(args) -> None:
    x, y = FIT_DEFAULTS[args.model]
    x, y = args.x or x, args.y or y
    table = co.build_cohort_table(_read_dataset(args).to_records(), [x, y])
    points = co.fit_points(table, x, y)
    excluded = sorted(set(table.column(x)) - {rid for rid, _, _ in points})
    if args.model == "power":
        kept = [p for p in points if p[1] > 0 and p[2] > 0]
        excluded = sorted(set(excluded) | {p[0] for p in points if p not in kept})
        pairs = [(px, py) for _, px, py in kept]
        result = fit_power_law(pairs)
        idealized = score_power_law(pairs, 1.0, 0.5)
    else:
        pairs = [(px, py) for _, px, py in points]
        result = fit_proportional(pairs)
        idealized = None
    if excluded:
        print(f"note: {len(excluded)} researcher(s) without usable {x}/{y} excluded", file=sys.stderr)
    if args.format == "csv":
        _write(args, emit_report(result, "csv"))
    else:
        doc = {"x": x, "y": y, "fit": result, "idealized": idealized, "excluded": excluded}
        _write(args, emit_report(doc, "json"))


def cmd_synth(args) -> None:
    if args.spec:
        try:
            text = Path(args.spec).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.spec}: {exc.strerror}") from None
        spec = SyntheticCohortSpec.from_json(text, seed=args.seed)
    else:
        spec = SyntheticCohortSpec() if args.seed is None else SyntheticCohortSpec(seed=args.seed)
    _write(args, emit_dataset(dataset_from_records(generate_synthetic_cohort(spec)), args.format))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hpindex", description="h-type citation indices with PI renormalization")
    sub = parser.add_subparsers(dest="command", required=True)

    def data_args(p):
        p.add_argument("data", help="dataset path (CSV or JSON lines), '-' for stdin")
        p.add_argument("--input-format", choices=["csv", "jsonl"], help="default: by file extension")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("-o", "--output", help="write to file instead of stdout")

    p = sub.add_parser("compute", help="per-researcher index report")
    data_args(p)
    p.add_argument("--scheme", choices=[s.value for s in CreditScheme], default="raw")
    p.add_argument("--q", type=_q_list, default=[], help="comma-separated q values for h_q, e.g. 1/2,2,4")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("cohort", help="cohort table, rankings and rank comparison")
    data_args(p)
    p.add_argument("--metrics", default=",".join(co.DEFAULT_METRICS), help=f"known: {','.join(co.METRICS)}")
    p.add_argument("--rank-by", help="metric to rank researchers by")
    p.add_argument("--compare", help="two metrics, e.g. h,h_pi: rank shift and Kendall tau-b")
    p.add_argument("--excess", type=_q_list, help="q values for the excess-citation comparison")
    p.add_argument("--hist-width", type=float, help="bin width for a histogram of C_tot/h^2")
    p.add_argument("--summary", action="store_true", help="CSV: emit the min/max summary instead of rows")
    p.add_argument("--emit-curves", action="store_true", help="include ranked citation curves")
    p.set_defaults(func=cmd_cohort)

    p = sub.add_parser("fit", help="power-law or proportional fit between two cohort metrics")
    data_args(p)
    p.add_argument("--model", choices=sorted(FIT_DEFAULTS), default="power")
    p.add_argument("--x", help="x column (cohort metric)")
    p.add_argument("--y", help="y column (cohort metric)")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("synth", help="generate a seeded synthetic cohort dataset")
    p.add_argument("--spec", help="JSON spec file; defaults are used when omitted")
    p.add_argument("--seed", type=int, help="overrides the seed from --spec")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.add_argument("-o", "--output", help="write to file instead of stdout")
    p.set_defaults(func=cmd_synth)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (UsageError, ConfigurationError) as exc:
        print(f"hpindex {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, DomainError, FitError, ComparisonError) as exc:
        print(f"hpindex {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
