"""Command-line interface.

Subcommands: bernoulli, powersum, lemma6, search, pell, family, report.
All integers in JSON/CSV output are decimal strings so arbitrary-precision
values survive any consumer.  Exit codes: 0 completed, 1 usage error,
2 internal verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from .bernoulli import bernoulli_number, bernoulli_polynomial
from .pell import PellProblem, family_k1, family_k3, fundamental_solution, solve_generalized, sqrt_cf
from .powersum import power_sum_poly
from .search import SearchConfig, VerificationError, pipeline_report, search_solutions
from .structure import scaled_diff_mod, structure_report


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; this tool reserves 2 for
    # verification failures.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit_json(obj) -> None:
    print(json.dumps(obj))


def _records_out(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        for row in rows:
            _emit_json(row)
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        if rows:
            writer.writerow(rows[0].keys())
        for row in rows:
            writer.writerow(row.values())
    else:
        if not rows:
            print("(no records)")
            return
        keys = list(rows[0].keys())
        widths = [max(len(k), *(len(str(r[k])) for r in rows)) for k in keys]
        print("  ".join(k.ljust(w) for k, w in zip(keys, widths)))
        for row in rows:
            print("  ".join(str(row[k]).ljust(w) for k, w in zip(keys, widths)))


def _fmt(args) -> str:
    if getattr(args, "csv", False):
        return "csv"
    if getattr(args, "json", False):
        return "json"
    return "table"


def _cmd_bernoulli(args) -> int:
    q = args.q
    value = bernoulli_number(q)
    coeffs = [str(c) for c in bernoulli_polynomial(q).coeffs]
    if args.json:
        _emit_json({"q": str(q), "number": str(value), "coefficients": coeffs})
    else:
        print(f"B_{q} = {value}")
        print(f"B_{q}(x) coefficients (constant first): {' '.join(coeffs)}")
    return 0


def _cmd_powersum(args) -> int:
    g = power_sum_poly(args.k, args.l)
    if args.eval is not None:
        value = g.eval(Fraction(args.eval))
        if args.json:
            _emit_json({"k": str(args.k), "l": str(args.l), "x": str(args.eval), "value": str(value)})
        else:
            print(value)
        return 0
    coeffs = [str(c) for c in g.coeffs]
    if args.json:
        _emit_json({"k": str(args.k), "l": str(args.l), "coefficients": coeffs})
    else:
        print(f"degree {g.degree} coefficients (constant first): {' '.join(coeffs)}")
    return 0


def _report_line(report, mod: int) -> str:
    snap = scaled_diff_mod(report.q, report.l, mod)
    coprime = ",".join(f"{p}:{c}" for p, c in report.coprime_counts.items()) or "-"
    return (
        f"q={report.q} l={report.l} d={report.d} "
        f"odd_zeros={report.odd_multiplicity_zero_count} coprime=[{coprime}] "
        f"i={'exempt' if report.exempt_i else report.conclusion_i} ii={report.conclusion_ii} "
        f"mod{mod}_snapshot={list(snap.coeffs)}"
    )


def _cmd_lemma6(args) -> int:
    grid_mode = args.q_max is not None
    if grid_mode == (args.q is not None):
        raise ValueError("give either --q and --l, or --q-max and --l-list")
    if grid_mode:
        l_values = args.l_list or [2, 4, 6, 8]
        cells = [(q, l) for q in range(2, args.q_max + 1) for l in l_values]
    else:
        if args.l is None:
            raise ValueError("--l is required with --q")
        cells = [(args.q, args.l)]
    for q, l in cells:
        report = structure_report(q, l)
        if args.json:
            payload = report.to_json_dict()
            if args.mod == 2:
                payload["mod2_snapshot"] = [str(c) for c in scaled_diff_mod(q, l, 2).coeffs]
            _emit_json(payload)
        else:
            print(_report_line(report, args.mod))
    return 0


def _cmd_search(args) -> int:
    cfg = SearchConfig(
        k=args.k,
        l=args.l,
        x_max=args.x_max,
        n_max=args.n_max,
        partitions=args.partitions,
        output_format=_fmt(args),
    )
    rows = [
        {"k": str(r.k), "l": str(r.l), "x": str(r.x), "y": str(r.y), "n": str(r.n), "source": r.source}
        for r in search_solutions(cfg)
    ]
    _records_out(rows, cfg.output_format)
    return 0


def _cmd_pell(args) -> int:
    if args.n == 1:
        a0, period = sqrt_cf(args.d)
        fund = fundamental_solution(args.d)
        if args.json:
            _emit_json(
                {
                    "d": str(args.d),
                    "cf_a0": str(a0),
                    "cf_period": [str(a) for a in period],
                    "fundamental": {"u": str(fund.u), "v": str(fund.v)},
                }
            )
        else:
            print(f"sqrt({args.d}) = [{a0}; {', '.join(str(a) for a in period)} ...]")
            print(f"fundamental solution: u={fund.u} v={fund.v}")
        return 0
    problem = PellProblem(args.d, args.n)
    solutions = solve_generalized(problem, args.bound)
    if args.json:
        for sol in solutions:
            _emit_json({"d": str(args.d), "n": str(args.n), "u": str(sol.u), "v": str(sol.v)})
    else:
        if not solutions:
            print(f"no solutions with |v| <= {args.bound}")
        for sol in solutions:
            print(f"u={sol.u} v={sol.v}")
    return 0


def _cmd_family(args) -> int:
    if args.k == 1:
        records = family_k1(args.l, args.count, search_bound=args.bound)
    else:
        records = family_k3(args.l, args.count, args.bound)
    if len(records) < args.count:
        print(f"note: found {len(records)} of {args.count} requested records within bounds", file=sys.stderr)
    rows = [
        {
            "k": str(r.k),
            "l": str(r.l),
            "x": str(r.x),
            "y": str(r.y),
            "u": str(r.pell_witness.u),
            "v": str(r.pell_witness.v),
            "verified": True,
        }
        for r in records
    ]
    _records_out(rows, _fmt(args))
    return 0


def _cmd_report(args) -> int:
    report = pipeline_report(args.k, args.l, args.n_list)
    if args.json:
        _emit_json(report)
        return 0
    print(f"k={report['k']} l={report['l']}")
    print(f"  two distinct zeros: {report['has_two_distinct_zeros']}")
    print(f"  multiplicity profile: {report['multiplicity_profile']} ({report['total_zeros']} zeros)")
    for entry in report["exponents"]:
        family = f"; family generator: {entry['family_generator']}" if entry["family_generator"] else ""
        if entry["bound_applies"]:
            print(f"  n={entry['n']}: bound applies (t={entry['t_values']}){family}")
        else:
            print(f"  n={entry['n']}: exceptional {entry['exceptional']} (t={entry['t_values']}){family}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="powersums", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--csv", action="store_true", help="CSV output (record streams only)")
    common.add_argument(
        "--partitions",
        type=int,
        default=int(os.environ.get("POWERSUM_PARTITIONS", "1")),
        help="number of independent search chunks (default from POWERSUM_PARTITIONS)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli number and polynomial")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=_cmd_bernoulli, csv_ok=False)

    p = sub.add_parser("powersum", parents=[common], help="power-sum polynomial coefficients or value")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--eval", type=int, default=None, metavar="X")
    p.set_defaults(func=_cmd_powersum, csv_ok=False)

    p = sub.add_parser(
        "lemma6",
        parents=[common],
        help="zero-structure report: d parity, mod-4 snapshot, multiplicity counts",
    )
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--mod", type=int, choices=(2, 4), default=4)
    p.add_argument("--q-max", type=int, default=None)
    p.add_argument("--l-list", type=_int_list, default=None)
    p.set_defaults(func=_cmd_lemma6, csv_ok=False)

    p = sub.add_parser("search", parents=[common], help="exhaustive bounded search for G(x) = y^n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--x-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=_cmd_search, csv_ok=True)

    p = sub.add_parser("pell", parents=[common], help="continued fraction / Pell solutions")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--bound", type=int, default=1000)
    p.set_defaults(func=_cmd_pell, csv_ok=False)

    p = sub.add_parser("family", parents=[common], help="Pell-derived solution families (k in {1,3}, n=2)")
    p.add_argument("--k", type=int, choices=(1, 3), required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--bound", type=int, default=2048)
    p.set_defaults(func=_cmd_family, csv_ok=True)

    p = sub.add_parser("report", parents=[common], help="case analysis for G(x) = y^n per exponent")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n-list", type=_int_list, required=True)
    p.set_defaults(func=_cmd_report, csv_ok=False)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.csv and not args.csv_ok:
        print(f"powersums {args.command}: error: --csv is only available for record streams", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"powersums {args.command}: verification failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, AssertionError) as exc:
        print(f"powersums {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
