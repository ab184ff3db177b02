"""Command-line interface.

Subcommands:

    stats W            one permutation's statistics record
    interval W         a weak- or Bruhat-order interval [id, w]
    poincare W         one rank generating polynomial
    sweep --n N        verify all relations over S_N, emit the report
    oracle-check --n N compare fast routes against definitional oracles

Exit codes: 0 on success, 1 when a sweep finds violations or an oracle
comparison fails, 2 on usage errors (bad arguments, malformed
permutations, sizes over the supported caps).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import arrangement, orders, verify
from .perm import parse_permutation
from .qpoly import QPolynomial


def _parse_word_args(parts: list[str]):
    return parse_permutation(" ".join(parts))


def _format_poly(p: QPolynomial | None) -> str:
    return "-" if p is None else str(p)


def _cmd_stats(args: argparse.Namespace) -> int:
    w = _parse_word_args(args.w)
    record = verify.stat_record(w, depth=args.depth)
    if args.format == "json":
        print(json.dumps(record.to_json_dict()))
        return 0
    re_text = "-" if record.re is None else str(record.re)
    print(f"w={' '.join(str(v) for v in record.w)}")
    print(f"inv={record.inv}")
    print(f"code={' '.join(str(c) for c in record.code)}")
    print(
        f"wk={record.wk} prod={record.prod} rk={record.rk} ao={record.ao} "
        f"br={record.br} re={re_text}"
    )
    print(f"avoids_231_312={str(record.avoids_231_312).lower()}")
    print(f"avoids_four={str(record.avoids_four).lower()}")
    print(f"avoids_3412_4231={str(record.avoids_3412_4231).lower()}")
    print(f"weak_poly={_format_poly(record.weak_poly)}")
    print(f"bruhat_poly={_format_poly(record.bruhat_poly)}")
    print(f"product_poly={_format_poly(record.product_poly)}")
    print(f"distance_poly={_format_poly(record.distance_poly)}")
    return 0


def _cmd_interval(args: argparse.Namespace) -> int:
    w = _parse_word_args(args.w)
    if args.order == "weak":
        summary = orders.weak_interval(w, with_elements=args.list)
    else:
        summary = orders.bruhat_interval(w, with_elements=args.list)
    print(f"order      {args.order}")
    print(f"size       {summary.size}")
    print(f"max_length {summary.max_length}")
    print(f"poincare   {summary.poincare}")
    if args.list:
        for element in summary.elements:
            print(str(element))
    return 0


def _cmd_poincare(args: argparse.Namespace) -> int:
    w = _parse_word_args(args.w)
    if args.which == "weak":
        poly = orders.weak_interval(w).poincare
    elif args.which == "bruhat":
        poly = orders.bruhat_interval(w).poincare
    elif args.which == "product":
        poly = orders.product_q_formula(w)
    else:
        poly = arrangement.distance_enumerator(w)
    if args.format == "json":
        print(json.dumps({"which": args.which, "coeffs": poly.to_list()}))
    else:
        print(poly)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.n >= 8 and not args.long:
        print(
            "error: a full n >= 8 sweep takes minutes; pass --long to confirm",
            file=sys.stderr,
        )
        return 2
    report = verify.sweep(args.n, depth=args.depth, parallelism=args.parallelism)
    payload = verify.emit_report(report, format=args.format)
    if args.output:
        Path(args.output).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    print(
        f"n={report.n} depth={report.depth} records={len(report.records)} "
        f"violations={len(report.violations)}",
        file=sys.stderr,
    )
    return 1 if report.violations else 0


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    results = verify.oracle_checks(args.n)
    all_passed = all(r.passed for r in results)
    if args.format == "json":
        doc = {
            "n": args.n,
            "checks": [
                {"name": r.name, "n": r.n, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
            "passed": all_passed,
        }
        print(json.dumps(doc))
    else:
        for r in results:
            status = "PASS" if r.passed else f"FAIL {r.detail}"
            print(f"{r.name}: n={r.n} {status}")
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invarr",
        description=(
            "Statistics of permutation inversion arrangements: weak and "
            "Bruhat intervals, code products, acyclic orientations, rook "
            "placements, and region counts, with exhaustive verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    word_help = "permutation in one-line notation, e.g. 25134 or '2 5 1 3 4'"

    p_stats = sub.add_parser("stats", help="statistics record for one permutation")
    p_stats.add_argument("w", nargs="+", help=word_help)
    p_stats.add_argument("--depth", choices=verify.DEPTHS, default="with_region_oracle")
    p_stats.add_argument("--format", choices=("text", "json"), default="text")
    p_stats.set_defaults(handler=_cmd_stats)

    p_interval = sub.add_parser("interval", help="interval [id, w] in weak or Bruhat order")
    p_interval.add_argument("w", nargs="+", help=word_help)
    p_interval.add_argument("--order", choices=("weak", "bruhat"), default="weak")
    p_interval.add_argument(
        "--list", action="store_true", help="also print every element, sorted"
    )
    p_interval.set_defaults(handler=_cmd_interval)

    p_poincare = sub.add_parser("poincare", help="one rank generating polynomial")
    p_poincare.add_argument("w", nargs="+", help=word_help)
    p_poincare.add_argument(
        "--which",
        choices=("weak", "bruhat", "product", "distance"),
        default="weak",
    )
    p_poincare.add_argument("--format", choices=("text", "json"), default="text")
    p_poincare.set_defaults(handler=_cmd_poincare)

    p_sweep = sub.add_parser("sweep", help="verify all relations over S_n")
    p_sweep.add_argument("--n", type=int, required=True)
    p_sweep.add_argument("--depth", choices=verify.DEPTHS, default="counts")
    p_sweep.add_argument("--format", choices=("json", "csv"), default="json")
    p_sweep.add_argument("--output", help="write the report here instead of stdout")
    p_sweep.add_argument(
        "--parallelism", type=int, default=None, help="worker count (default: cores)"
    )
    p_sweep.add_argument(
        "--long", action="store_true", help="confirm a multi-minute n >= 8 sweep"
    )
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_oracle = sub.add_parser(
        "oracle-check", help="fast routes vs definitional oracles"
    )
    p_oracle.add_argument("--n", type=int, required=True)
    p_oracle.add_argument("--format", choices=("text", "json"), default="text")
    p_oracle.set_defaults(handler=_cmd_oracle_check)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
