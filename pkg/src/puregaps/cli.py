"""Command line front end.

Subcommands: ``gk``, ``kummer``, ``generic``, ``verify``, ``bench``.
Exit codes: 0 success, 1 consistency or verification failure, 2 usage or
input error.  All emissions are deterministic byte-for-byte except the
wall-clock fields of ``verify`` and ``bench`` output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .engine import assemble_pure_gaps, decompose
from .errors import ConsistencyError, ValidationError
from .gammafile import dump_gamma, load_gamma
from .gk import gk_generating_set
from .harness import (
    bench_family,
    build_verify_points,
    map_points,
    summarize_family,
    summarize_generic,
)
from .kummer import kummer_generating_set


def _emit_summary(report, fmt, out):
    if fmt == "json":
        print(json.dumps(asdict(report)), file=out)
        return
    print(f"family\t{report.family}", file=out)
    for key, value in report.params.items():
        print(f"{key}\t{value}", file=out)
    print(f"genus\t{report.genus}", file=out)
    print(f"period\t{report.period}", file=out)
    print("row_sizes\t" + ",".join(map(str, report.row_sizes)), file=out)
    print(f"cardinality\t{report.cardinality}", file=out)
    print(f"lower_bound\t{report.lower_bound}", file=out)
    print(f"upper_bound\t{report.upper_bound}", file=out)
    print(f"homma_kim_bound\t{report.homma_kim_bound}", file=out)
    for key, value in report.verdicts.items():
        print(f"verdict.{key}\t{value}", file=out)
    for key, value in report.timings.items():
        print(f"timing.{key}\t{value:.6f}", file=out)
    if report.detail:
        print(f"detail\t{report.detail}", file=out)


def _emit_points(points, fmt, out):
    if fmt == "json":
        out.write("[")
        for idx, (a, b) in enumerate(points):
            if idx:
                out.write(",")
            out.write(f"[{a},{b}]")
        out.write("]\n")
        return
    for a, b in points:
        print(f"{a}\t{b}", file=out)


def _emit_gamma(gamma, fmt, out):
    if fmt == "json":
        obj = {"period": gamma.period,
               "points": [[a, b] for a, b in gamma.points]}
        print(json.dumps(obj), file=out)
        return
    out.write(dump_gamma(gamma))


def _emit_family(args, family, params, make_gamma):
    out = sys.stdout
    if args.emit == "summary":
        report, _, _ = summarize_family(family, params)
        _emit_summary(report, args.format, out)
    elif args.emit == "gamma":
        _emit_gamma(make_gamma(), args.format, out)
    else:
        result = assemble_pure_gaps(decompose(make_gamma()))
        _emit_points(result.g0, args.format, out)
    return 0


def _cmd_gk(args):
    return _emit_family(args, "gk", {"q": args.q},
                        lambda: gk_generating_set(args.q))


def _cmd_kummer(args):
    return _emit_family(args, "kummer", {"m": args.m, "r": args.r},
                        lambda: kummer_generating_set(args.m, args.r))


def _cmd_generic(args):
    out = sys.stdout
    gamma = load_gamma(args.input)
    if args.emit == "summary":
        report, _, _ = summarize_generic(gamma, args.input)
        _emit_summary(report, args.format, out)
    elif args.emit == "gamma":
        _emit_gamma(gamma, args.format, out)
    else:
        result = assemble_pure_gaps(decompose(gamma), verify=True)
        _emit_points(result.g0, args.format, out)
    return 0


def _verdict_cell(report):
    return ",".join(f"{k}={v}" for k, v in report.verdicts.items())


def _timing_cell(report):
    return ",".join(f"{k}={v:.6f}" for k, v in report.timings.items())


def _cmd_verify(args):
    points = build_verify_points(
        family=args.family, q_max=args.q_max, mr_max=args.max,
        special=args.special, u_max=args.u_max, r_max=args.r_max)
    reports = map_points(points)
    out = sys.stdout
    for rep in reports:
        params = ",".join(f"{k}={v}" for k, v in rep.params.items())
        cells = [rep.family, params, f"genus={rep.genus}",
                 f"g0={rep.cardinality}", _verdict_cell(rep)]
        timing = _timing_cell(rep)
        if timing:
            cells.append(timing)
        print("\t".join(cells), file=out)
    failures = [rep for rep in reports if not rep.ok]
    print(f"# verified {len(reports)} parameter points, "
          f"{len(failures)} failures", file=out)
    if failures:
        first = failures[0]
        print(f"# FIRST FAILURE {first.label()}: {first.detail}", file=out)
        return 1
    return 0


def _cmd_bench(args):
    if args.family == "gk":
        if args.q is None:
            print("bench --family gk requires --q", file=sys.stderr)
            return 2
        params = {"q": args.q}
    else:
        if args.m is None or args.r is None:
            print("bench --family kummer requires --m and --r",
                  file=sys.stderr)
            return 2
        params = {"m": args.m, "r": args.r}
    rows = bench_family(args.family, params)
    out = sys.stdout
    if args.format == "json":
        print(json.dumps([asdict(row) for row in rows]), file=out)
        return 0
    print("family\tparams\tgenus\tmethod\tseconds\tcardinality\toutputs_equal",
          file=out)
    for row in rows:
        params_cell = ",".join(f"{k}={v}" for k, v in row.params.items())
        print(f"{row.family}\t{params_cell}\t{row.genus}\t{row.method}\t"
              f"{row.seconds:.6f}\t{row.cardinality}\t"
              f"{'yes' if row.outputs_equal else 'no'}", file=out)
    return 0


def _add_emit_flags(sub):
    sub.add_argument("--emit", choices=("summary", "gamma", "puregaps"),
                     default="summary")
    sub.add_argument("--format", choices=("tsv", "json"), default="tsv")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="puregaps",
        description="Pure gap sets at two places via period box decomposition")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gk = sub.add_parser("gk", help="GK family at parameter q")
    p_gk.add_argument("--q", type=int, required=True)
    _add_emit_flags(p_gk)
    p_gk.set_defaults(func=_cmd_gk)

    p_ku = sub.add_parser("kummer", help="Kummer family at parameters m, r")
    p_ku.add_argument("--m", type=int, required=True)
    p_ku.add_argument("--r", type=int, required=True)
    _add_emit_flags(p_ku)
    p_ku.set_defaults(func=_cmd_kummer)

    p_ge = sub.add_parser("generic", help="generating set from a file")
    p_ge.add_argument("--input", required=True,
                      help="path to a generating set file")
    _add_emit_flags(p_ge)
    p_ge.set_defaults(func=_cmd_generic)

    p_ve = sub.add_parser("verify", help="cross-check grids of parameters")
    p_ve.add_argument("--family", choices=("gk", "kummer", "all"),
                      default="all")
    p_ve.add_argument("--q-max", type=int, default=4)
    p_ve.add_argument("--max", type=int, default=15,
                      help="bound for the coprime (m, r) grid")
    p_ve.add_argument("--special", choices=("ur1", "qn"))
    p_ve.add_argument("--u-max", type=int, default=3)
    p_ve.add_argument("--r-max", type=int, default=10)
    p_ve.set_defaults(func=_cmd_verify)

    p_be = sub.add_parser("bench", help="time both methods, assert equality")
    p_be.add_argument("--family", choices=("gk", "kummer"), required=True)
    p_be.add_argument("--q", type=int)
    p_be.add_argument("--m", type=int)
    p_be.add_argument("--r", type=int)
    p_be.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p_be.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
