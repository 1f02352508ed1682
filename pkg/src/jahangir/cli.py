"""Command-line front end.

Every JSON-producing command wraps its payload in one envelope document:
command name, echoed parameters, result, engine versions.  Counts that can
exceed JSON's safe integer range are serialized as decimal strings.  Output
is deterministic; an optional timestamp field is off by default.

Exit codes: 0 success, 2 parameter or validation problem, 3 enumeration cap
exceeded, 4 counting engines disagree under --method all.
"""

from __future__ import annotations

import argparse
import json
import os
import platform
import sys
from datetime import datetime, timezone

from . import __version__
from .asymptotics import ratio_series, sigma_table
from .combinatorics import polynomial_coefficients, sigma
from .cycles import census_j2m
from .enumeration import DEFAULT_TREE_CAP, enumerate_all, enumerate_jahangir
from .errors import (
    EnumerationCapError,
    GraphValidationError,
    ParameterDomainError,
    SizeGuardError,
)
from .graph_core import JahangirParams, build_jahangir, to_dot
from .matrix_tree import count_spanning_trees_det


def _engine_versions() -> dict:
    import numpy

    return {
        "jahangir": __version__,
        "python": platform.python_version(),
        "numpy": numpy.__version__,
    }


def _emit(command: str, parameters: dict, result, timestamp: bool):
    envelope = {
        "command": command,
        "parameters": parameters,
        "result": result,
        "engine_versions": _engine_versions(),
    }
    if timestamp:
        envelope["timestamp"] = datetime.now(timezone.utc).isoformat()
    print(json.dumps(envelope, indent=2))


def _cmd_count(args) -> int:
    params = JahangirParams(args.n, args.m)
    cap = None if args.allow_huge else DEFAULT_TREE_CAP
    engines = {}
    if args.method in ("combinatorial", "all"):
        engines["combinatorial"] = sigma(args.n, args.m).total
    if args.method in ("kirchhoff", "all"):
        engines["kirchhoff"] = count_spanning_trees_det(build_jahangir(params))
    if args.method in ("enumerate", "all"):
        engines["enumerate"] = sum(1 for _ in enumerate_all(build_jahangir(params), cap=cap))

    result = {"n": args.n, "m": args.m, "method": args.method}
    agreement = True
    if args.method == "all":
        agreement = len(set(engines.values())) == 1
        result["engines"] = {name: str(v) for name, v in engines.items()}
        result["agreement"] = agreement
        if agreement:
            result["total"] = str(engines["combinatorial"])
    else:
        result["total"] = str(engines[args.method])
    if args.breakdown:
        result["per_k"] = [str(v) for v in sigma(args.n, args.m).per_k]

    _emit("count", {"n": args.n, "m": args.m, "method": args.method, "breakdown": args.breakdown},
          result, args.timestamp)
    if not agreement:
        print(f"engine disagreement for n={args.n} m={args.m}: " +
              ", ".join(f"{k}={v}" for k, v in engines.items()), file=sys.stderr)
        return 4
    return 0


def _cmd_coeffs(args) -> int:
    coeffs = polynomial_coefficients(args.m)
    result = {"m": args.m, "coefficients": [str(c) for c in coeffs]}
    _emit("coeffs", {"m": args.m}, result, args.timestamp)
    return 0


def _cmd_enumerate(args) -> int:
    params = JahangirParams(args.n, args.m)
    cap = None if args.allow_huge else DEFAULT_TREE_CAP
    trees = list(enumerate_jahangir(params, limit=args.limit, cap=cap))
    if args.format == "dot":
        g = build_jahangir(params)
        for i, t in enumerate(trees):
            if i:
                sys.stdout.write("\n")
            sys.stdout.write(to_dot(g, set(t.edge_indices), name=f"tree_{i}"))
        return 0
    result = {
        "n": args.n,
        "m": args.m,
        "limit": args.limit,
        "count": len(trees),
        "trees": [list(t.edge_indices) for t in trees],
    }
    _emit("enumerate", {"n": args.n, "m": args.m, "limit": args.limit, "format": args.format},
          result, args.timestamp)
    return 0


def _cmd_cycles(args) -> int:
    records = census_j2m(args.m)
    histogram: dict[str, int] = {}
    for r in records:
        histogram[str(r.length)] = histogram.get(str(r.length), 0) + 1
    result = {
        "m": args.m,
        "record_count": len(records),
        "simple_cycle_count": sum(1 for r in records if r.is_simple_cycle),
        "length_histogram": histogram,
        "records": [
            {
                "spoke_span": list(r.spoke_span),
                "length": r.length,
                "edge_indices": list(r.edge_indices),
                "is_simple_cycle": r.is_simple_cycle,
            }
            for r in records
        ],
    }
    _emit("cycles", {"m": args.m}, result, args.timestamp)
    return 0


def _cmd_table(args) -> int:
    rows = sigma_table(args.n, args.m_max)
    if args.format == "csv":
        print("m,sigma")
        for m, total in rows:
            print(f"{m},{total}")
        return 0
    result = {"n": args.n, "m_max": args.m_max,
              "rows": [{"m": m, "sigma": str(total)} for m, total in rows]}
    _emit("table", {"n": args.n, "m_max": args.m_max, "format": args.format},
          result, args.timestamp)
    return 0


def _cmd_ratios(args) -> int:
    series = ratio_series(args.n, args.m_max, places=args.precision)
    entries = []
    for e in series.entries:
        decimal = e.decimal.replace(".", ",") if args.decimal_comma else e.decimal
        entries.append({
            "m": e.m,
            "ratio": f"{e.ratio.numerator}/{e.ratio.denominator}",
            "decimal": decimal,
        })
    result = {"n": args.n, "m_max": args.m_max, "precision": args.precision,
              "entries": entries}
    _emit("ratios", {"n": args.n, "m_max": args.m_max, "precision": args.precision,
                     "decimal_comma": args.decimal_comma}, result, args.timestamp)
    return 0


def _cmd_graph(args) -> int:
    params = JahangirParams(args.n, args.m)
    g = build_jahangir(params)
    if args.format == "dot":
        sys.stdout.write(to_dot(g, name=f"jahangir_{args.n}_{args.m}"))
        return 0
    result = {
        "n": args.n,
        "m": args.m,
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "edges": [[u, v] for u, v in g.edges],
    }
    _emit("graph", {"n": args.n, "m": args.m, "format": args.format},
          result, args.timestamp)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jahangir",
        description="Spanning-tree counting, enumeration, and growth analysis "
                    "for Jahangir graphs J(n, m).",
    )
    parser.add_argument("--timestamp", action="store_true",
                        help="add a UTC timestamp field to JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="spanning-tree count of J(n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=["combinatorial", "kirchhoff", "enumerate", "all"],
                   default="combinatorial")
    p.add_argument("--breakdown", action="store_true",
                   help="include the per-k split by number of kept spokes")
    p.add_argument("--allow-huge", action="store_true",
                   help="disable the enumeration cap of 10^7 trees")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("coeffs", help="coefficients of sigma as a polynomial in n")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("enumerate", help="list spanning trees of J(n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--allow-huge", action="store_true",
                   help="disable the enumeration cap of 10^7 trees")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("cycles", help="cycle census of J(2, m)")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_cycles)

    p = sub.add_parser("table", help="sigma(n, m) for m = 3..m_max")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", dest="m_max", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("ratios", help="m-direction ratios sigma(n, m+1)/sigma(n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", dest="m_max", type=int, required=True)
    p.add_argument("--precision", type=int, default=9)
    p.add_argument("--decimal-comma", action="store_true",
                   help="render decimals with a comma separator")
    p.set_defaults(func=_cmd_ratios)

    p = sub.add_parser("graph", help="export J(n, m) itself")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=_cmd_graph)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed its message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParameterDomainError, GraphValidationError, SizeGuardError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        # downstream consumer closed the pipe; park stdout on devnull so the
        # interpreter's exit flush does not raise a second time
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
