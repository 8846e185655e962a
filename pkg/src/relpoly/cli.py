"""Command-line entry point.

Exit codes: 0 success, 1 negative verdict (failed --expect-maximum or
cross-check), 2 usage or parse error, 3 budget refusal.  All rationals
cross the interface as "a/b" strings; errors go to stderr as one JSON line.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .counts import (
    lambda_k,
    mu_vector,
    ntable_from_whitney,
    rel_eval,
    reliability,
    reliability_via_tutte,
    t_k,
)
from .errors import (
    BudgetError,
    DimensionMismatchError,
    DisconnectedGraphError,
    GraphFormatError,
    TableConsistencyError,
)
from .graphs import SimpleGraph, fixture, parse_edge_list, parse_graph6, to_graph6
from .mc import cross_check, estimate
from .order import TUTTE, WHITNEY, certify_maximum, tutte_compare, whitney_compare
from .scan import ClassSpec, ScanConfig, enumerate_class, scan
from .tutte import tutte_dc, tutte_expansion, whitney, whitney_expansion

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse errors through the JSON path
        raise _UsageError(message)


def load_graph(src: str) -> SimpleGraph:
    """Graph sources: fixture:NAME[:params], g6:STRING, file:PATH, or a path."""
    if src.startswith("fixture:"):
        parts = src.split(":")[1:]
        if not parts:
            raise GraphFormatError("empty fixture name")
        name, raw_params = parts[0], parts[1:]
        try:
            params = tuple(int(p) for p in raw_params)
        except ValueError:
            raise GraphFormatError(f"non-integer fixture parameter in {src!r}") from None
        return fixture(name, *params)
    if src.startswith("g6:"):
        return parse_graph6(src[3:])
    path = Path(src[5:] if src.startswith("file:") else src)
    if not path.exists():
        raise GraphFormatError(f"no such graph file: {path}")
    return parse_edge_list(path.read_text())


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"bad rational {text!r}; expected 'a/b'") from None


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(
        json.dumps({"error": kind, "message": message}, sort_keys=True) + "\n"
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="relpoly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="Tutte or Whitney polynomial as JSON triples")
    p_poly.add_argument("--graph", required=True)
    kind = p_poly.add_mutually_exclusive_group()
    kind.add_argument("--tutte", action="store_true")
    kind.add_argument("--whitney", action="store_true")
    p_poly.add_argument("--method", choices=["dc", "expansion"], default="dc")

    p_counts = sub.add_parser("counts", help="N table, mu vector, t_k and lambda^(k) lists")
    p_counts.add_argument("--graph", required=True)

    p_rel = sub.add_parser("rel", help="exact k-reliability at a rational p")
    p_rel.add_argument("--graph", required=True)
    p_rel.add_argument("--k", type=int, required=True)
    p_rel.add_argument("--p", required=True)
    p_rel.add_argument("--via-tutte", action="store_true", dest="via_tutte")

    p_cmp = sub.add_parser("compare", help="order certificate between two graphs")
    p_cmp.add_argument("--g", required=True)
    p_cmp.add_argument("--h", required=True)
    p_cmp.add_argument("--order", choices=[WHITNEY, TUTTE], default=WHITNEY)

    p_scan = sub.add_parser("scan", help="classify a full class C(n, m)")
    p_scan.add_argument("--n", type=int, required=True)
    p_scan.add_argument("--m", type=int, required=True)
    p_scan.add_argument("--workers", type=int, default=None)
    p_scan.add_argument("--limit", type=int, default=None,
                        help="smoke mode: scan only the first N members (report marked partial)")
    p_scan.add_argument("--full", action="store_true",
                        help="certify every member, skipping the table-domination prefilter")
    p_scan.add_argument("--memo-cap", type=int, default=None, dest="memo_cap")
    p_scan.add_argument("--csv", default=None, help="also write the CSV digest here")

    p_cert = sub.add_parser("certify", help="check one graph against a whole class")
    p_cert.add_argument("--graph", required=True)
    p_cert.add_argument("--n", type=int, required=True)
    p_cert.add_argument("--m", type=int, required=True)
    p_cert.add_argument("--order", choices=[WHITNEY, TUTTE], default=WHITNEY)
    p_cert.add_argument("--full", action="store_true", help="collect all counterexamples")
    p_cert.add_argument("--expect-maximum", action="store_true", dest="expect_maximum",
                        help="exit 1 when a counterexample is found")

    p_mc = sub.add_parser("mc", help="Monte Carlo percolation estimate")
    p_mc.add_argument("--graph", required=True)
    p_mc.add_argument("--k", type=int, required=True)
    p_mc.add_argument("--p", required=True)
    p_mc.add_argument("--trials", type=int, default=100_000)
    p_mc.add_argument("--seed", type=int, default=0)
    p_mc.add_argument("--cross-check", action="store_true", dest="do_cross_check")
    p_mc.add_argument("--sigmas", type=float, default=4.0)
    return parser


def _cmd_poly(args) -> int:
    g = load_graph(args.graph)
    want_whitney = args.whitney
    if args.method == "dc":
        poly = whitney(g) if want_whitney else tutte_dc(g)
    else:
        poly = whitney_expansion(g) if want_whitney else tutte_expansion(g)
    _dump(
        {
            "kind": "whitney" if want_whitney else "tutte",
            "method": args.method,
            "n": g.n,
            "m": g.m,
            "terms": poly.to_triples(),
        }
    )
    return EXIT_OK


def _require_connected_input(g: SimpleGraph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("count tables need a connected input graph")


def _cmd_counts(args) -> int:
    g = load_graph(args.graph)
    _require_connected_input(g)
    table = ntable_from_whitney(whitney(g), g.n, g.m)
    _dump(
        {
            "table": table.to_json_dict(),
            "mu": [str(v) for v in mu_vector(table).values],
            "t": [str(t_k(table, k)) for k in range(1, g.n + 1)],
            "lambda": [lambda_k(table, k) for k in range(1, g.n + 1)],
        }
    )
    return EXIT_OK


def _cmd_rel(args) -> int:
    g = load_graph(args.graph)
    _require_connected_input(g)
    p = _parse_rational(args.p)
    table = ntable_from_whitney(whitney(g), g.n, g.m)
    value = rel_eval(reliability(table, args.k), p)
    out = {"k": args.k, "p": str(p), "value": str(value)}
    if args.via_tutte:
        out["via_tutte"] = str(reliability_via_tutte(g, p))
    _dump(out)
    return EXIT_OK


def _cmd_compare(args) -> int:
    g = load_graph(args.g)
    h = load_graph(args.h)
    compare = whitney_compare if args.order == WHITNEY else tutte_compare
    result = compare(g, h)
    _dump({"order": args.order, **result.to_json_dict()})
    return EXIT_OK


def _cmd_scan(args) -> int:
    if args.limit is not None and args.limit < 1:
        raise _UsageError("--limit must be at least 1")
    spec = ClassSpec(args.n, args.m)
    config = ScanConfig(
        workers=args.workers,
        prefilter=not args.full,
        limit=args.limit,
        memo_cap=args.memo_cap,
    )
    report = scan(spec, config)
    if args.csv:
        Path(args.csv).write_text("\n".join(report.to_csv_rows()) + "\n")
    _dump(report.to_json_dict())
    return EXIT_OK


def _cmd_certify(args) -> int:
    g = load_graph(args.graph)
    spec = ClassSpec(args.n, args.m)
    members = enumerate_class(spec)
    outcome = certify_maximum(g, members, order=args.order, collect_all=args.full)
    payload = {
        "order": args.order,
        "verdict": "Maximum" if outcome.is_maximum else "Counterexample",
        "checked": outcome.checked,
        "counterexamples": [
            {"graph6": to_graph6(h), "result": res.to_json_dict()}
            for h, res in outcome.counterexamples
        ],
    }
    _dump(payload)
    if args.expect_maximum and not outcome.is_maximum:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_mc(args) -> int:
    g = load_graph(args.graph)
    p = _parse_rational(args.p)
    if args.do_cross_check:
        report = cross_check(g, args.k, p, args.trials, args.seed, args.sigmas)
        est = report.estimate
        _dump(
            {
                "mean": est.mean,
                "stderr": est.stderr,
                "trials": est.trials,
                "seed": est.seed,
                "exact": str(report.exact),
                "diff": report.diff,
                "verdict": "pass" if report.passed else "fail",
            }
        )
        return EXIT_OK if report.passed else EXIT_NEGATIVE
    est = estimate(g, args.k, p, args.trials, args.seed)
    _dump({"mean": est.mean, "stderr": est.stderr, "trials": est.trials, "seed": est.seed})
    return EXIT_OK


_COMMANDS = {
    "poly": _cmd_poly,
    "counts": _cmd_counts,
    "rel": _cmd_rel,
    "compare": _cmd_compare,
    "scan": _cmd_scan,
    "certify": _cmd_certify,
    "mc": _cmd_mc,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        _emit_error("usage", str(exc))
        return EXIT_USAGE
    except BudgetError as exc:
        _emit_error("budget", str(exc))
        return EXIT_BUDGET
    except (DisconnectedGraphError, TableConsistencyError) as exc:
        _emit_error("input", str(exc))
        return EXIT_USAGE
    except (GraphFormatError, DimensionMismatchError, ValueError, IndexError) as exc:
        _emit_error("parse", str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
