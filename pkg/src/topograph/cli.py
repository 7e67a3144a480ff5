"""Command line interface.

Subcommands:
  mu      Markov fraction (and path, Markov number) at a coordinate
  triple  Markov triple at a tree path
  cohn    Cohn matrix, index, and trace/3 at a coordinate
  cf      word, periodization, or rational companion at a coordinate
  tree    enumerate one of the six trees to JSON, DOT, or CSV
  verify  run cross-verification suites

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage or parse error.  Tree and verify depths are capped (default 12,
override with --max-depth or TOPOGRAPH_MAX_DEPTH, hard ceiling 24).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cftree import (
    format_qi,
    left_companion,
    markov_cf,
    markov_irrationality,
    periodic_value,
)
from .cohn import cohn_at, cohn_index, trace_map
from .errors import TopographError
from .export import TREE_KINDS, build_export, render
from .markov import markov_fraction, markov_triple_at
from .rational import (
    cf_eval,
    format_cf_word,
    format_fraction,
    format_mat2,
    parse_fraction,
)
from .tree import HARD_DEPTH_CAP, format_path, locate, parse_path
from .verify import DEFAULT_A_VALUES, SUITES, format_report, run_suites

DEFAULT_CLI_DEPTH_CAP = 12
ENV_DEPTH_CAP = "TOPOGRAPH_MAX_DEPTH"


def _depth_cap(args) -> int:
    cap = DEFAULT_CLI_DEPTH_CAP
    env = os.environ.get(ENV_DEPTH_CAP)
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            raise TopographError(f"{ENV_DEPTH_CAP} must be an integer, got {env!r}")
    if getattr(args, "max_depth", None) is not None:
        cap = args.max_depth
    return min(cap, HARD_DEPTH_CAP)


def _print_payload(payload: dict, as_json: bool):
    if as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ": ")))
    else:
        for key, value in payload.items():
            print(f"{key} = {value}")


# ============================================================
# subcommands
# ============================================================

def cmd_mu(args) -> int:
    t = parse_fraction(args.coordinate)
    value = markov_fraction(t)
    path = format_path(locate(t)) if 0 < t < 1 else "boundary"
    _print_payload({
        "coordinate": format_fraction(t),
        "value": format_fraction(value),
        "path": path,
        "markov_number": str(value.denominator),
    }, args.format == "json")
    return 0


def cmd_triple(args) -> int:
    path = parse_path(args.path)
    triple = markov_triple_at(path)
    _print_payload({
        "path": format_path(path),
        "triple": f"({triple.x}, {triple.y}, {triple.z})",
    }, args.format == "json")
    return 0


def cmd_cohn(args) -> int:
    t = parse_fraction(args.coordinate)
    c = cohn_at(t, args.a)
    _print_payload({
        "coordinate": format_fraction(t),
        "a": str(args.a),
        "matrix": format_mat2(c.m),
        "index": format_fraction(cohn_index(c)),
        "markov_number": str(trace_map(c)),
    }, args.format == "json")
    return 0


def cmd_cf(args) -> int:
    t = parse_fraction(args.coordinate)
    word = markov_cf(t)
    payload = {"coordinate": format_fraction(t)}
    if args.mode == "word":
        payload["word"] = format_cf_word(word)
        payload["value"] = format_fraction(cf_eval(word))
    elif args.mode == "periodic":
        payload["word"] = format_cf_word(word, periodic=True)
        payload["value"] = format_qi(periodic_value(word))
    else:
        payload["m"] = str(args.m)
        payload["companion"] = format_fraction(left_companion(t, args.m))
        payload["limit"] = format_qi(markov_irrationality(markov_fraction(t)))
    _print_payload(payload, args.format == "json")
    return 0


def cmd_tree(args) -> int:
    cap = _depth_cap(args)
    if args.depth > cap:
        raise TopographError(f"depth {args.depth} exceeds cap {cap}")
    export = build_export(args.kind, args.depth, args.a,
                          max_depth=cap, parallel=args.parallel)
    text = render(export, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    cap = _depth_cap(args)
    if args.depth > cap:
        raise TopographError(f"depth {args.depth} exceeds cap {cap}")
    names = list(SUITES) if args.suites == "all" else [
        s.strip() for s in args.suites.split(",") if s.strip()
    ]
    a_values = tuple(int(a) for a in args.a_values.split(","))
    reports = run_suites(names, args.depth, a_values, parallel=args.parallel)
    if args.format == "json":
        print(json.dumps([
            {
                "suite": r.suite,
                "depth": r.depth,
                "params": r.params,
                "checks": r.checks,
                "failures": r.failures,
                "first_counterexample": r.first_counterexample,
                "wall_time": round(r.wall_time, 6),
                "ok": r.ok,
            }
            for r in reports
        ], sort_keys=True, indent=1))
    else:
        for report in reports:
            print(format_report(report))
        print("overall: " + ("PASS" if all(r.ok for r in reports) else "FAIL"))
    return 0 if all(r.ok for r in reports) else 1


# ============================================================
# parser
# ============================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topograph",
        description="Exact arithmetic on the Conway topograph: Farey and Markov "
                    "fractions, Markov triples, Cohn matrices, and continued "
                    "fraction words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default=choices[0])

    p_mu = sub.add_parser("mu", help="Markov fraction at a coordinate in [0, 1]")
    p_mu.add_argument("coordinate", help="fraction like 1/2")
    add_format(p_mu)
    p_mu.set_defaults(func=cmd_mu)

    p_triple = sub.add_parser("triple", help="Markov triple at a tree path")
    p_triple.add_argument("path", help="word over L/R, or - for the root")
    add_format(p_triple)
    p_triple.set_defaults(func=cmd_triple)

    p_cohn = sub.add_parser("cohn", help="Cohn matrix at a coordinate")
    p_cohn.add_argument("coordinate", help="fraction like 1/2")
    p_cohn.add_argument("--a", type=int, default=0, help="matrix family parameter")
    add_format(p_cohn)
    p_cohn.set_defaults(func=cmd_cohn)

    p_cf = sub.add_parser("cf", help="continued fraction word at a coordinate")
    p_cf.add_argument("coordinate", help="fraction like 1/2")
    p_cf.add_argument("--mode", choices=("word", "periodic", "companion"),
                      default="word")
    p_cf.add_argument("--m", type=int, default=1,
                      help="repetition count for --mode companion")
    add_format(p_cf)
    p_cf.set_defaults(func=cmd_cf)

    p_tree = sub.add_parser("tree", help="enumerate a tree and serialize it")
    p_tree.add_argument("--kind", choices=TREE_KINDS, required=True)
    p_tree.add_argument("--depth", type=int, required=True)
    p_tree.add_argument("--a", type=int, default=0, help="Cohn parameter")
    add_format(p_tree, choices=("json", "dot", "csv"))
    p_tree.add_argument("--out", help="write to this file instead of stdout")
    p_tree.add_argument("--parallel", action="store_true",
                        help="enumerate root subtrees on worker threads")
    p_tree.add_argument("--max-depth", type=int, default=None,
                        help=f"raise the depth cap (hard ceiling {HARD_DEPTH_CAP})")
    p_tree.set_defaults(func=cmd_tree)

    p_verify = sub.add_parser("verify", help="run cross-verification suites")
    p_verify.add_argument("--suites", default="all",
                          help="comma-separated suite names, or 'all'; "
                               f"available: {', '.join(SUITES)}")
    p_verify.add_argument("--depth", type=int, default=8)
    p_verify.add_argument("--a-values", default=",".join(str(a) for a in DEFAULT_A_VALUES),
                          help="comma-separated Cohn parameters for the index suite")
    add_format(p_verify)
    p_verify.add_argument("--parallel", action="store_true")
    p_verify.add_argument("--max-depth", type=int, default=None,
                          help=f"raise the depth cap (hard ceiling {HARD_DEPTH_CAP})")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TopographError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
