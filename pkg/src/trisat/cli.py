"""Command-line surface: construct, verify, sat, formula, table.

Machine-readable results go to standard output (JSON, or graph data for
``construct``); human-facing summaries go to standard error.  Exit codes:
0 success (for ``verify``: saturated), 1 verification refuted, 2 usage or
I/O errors.  On error standard output carries at most one JSON error
object.  ``TRISAT_THREADS`` caps the exact-search worker count.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions
from .containment import ContainmentError
from .formulas import FormulaError, evaluate
from .graphs import GraphError
from .patterns import PatternError, PatternSpec
from .search import SearchError, enumerate_optima, sat_exact, sat_exhaustive, sat_greedy
from .serialization import FormatError, deserialize, serialize
from .verifier import VerifierError, is_saturated

_USER_ERRORS = (GraphError, PatternError, ContainmentError, FormatError,
                FormulaError, SearchError, VerifierError,
                constructions.ConstructionError, OSError, ValueError)


class _CliError(Exception):
    pass


def _parse_triple(text: str, what: str) -> tuple[int, int, int]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise _CliError(f"{what} must be three comma-separated integers, got {text!r}") from None
    if len(vals) != 3:
        raise _CliError(f"{what} must be three comma-separated integers, got {text!r}")
    return vals


def _parse_params(text: str) -> dict:
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise _CliError(f"expected k=v, got {item!r}")
        key, val = item.split("=", 1)
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise _CliError(f"parameter {key!r} must be an integer, got {val!r}") from None
    return out


def _emit_error(msg: str) -> int:
    print(json.dumps({"error": msg}))
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _cmd_construct(args) -> int:
    n1, n2, n3 = _parse_triple(args.n, "--n")
    g = constructions.build(args.construction, n1, n2, n3, l=args.l, m=args.m,
                            p=args.p, variant=args.variant, force=args.force)
    formula_value = ""
    match = ""
    try:
        rec = constructions.formula_for(args.construction, n1, n2, n3,
                                        l=args.l, m=args.m, p=args.p)
        formula_value = rec.value
        match = str(g.num_edges == rec.value).lower()
    except (FormulaError, constructions.ConstructionError):
        formula_value, match = "n/a", "n/a"
    data = serialize(g, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    print(f"edges={g.num_edges} formula={formula_value} match={match}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    host = _parse_triple(args.host, "--host")
    pat = PatternSpec(*_parse_triple(args.pattern, "--pattern"))
    with open(args.graph, "rb") as fh:
        g = deserialize(fh.read())
    report = is_saturated(g, host, pat)
    print(json.dumps(report.to_json_obj()))
    return 0 if report.is_saturated else 1


def _cmd_sat(args) -> int:
    host = _parse_triple(args.host, "--host")
    pat = PatternSpec(*_parse_triple(args.pattern, "--pattern"))
    if args.method == "exhaustive":
        result = sat_exhaustive(host, pat)
    elif args.method == "exact":
        if args.enumerate:
            result = enumerate_optima(host, pat, node_budget=args.budget)
        else:
            result = sat_exact(host, pat, node_budget=args.budget)
    else:
        result = sat_greedy(host, pat, trials=args.trials, seed=args.seed)
    obj = result.to_json_obj()
    if args.enumerate:
        paths = []
        for k, g in enumerate(result.witnesses):
            path = f"{args.witness_prefix}{k:03d}.edges"
            with open(path, "wb") as fh:
                fh.write(serialize(g, "edges"))
            paths.append(path)
        obj["witness_files"] = paths
    print(json.dumps(obj))
    return 0


def _cmd_formula(args) -> int:
    rec = evaluate(args.name, _parse_params(args.params))
    print(json.dumps(rec.to_json_obj()))
    return 0


def _cmd_table(args) -> int:
    from .experiments import ExperimentError, run_table
    try:
        with open(args.spec, "r", encoding="ascii") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise _CliError(f"spec {args.spec}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    try:
        text = run_table(obj)
    except ExperimentError as exc:
        raise _CliError(str(exc)) from None
    with open(args.out, "w", encoding="ascii", newline="") as fh:
        fh.write(text)
    print(f"wrote {args.out} ({text.count(chr(10)) - 1} rows)", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisat",
        description="Saturated subgraphs of complete tripartite hosts: "
                    "construction, verification, bounds, and exact search.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="generate a saturated-subgraph construction")
    c.add_argument("--construction", required=True, choices=constructions.CONSTRUCTION_NAMES)
    c.add_argument("--l", type=int, default=None)
    c.add_argument("--m", type=int, default=None)
    c.add_argument("--p", type=int, default=None)
    c.add_argument("--variant", type=int, default=1, help="part index for construction 2")
    c.add_argument("--n", required=True, help="host sizes N1,N2,N3")
    c.add_argument("--out", default=None, help="output file (default: stdout)")
    c.add_argument("--format", choices=("json", "edges"), default="edges")
    c.add_argument("--force", action="store_true",
                   help="build outside the guaranteed parameter regime")
    c.set_defaults(fn=_cmd_construct)

    v = sub.add_parser("verify", help="check that a graph is pattern-saturated in its host")
    v.add_argument("--graph", required=True, help="graph file (json or edge-list format)")
    v.add_argument("--host", required=True, help="host sizes N1,N2,N3")
    v.add_argument("--pattern", required=True, help="pattern class sizes L,M,P (P=0 for bipartite)")
    v.set_defaults(fn=_cmd_verify)

    s = sub.add_parser("sat", help="compute a saturation number")
    s.add_argument("--host", required=True, help="host sizes N1,N2,N3")
    s.add_argument("--pattern", required=True, help="pattern class sizes L,M,P")
    s.add_argument("--method", choices=("exact", "exhaustive", "greedy"), default="exact")
    s.add_argument("--trials", type=int, default=100, help="greedy trials")
    s.add_argument("--seed", type=int, default=0, help="greedy seed")
    s.add_argument("--budget", type=int, default=None, help="exact-search node budget")
    s.add_argument("--enumerate", action="store_true",
                   help="write the optima as numbered witness files "
                        "(deduplicated by isomorphism for the exact method)")
    s.add_argument("--witness-prefix", default="witness_",
                   help="file prefix for enumerated witnesses")
    s.set_defaults(fn=_cmd_sat)

    f = sub.add_parser("formula", help="evaluate one closed-form bound")
    f.add_argument("--name", required=True)
    f.add_argument("--params", required=True, help="comma-separated k=v pairs")
    f.set_defaults(fn=_cmd_formula)

    t = sub.add_parser("table", help="run a declarative experiment spec into a CSV")
    t.add_argument("--spec", required=True, help="experiment spec JSON file")
    t.add_argument("--out", required=True, help="output CSV path")
    t.set_defaults(fn=_cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        return _emit_error(str(exc))
    except _USER_ERRORS as exc:
        return _emit_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
