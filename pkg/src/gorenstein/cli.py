"""Command-line front end.

Thin adapters only: parse arguments and files, call the library, print
JSON (byte-deterministic: sorted keys, fixed separators) or DOT text.
Exit codes: 0 success/verdict, 1 verification mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import matroid, polytope
from .census import (
    CensusBounds,
    census_record,
    enumerate_census,
    format_report,
    verify_classification,
    verify_equivalence,
)
from .constructions import (
    GluingError,
    GluingSpec,
    decompose,
    delta_gluing,
    graph_from_json,
    trace_to_json,
)
from .criteria import is_gorenstein, weight_function
from .multigraph import GraphParseError, Multigraph

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=2)


def _print_json(obj) -> None:
    print(_dumps(obj))


def _to_dot(graph: Multigraph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(graph.n))
    lines.extend(f"  {e.u} -- {e.v};" for e in graph.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _print_graph(graph: Multigraph, fmt: str) -> None:
    if fmt == "dot":
        sys.stdout.write(_to_dot(graph))
    else:
        sys.stdout.write(graph.format())


def _load_graph(path: str) -> Multigraph:
    try:
        with open(path, encoding="utf-8") as fh:
            return Multigraph.parse(fh.read())
    except OSError as exc:
        print(f"error: {path}: {exc.strerror}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT) from exc


def _delta_max_override() -> int | None:
    raw = os.environ.get("GORENSTEIN_DELTA_MAX")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        print(f"error: GORENSTEIN_DELTA_MAX: not an integer: {raw!r}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT) from None
    if value < 2:
        print("error: GORENSTEIN_DELTA_MAX must be >= 2", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)
    return value


def _cmd_check(args) -> int:
    graph = _load_graph(args.file)
    if not graph.is_two_connected():
        _print_json({"gorenstein": False, "reason": "not 2-connected"})
        return EXIT_OK
    if args.oracle:
        point = polytope.gorenstein_oracle(graph, _delta_max_override())
        if point is None:
            _print_json({"gorenstein": False, "delta": None})
            return EXIT_OK
        _print_json(
            {
                "gorenstein": True,
                "delta": point.delta,
                "point": list(point.coordinates),
            }
        )
        return EXIT_OK
    verdict = is_gorenstein(graph)
    if verdict is None:
        _print_json({"gorenstein": False, "delta": None})
        return EXIT_OK
    delta, assignment = verdict
    _print_json(
        {
            "gorenstein": True,
            "delta": delta,
            "weights": {str(eid): w for eid, w in assignment.weights},
            "good_flats": [sorted(f.subset) for f in matroid.good_flats(graph)],
        }
    )
    return EXIT_OK


def _cmd_weights(args) -> int:
    graph = _load_graph(args.file)
    if not graph.is_two_connected():
        print("error: graph is not 2-connected", file=sys.stderr)
        return EXIT_INPUT
    assignment = weight_function(graph, args.delta)
    if assignment is None:
        print("none")
        return EXIT_OK
    _print_json(
        {"delta": args.delta, "weights": {str(eid): w for eid, w in assignment.weights}}
    )
    return EXIT_OK


def _cmd_facets(args) -> int:
    graph = _load_graph(args.file)
    if not graph.is_two_connected():
        print("error: graph is not 2-connected", file=sys.stderr)
        return EXIT_INPUT
    _print_json(polytope.polytope_to_json(polytope.build_polytope(graph)))
    return EXIT_OK


def _cmd_glue(args) -> int:
    try:
        with open(args.spec, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        print(f"error: {args.spec}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    except json.JSONDecodeError as exc:
        print(f"error: {args.spec}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        spec = GluingSpec(
            left=graph_from_json(data["left"]),
            left_parallel_class=frozenset(data["left_class"]),
            right=graph_from_json(data["right"]),
            right_parallel_class=frozenset(data["right_class"]),
            delta=data["delta"],
            flip=bool(data.get("flip", False)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: malformed gluing spec: {exc}", file=sys.stderr)
        return EXIT_INPUT
    result = delta_gluing(spec)
    _print_graph(result, args.format)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    graph = _load_graph(args.file)
    trace = decompose(graph, args.delta)
    if trace is None:
        print("none")
        return EXIT_OK
    _print_json(trace_to_json(trace))
    return EXIT_OK


def _bounds_from(args) -> CensusBounds:
    return CensusBounds(args.max_v, args.max_e, args.max_mult)


def _cmd_census(args) -> int:
    records = [census_record(g) for g in enumerate_census(_bounds_from(args))]
    _print_json(
        {
            "bounds": {
                "max_vertices": args.max_v,
                "max_edges": args.max_e,
                "max_multiplicity": args.max_mult,
            },
            "total": len(records),
            "graphs": [
                {
                    "canonical": [list(row) for row in r.graph.canonical_form],
                    "vertices": r.graph.n,
                    "edges": r.graph.m,
                    "delta": r.delta,
                    "good_flats": r.good_flat_count,
                    "facets": r.facet_count,
                }
                for r in records
            ],
        }
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    bounds = _bounds_from(args)
    if args.kind == "equivalence":
        report = verify_equivalence(bounds)
    else:
        report = verify_classification(args.delta, bounds)
    if args.table:
        sys.stdout.write(format_report(report))
    else:
        _print_json(report)
    return EXIT_OK if not report["mismatches"] else EXIT_MISMATCH


def _add_bounds(parser, defaults=(6, 10, 5)) -> None:
    parser.add_argument("--max-v", type=int, default=defaults[0])
    parser.add_argument("--max-e", type=int, default=defaults[1])
    parser.add_argument("--max-mult", type=int, default=defaults[2])


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gorenstein",
        description="Decide the Gorenstein property of 2-connected multigraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="Gorenstein verdict for a graph file")
    p.add_argument("file")
    p.add_argument(
        "--oracle", action="store_true", help="use the polyhedral oracle instead"
    )
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("weights", help="weight function at a dilation")
    p.add_argument("file")
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("facets", help="H-representation with reduced equations")
    p.add_argument("file")
    p.set_defaults(func=_cmd_facets)

    p = sub.add_parser("glue", help="apply a gluing spec (JSON file)")
    p.add_argument("spec")
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    p.set_defaults(func=_cmd_glue)

    p = sub.add_parser("decompose", help="construction trace from the seed")
    p.add_argument("file")
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("census", help="enumerate the census with verdicts")
    _add_bounds(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify", help="run a verification harness")
    p.add_argument("kind", choices=("equivalence", "classification"))
    p.add_argument("--delta", type=int, default=2)
    p.add_argument("--table", action="store_true", help="human-readable output")
    _add_bounds(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GluingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
