"""Command-line interface.

Subcommands:
  count     tangent count and general-position verdict for a quadruple file
  classify  general-position analysis with failure details
  verify    check the bundled reference configurations against their known
            exact results (62 tangents, 40 tangents, transversal pair)
  search    random-search histogram of tangent counts
  stab      stab-graph / contributing-triple report for a quadruple file
  plot      orthographic SVG rendering of a quadruple and its tangents

Exit codes: 0 success, 1 verification failure, 2 input error, 3 I/O error.
All file inputs use the quadruple JSON schema
{"triangles": [[[x, y, z] x3] x4]} with integer, decimal-string, or "p/q"
coordinates.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exact import parse_rational
from .geometry import InputError, triangles_from_json


def _load_quadruple(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(str(exc), path) from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}", path) from None
    return triangles_from_json(data)


def cmd_count(args) -> int:
    from .counting import count_tangents

    triangles = _load_quadruple(args.input)
    report = count_tangents(triangles, exact_only=args.exact_only)
    print(f"n={report.n} in_T={'true' if report.verdict.in_T else 'false'}")
    if args.report:
        try:
            with open(args.report, "w") as fh:
                json.dump(report.to_json(), fh, indent=1)
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return 3
    return 0


def cmd_classify(args) -> int:
    from .counting import classify_general_position, partition_FI

    triangles = _load_quadruple(args.input)
    verdict = classify_general_position(triangles)
    f_count, i_count = partition_FI(triangles)
    print(f"in_T={'true' if verdict.in_T else 'false'}")
    print(f"f_count={f_count} i_count={i_count}")
    for failure in verdict.failures:
        extra = (
            f" with {list(failure.other_quadruple)}"
            if failure.other_quadruple
            else ""
        )
        print(
            f"failure quadruple={list(failure.edge_quadruple)} "
            f"reason={failure.reason.value}{extra}"
        )
    return 0


def cmd_verify(args) -> int:
    from .verify import run_verification

    failures = run_verification(args.which)
    return 0 if not failures else 1


def cmd_search(args) -> int:
    from .search import SearchConfig, run_search, save_top_configs, summarize

    cfg = SearchConfig(
        samples=args.samples,
        seed=args.seed,
        coord_bound=args.coord_bound,
        threads=args.threads,
        record_top=args.record_top,
    )
    hist = run_search(cfg, progress=not args.quiet)
    if args.out == "csv":
        sys.stdout.write(hist.to_csv())
    else:
        json.dump(summarize(hist), sys.stdout, indent=1, default=str)
        sys.stdout.write("\n")
    if args.save_top:
        try:
            paths = save_top_configs(cfg, hist, args.save_top)
        except OSError as exc:
            print(f"cannot save top configurations: {exc}", file=sys.stderr)
            return 3
        for p in paths:
            print(f"saved {p}", file=sys.stderr)
    return 0


def cmd_stab(args) -> int:
    from .stab import (
        AnalysisDegenerate,
        build_stab_graph,
        contributing_quadruple_count,
        contributing_triples,
        build_diagram,
        pencil_basis,
        triangles_disjoint,
    )
    from .geometry import PreconditionError

    triangles = _load_quadruple(args.input)
    graph = build_stab_graph(triangles)
    report: dict = {
        "stab_arcs": sorted(
            [list(edge) + [target] for edge, target in graph.arcs]
        ),
        "coplanar_pairs": sorted(
            [list(edge) + [target] for edge, target in graph.coplanar]
        ),
        "weights": {i: graph.weight(i) for i in range(1, 5)},
        "disjoint": all(
            triangles_disjoint(triangles[i], triangles[j])
            for i in range(4)
            for j in range(i + 1, 4)
        ),
    }
    diagrams = {}
    for i, tri in enumerate(triangles, start=1):
        others = [t for j, t in enumerate(triangles, start=1) if j != i]
        for edge in tri.edges:
            key = f"t{i}e{edge.label}"
            try:
                triples = contributing_triples(edge, others)
                diagrams[key] = sorted(triples)
            except AnalysisDegenerate as exc:
                diagrams[key] = f"degenerate: {exc}"
    report["contributing_triples"] = diagrams
    if report["disjoint"]:
        try:
            report["contributing_quadruples"] = contributing_quadruple_count(
                triangles
            )
        except (AnalysisDegenerate, PreconditionError) as exc:
            report["contributing_quadruples"] = f"degenerate: {exc}"
    json.dump(report, sys.stdout, indent=1, default=str)
    sys.stdout.write("\n")
    return 0


def cmd_plot(args) -> int:
    from .counting import count_tangents
    from .svgplot import DEFAULT_PROJECTION, render_svg

    triangles = _load_quadruple(args.input)
    projection = DEFAULT_PROJECTION
    if args.projection:
        parts = args.projection.split(",")
        if len(parts) != 3:
            raise InputError("need three comma-separated components", "--projection")
        try:
            projection = tuple(parse_rational(p.strip()) for p in parts)
        except ValueError as exc:
            raise InputError(str(exc), "--projection") from None
    report = count_tangents(triangles)
    svg = render_svg(triangles, [t.line for t in report.tangents], projection)
    try:
        with open(args.out, "w") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return 3
    print(f"wrote {args.out}: 4 triangles, {report.n} tangents")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tritangent",
        description="lines tangent to four triangles, exactly",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count common tangents of a quadruple")
    p.add_argument("input", help="quadruple JSON file")
    p.add_argument("--exact-only", action="store_true", dest="exact_only",
                   help="skip the float filter, pure exact arithmetic")
    p.add_argument("--report", help="write the full tangent report JSON here")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("classify", help="general-position analysis")
    p.add_argument("input")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check bundled reference results")
    p.add_argument("--which", choices=("t62", "t40", "lambda", "all"),
                   default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="random-search tangent histogram")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coord-bound", type=int, default=1000)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--record-top", type=int, default=4)
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.add_argument("--save-top", help="directory for the best quadruples")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("stab", help="stab graph and contributing triples")
    p.add_argument("input")
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("plot", help="SVG rendering of a quadruple")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    p.add_argument("--projection", help="view direction, e.g. 2,3,5")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
