"""Command-line front end.

    hrg analyze GRAPH [--bounds] [--spectral] [--format json|text]
    hrg construct (--torus N M | --wl P R L | --complement-of FILE | --product FILE FILE...
                   | --p-family K R1 R2 R3 [--p1 M ...] [--p2 N M ...]) [--out-format graph6|edgelist]
    hrg export-dot GRAPH [--root U]

GRAPH is a path or ``-`` for stdin, in graph6 or the plain edge-list format.
Exit codes: 0 success, 1 precondition failure, 2 parse or I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from hrg.classify import bound_profile, is_distance_regular, is_strongly_regular, theorem1_classify
from hrg.errors import HrgError, ParseError, PreconditionError
from hrg.families import p_family_member, prop_a3_product, theorem41_construct, torus
from hrg.graph import INF, Graph, distances, parse_graph, to_edge_list_text, to_graph6
from hrg.refinement import analyze_hrg, rooted_coarsest_partition
from hrg.schemes import wl_graph
from hrg.spectral import appendix_b_check, eigendecompose

EXIT_OK, EXIT_PRECONDITION, EXIT_PARSE = 0, 1, 2
FLOAT_DIGITS = 12
DOT_PALETTE = ("#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
               "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f")


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"{path}: {e}") from e


def load_graph(path: str) -> Graph:
    text = _read(path)
    try:
        return parse_graph(text)
    except HrgError as e:
        raise InputError(f"{path}: {e}") from e


def _clean(obj):
    """Round floats to a fixed number of significant digits for reproducible output."""
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf"
        return float(f"{obj:.{FLOAT_DIGITS}g}")
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def spectral_tolerance() -> float:
    return float(os.environ.get("HRG_TOL", "1e-9"))


def build_report(g: Graph, source: str, bounds: bool = False, spectral: bool = False) -> dict:
    dd = distances(g)
    report: dict = {
        "input": source,
        "graph": {
            "n": g.n,
            "edges": g.num_edges,
            "valency": g.valency(),
            "diameter": "inf" if dd.diameter == INF else dd.diameter,
        },
    }
    failures: dict[str, str] = {}
    hrg = None
    if g.valency() is None:
        failures["hrg"] = "not-regular"
    else:
        hrg = analyze_hrg(g, dd)
        report["hrg"] = {**hrg.to_dict(), "flag": hrg.flag}

    usable = hrg is not None and hrg.is_hrg
    if not usable:
        failures.setdefault("hrg", hrg.flag if hrg is not None and hrg.flag else "not-hrg")
    if usable and dd.connected:
        rec = theorem1_classify(g, hrg, dd)
        ia = is_distance_regular(g, dd)
        srg = is_strongly_regular(g)
        report["classification"] = {
            **rec.to_dict(),
            "intersection_array": {"b": list(ia.b), "c": list(ia.c)} if ia else None,
            "srg": list(srg) if srg else None,
        }
    elif usable:
        failures["classification"] = "disconnected"

    if bounds:
        if usable and dd.connected:
            report["bounds"] = bound_profile(g, hrg, dd).to_dict()
        else:
            failures["bounds"] = "disconnected" if usable else "not-hrg"
    if spectral:
        spec = eigendecompose(g, tol=spectral_tolerance())
        section = spec.to_dict()
        if usable and dd.connected:
            section["checks"] = appendix_b_check(g, hrg, spec, tol=spectral_tolerance()).to_dict()
        else:
            failures["spectral.checks"] = "disconnected" if usable else "not-hrg"
        report["spectral"] = section
    report["failures"] = failures
    return _clean(report)


def render_text(report: dict) -> str:
    lines = []
    gr = report["graph"]
    lines.append(f"input      {report['input']}")
    lines.append(f"graph      n={gr['n']} edges={gr['edges']} valency={gr['valency']} diameter={gr['diameter']}")
    if "hrg" in report:
        h = report["hrg"]
        lines.append(f"hrg        {h['is_hrg']}  index={h['index']}")
        if h["cam"]:
            lines.append(f"cells      {h['cell_sizes']}  S={h['s_sets']}")
            lines.extend("cam        " + " ".join(f"{x:>2}" for x in row) for row in h["cam"])
    if "classification" in report:
        c = report["classification"]
        lines.append(f"drg        by-index={c['drg_by_index']} direct={c['drg_direct']}  srg={c['srg']}")
    if "bounds" in report:
        b = report["bounds"]
        lines.append(f"bounds     b_max={b['b_max']} c_min={b['c_min']} c_max={b['c_max']}")
        lines.append(f"star       {b['star_holds']}  witness={b['star_witness']}")
    if "spectral" in report:
        s = report["spectral"]
        ev = ", ".join(f"{e['value']}^{e['multiplicity']}" for e in s["eigenvalues"])
        lines.append(f"spectrum   {ev}")
        if "checks" in s:
            lines.append("checks     " + " ".join(f"{k}={v}" for k, v in s["checks"].items()))
    for k, v in report["failures"].items():
        lines.append(f"failure    {k}: {v}")
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, root: int | None = None) -> str:
    lines = ["graph G {"]
    if root is not None:
        part = rooted_coarsest_partition(g, root)
        lines.append("  node [style=filled];")
        for v in range(g.n):
            color = DOT_PALETTE[part.cell_of[v] % len(DOT_PALETTE)]
            lines.append(f'  {v} [fillcolor="{color}"];')
    else:
        lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    report = build_report(g, args.graph, bounds=args.bounds, spectral=args.spectral)
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(report))
    return EXIT_OK


def construct_graph(args) -> Graph:
    if args.torus:
        return torus(*args.torus)
    if args.wl:
        return wl_graph(*args.wl)
    if args.complement_of:
        return theorem41_construct(load_graph(args.complement_of))
    if args.product:
        graphs = [load_graph(p) for p in args.product]
        if len(graphs) < 2:
            raise PreconditionError("--product needs at least two graphs")
        out = graphs[0]
        for h in graphs[1:]:
            out = prop_a3_product(out, h)
        return out
    k, r1, r2, r3 = args.p_family
    f1 = [(2, m) for m in args.p1] if args.p1 else [(2, 3)] * r2
    f2 = [tuple(nm) for nm in args.p2] if args.p2 else [(3, 4)] * r3
    return p_family_member(k, r1, r2, r3, f1, f2)


def cmd_construct(args) -> int:
    g = construct_graph(args)
    text = to_graph6(g) + "\n" if args.out_format == "graph6" else to_edge_list_text(g)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = load_graph(args.graph)
    if args.root is not None and not 0 <= args.root < g.n:
        raise PreconditionError(f"root {args.root} out of range 0..{g.n - 1}")
    sys.stdout.write(to_dot(g, args.root))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hrg", description="Highly-regular graph analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="CAM, index, classification, bounds and spectral checks")
    a.add_argument("graph", nargs="?", default="-")
    a.add_argument("--bounds", action="store_true")
    a.add_argument("--spectral", action="store_true")
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="build a graph from one of the families")
    fam = c.add_mutually_exclusive_group(required=True)
    fam.add_argument("--torus", nargs=2, type=int, metavar=("N", "M"))
    fam.add_argument("--wl", nargs=3, type=int, metavar=("P", "R", "L"))
    fam.add_argument("--complement-of", metavar="FILE")
    fam.add_argument("--product", nargs="+", metavar="FILE")
    fam.add_argument("--p-family", nargs=4, type=int, metavar=("K", "R1", "R2", "R3"))
    c.add_argument("--p1", type=int, action="append", metavar="M",
                   help="valency-3 factor T_{2,M} for --p-family (repeat r2 times)")
    c.add_argument("--p2", nargs=2, type=int, action="append", metavar=("N", "M"),
                   help="valency-4 factor T_{N,M} for --p-family (repeat r3 times)")
    c.add_argument("--out-format", choices=("graph6", "edgelist"), default="graph6")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    d = sub.add_parser("export-dot", help="Graphviz rendering, coloured by refinement cell")
    d.add_argument("graph", nargs="?", default="-")
    d.add_argument("--root", type=int)
    d.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError) as e:
        print(f"hrg: {e}", file=sys.stderr)
        return EXIT_PARSE
    except HrgError as e:
        print(f"hrg: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
