"""Command-line frontend.

Subcommands: ``gen`` writes graph/decomposition/layering files for the
built-in instance families, ``color3`` runs the clustered 3-coloring and
emits a JSON report plus a coloring file, ``bench`` times the pipeline
over a size sweep into a CSV table, and ``verify`` independently rechecks
a coloring file against a clustering limit and optional lists.

Coloring files hold one ``vertex color`` pair per line and list files one
``vertex color...`` row per vertex, both with the library's 0-based ids;
the PACE formats keep their own 1-based convention.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import asdict

from . import pace
from .errors import InvalidDecomposition, InvalidLayering, PaceParseError
from .generators import add_apex, gen_grid, gen_kst_instance, gen_path
from .graph import LayeredTreeDecomposition, TreeDecomposition
from .threecolor import three_color
from .verify import check_list_coloring, monochromatic_components

GEN_FAMILIES = ("grid", "trigrid", "kst", "apexed-grid", "path")
COLOR_FAMILIES = ("grid", "trigrid", "kst", "path")
BENCH_FAMILIES = ("grid", "trigrid", "path")


def _build_instance(family, n, s, t):
    """Graph plus certified layered decomposition for a colorable family."""
    if family == "grid":
        return gen_grid(n, triangulated=False)
    if family == "trigrid":
        return gen_grid(n, triangulated=True)
    if family == "path":
        return gen_path(n)
    if family == "kst":
        g, ltd, delta = gen_kst_instance(s, t)
        return g, ltd, delta
    raise ValueError(f"unknown family {family!r}")


def cmd_gen(args) -> int:
    if args.family == "apexed-grid":
        base, ltd, _ = gen_grid(args.n, triangulated=False)
        g, apexes = add_apex(base, args.apex_count)
        # Apexes join every bag, which keeps the decomposition valid for
        # the augmented graph; the layering covers only the grid part.
        td = TreeDecomposition(
            [bag | apexes for bag in ltd.td.bags], ltd.td.edges, ltd.td.root
        )
        layering = ltd.layering
    else:
        g, ltd, _ = _build_instance(args.family, args.n, args.s, args.t)
        td = ltd.td
        layering = ltd.layering
    paths = {
        "graph": f"{args.out}.gr",
        "decomposition": f"{args.out}.td",
        "layering": f"{args.out}.layers",
    }
    pace.write_graph(g, paths["graph"])
    pace.write_td(td, g.n, paths["decomposition"])
    pace.write_layering(layering, paths["layering"])
    summary = {
        "command": "gen",
        "family": args.family,
        "n": args.n,
        "seed": args.seed,
        "vertices": g.n,
        "edges": len(g.edges),
        "layers": layering.m,
        "files": paths,
    }
    if args.format == "json":
        print(json.dumps(summary, indent=2, sort_keys=True))
    else:
        print(
            f"wrote {args.family} instance: {g.n} vertices, "
            f"{len(g.edges)} edges, {layering.m} layers"
        )
        for name in sorted(paths):
            print(f"  {name}: {paths[name]}")
    return 0


def _load_files(gr_path, td_path, layers_path):
    g = pace.read_graph(gr_path)
    td = pace.read_td(td_path)
    layering = pace.read_layering(layers_path)
    return g, LayeredTreeDecomposition(td, layering)


def cmd_color3(args) -> int:
    from_files = args.gr is not None or args.td is not None or args.layers is not None
    if from_files and args.family is not None:
        raise ValueError("give either input files or a generator family, not both")
    if from_files:
        if not (args.gr and args.td and args.layers):
            raise ValueError("file input needs --gr, --td, and --layers together")
        g, ltd = _load_files(args.gr, args.td, args.layers)
    elif args.family is not None:
        g, ltd, _ = _build_instance(args.family, args.n, args.s, args.t)
    else:
        raise ValueError("no input: give --gr/--td/--layers or --family")

    delta = args.delta if args.delta is not None else max(g.max_degree(), 1)
    result = three_color(
        g, ltd, delta, width=args.width, cluster_factor=args.cluster_factor
    )

    coloring_path = f"{args.out}.coloring"
    with open(coloring_path, "w") as fh:
        for v in sorted(result.coloring):
            fh.write(f"{v} {result.coloring[v]}\n")

    detail = monochromatic_components(g, result.coloring)
    report = {
        "command": "color3",
        "seed": args.seed,
        "vertices": g.n,
        "edges": len(g.edges),
        "layers": ltd.layering.m,
        "width": result.constants.width,
        "delta": result.constants.degree,
        "cluster_factor": result.constants.cluster_factor,
        "clustering": result.clustering,
        "bound": result.constants.g,
        "constants": asdict(result.constants),
        "per_color_max": {str(c): m for c, m in sorted(detail.per_color_max.items())},
        "stages": {
            "stage2_fake_edges": len(result.stage2_pairs),
            "stage3_fake_edges": len(result.stage3_pairs),
        },
        "colors": {str(v): result.coloring[v] for v in sorted(result.coloring)},
        "coloring_file": coloring_path,
    }
    report_path = f"{args.out}.report.json"
    with open(report_path, "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(
            f"clustering {result.clustering} (bound {result.constants.g}) "
            f"over {g.n} vertices"
        )
        print(f"  report: {report_path}")
        print(f"  coloring: {coloring_path}")
    return 0


def cmd_bench(args) -> int:
    rows = []
    for size in args.sizes:
        g, ltd, delta = _build_instance(args.family, size, args.s, args.t)
        start = time.perf_counter()
        result = three_color(g, ltd, delta, cluster_factor=args.cluster_factor)
        elapsed = time.perf_counter() - start
        rows.append(
            {
                "size": size,
                "clustering": result.clustering,
                "bound": result.constants.g,
                "runtime": f"{elapsed:.3f}",
            }
        )
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=["size", "clustering", "bound", "runtime"])
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return 0


def _read_coloring(path: str, n: int) -> dict[int, int]:
    coloring: dict[int, int] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise PaceParseError("expected 'vertex color'", lineno)
            try:
                v, c = int(parts[0]), int(parts[1])
            except ValueError:
                raise PaceParseError("expected two integers", lineno) from None
            if not 0 <= v < n:
                raise PaceParseError(f"vertex {v} out of range", lineno)
            if v in coloring:
                raise PaceParseError(f"vertex {v} colored twice", lineno)
            coloring[v] = c
    for v in range(n):
        if v not in coloring:
            raise ValueError(f"coloring file is missing vertex {v}")
    return coloring


def _read_lists(path: str, n: int) -> dict[int, frozenset[int]]:
    lists: dict[int, frozenset[int]] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            try:
                values = [int(p) for p in parts]
            except ValueError:
                raise PaceParseError("expected integers", lineno) from None
            v, colors = values[0], values[1:]
            if not 0 <= v < n:
                raise PaceParseError(f"vertex {v} out of range", lineno)
            if not colors:
                raise PaceParseError(f"vertex {v} has an empty list", lineno)
            if v in lists:
                raise PaceParseError(f"vertex {v} listed twice", lineno)
            lists[v] = frozenset(colors)
    return lists


def cmd_verify(args) -> int:
    g = pace.read_graph(args.gr)
    coloring = _read_coloring(args.coloring, g.n)
    report = monochromatic_components(g, coloring)
    clustering_ok = report.max_size <= args.k
    lists_ok = True
    list_witness = None
    if args.lists:
        lists = _read_lists(args.lists, g.n)
        lists_ok, list_witness = check_list_coloring(coloring, lists)
    detail = {
        "command": "verify",
        "vertices": g.n,
        "clustering": report.max_size,
        "k": args.k,
        "clustering_ok": clustering_ok,
        "lists_ok": lists_ok,
        "list_witness": list_witness,
        "per_color_max": {str(c): m for c, m in sorted(report.per_color_max.items())},
        "ok": clustering_ok and lists_ok,
    }
    print(json.dumps(detail, indent=2, sort_keys=True))
    return 0 if detail["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clustercolor",
        description="Clustered colorings of graphs with layered tree decompositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0, help="recorded RNG seed")
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="stdout format"
        )

    p_gen = sub.add_parser("gen", help="generate an instance family")
    p_gen.add_argument("family", choices=GEN_FAMILIES)
    p_gen.add_argument("--n", type=int, default=10, help="side length / path length")
    p_gen.add_argument("--s", type=int, default=2, help="small side for kst")
    p_gen.add_argument("--t", type=int, default=3, help="large side for kst")
    p_gen.add_argument("--apex-count", type=int, default=1)
    p_gen.add_argument("--out", required=True, help="output path prefix")
    common(p_gen)
    p_gen.set_defaults(func=cmd_gen)

    p_color = sub.add_parser("color3", help="run the clustered 3-coloring")
    p_color.add_argument("--gr", help="PACE graph file")
    p_color.add_argument("--td", help="PACE tree-decomposition file")
    p_color.add_argument("--layers", help="layering sidecar file")
    p_color.add_argument("--family", choices=COLOR_FAMILIES)
    p_color.add_argument("--n", type=int, default=10)
    p_color.add_argument("--s", type=int, default=2)
    p_color.add_argument("--t", type=int, default=3)
    p_color.add_argument("--delta", type=int, help="declared degree bound")
    p_color.add_argument("--width", type=int, help="declared layered width")
    p_color.add_argument(
        "--cluster-factor", type=int, help="override the per-stage clustering factor"
    )
    p_color.add_argument("--out", required=True, help="output path prefix")
    common(p_color)
    p_color.set_defaults(func=cmd_color3)

    p_bench = sub.add_parser("bench", help="time the pipeline over a size sweep")
    p_bench.add_argument("--family", choices=BENCH_FAMILIES, default="trigrid")
    p_bench.add_argument(
        "--sizes",
        type=lambda text: [int(x) for x in text.split(",") if x],
        default=[10, 20, 30, 40],
        help="comma-separated sizes",
    )
    p_bench.add_argument("--s", type=int, default=2)
    p_bench.add_argument("--t", type=int, default=3)
    p_bench.add_argument("--cluster-factor", type=int)
    p_bench.add_argument("--out", help="CSV path (default stdout)")
    common(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    p_verify = sub.add_parser("verify", help="recheck a coloring file")
    p_verify.add_argument("--gr", required=True, help="PACE graph file")
    p_verify.add_argument("--coloring", required=True, help="vertex color per line")
    p_verify.add_argument("--lists", help="optional vertex color... per line")
    p_verify.add_argument("--k", type=int, required=True, help="clustering limit")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PaceParseError, InvalidDecomposition, InvalidLayering) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
