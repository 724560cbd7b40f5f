"""PACE-style text I/O for graphs, tree-decompositions, and layerings.

Graphs use the ``p tw`` header with one edge per line; decompositions use the
``s td`` header, ``b`` bag lines, and one tree edge per line. Vertices and
node ids are 1-based on disk and 0-based in memory. The layering sidecar is
one line per layer holding 1-based vertex ids; an empty line is an empty
layer.
"""

from __future__ import annotations

import os

from .errors import PaceParseError
from .graph import Graph, Layering, TreeDecomposition


def graph_to_pace(g: Graph) -> str:
    lines = [f"p tw {g.n} {len(g.edges)}"]
    for u, v in sorted(g.edges):
        lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def pace_to_graph(text: str) -> Graph:
    n = None
    m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "tw":
                raise PaceParseError("expected header 'p tw <n> <m>'", lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise PaceParseError("non-integer counts in header", lineno) from None
            if n < 0 or m < 0:
                raise PaceParseError("negative counts in header", lineno)
            continue
        if len(fields) != 2:
            raise PaceParseError("expected edge line '<u> <v>'", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise PaceParseError("non-integer edge endpoint", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise PaceParseError(f"edge endpoint out of range 1..{n}", lineno)
        if u == v:
            raise PaceParseError("self-loop", lineno)
        edges.append((u - 1, v - 1))
    if n is None:
        raise PaceParseError("missing 'p tw' header", 1)
    return Graph(n, edges)


def td_to_pace(td: TreeDecomposition, n_vertices: int) -> str:
    width_plus = max((len(b) for b in td.bags), default=0)
    lines = [f"s td {td.node_count} {width_plus} {n_vertices}"]
    for t, bag in enumerate(td.bags):
        body = " ".join(str(v + 1) for v in sorted(bag))
        lines.append(f"b {t + 1} {body}".rstrip())
    for a, b in sorted(td.edges):
        lines.append(f"{a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def pace_to_td(text: str) -> TreeDecomposition:
    header = None
    bags: dict[int, frozenset[int]] = {}
    tree_edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 5 or fields[0] != "s" or fields[1] != "td":
                raise PaceParseError("expected header 's td <N> <w+1> <n>'", lineno)
            try:
                header = tuple(int(f) for f in fields[2:])
            except ValueError:
                raise PaceParseError("non-integer counts in header", lineno) from None
            if any(x < 0 for x in header):
                raise PaceParseError("negative counts in header", lineno)
            continue
        num_nodes, _, n = header
        if fields[0] == "b":
            if len(fields) < 2:
                raise PaceParseError("bag line missing id", lineno)
            try:
                bag_id = int(fields[1])
                verts = [int(f) for f in fields[2:]]
            except ValueError:
                raise PaceParseError("non-integer value in bag line", lineno) from None
            if not (1 <= bag_id <= num_nodes):
                raise PaceParseError(f"bag id out of range 1..{num_nodes}", lineno)
            if bag_id in bags:
                raise PaceParseError(f"duplicate bag id {bag_id}", lineno)
            for v in verts:
                if not (1 <= v <= n):
                    raise PaceParseError(
                        f"bag vertex {v} out of range 1..{n}", lineno
                    )
            bags[bag_id] = frozenset(v - 1 for v in verts)
        else:
            if len(fields) != 2:
                raise PaceParseError("expected tree edge line '<a> <b>'", lineno)
            try:
                a, b = int(fields[0]), int(fields[1])
            except ValueError:
                raise PaceParseError("non-integer tree edge", lineno) from None
            if not (1 <= a <= num_nodes and 1 <= b <= num_nodes):
                raise PaceParseError(f"tree edge out of range 1..{num_nodes}", lineno)
            tree_edges.append((a - 1, b - 1))
    if header is None:
        raise PaceParseError("missing 's td' header", 1)
    num_nodes = header[0]
    if num_nodes == 0:
        raise PaceParseError("decomposition must have at least one node", 1)
    all_bags = [bags.get(i, frozenset()) for i in range(1, num_nodes + 1)]
    return TreeDecomposition(all_bags, tree_edges)


def layering_to_text(ly: Layering) -> str:
    if not ly.layers:
        return ""
    lines = [" ".join(str(v + 1) for v in row) for row in ly.layers]
    return "\n".join(lines) + "\n"


def text_to_layering(text: str) -> Layering:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            rows.append(())
            continue
        try:
            verts = [int(f) for f in line.split()]
        except ValueError:
            raise PaceParseError("non-integer vertex id", lineno) from None
        for v in verts:
            if v < 1:
                raise PaceParseError(f"vertex id {v} must be positive", lineno)
        rows.append(tuple(v - 1 for v in verts))
    try:
        return Layering(rows)
    except ValueError as exc:
        raise PaceParseError(str(exc), len(rows)) from None


def _read(path: str | os.PathLike) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write(path: str | os.PathLike, text: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def read_graph(path: str | os.PathLike) -> Graph:
    return pace_to_graph(_read(path))


def write_graph(g: Graph, path: str | os.PathLike) -> None:
    _write(path, graph_to_pace(g))


def read_td(path: str | os.PathLike) -> TreeDecomposition:
    return pace_to_td(_read(path))


def write_td(td: TreeDecomposition, n_vertices: int, path: str | os.PathLike) -> None:
    _write(path, td_to_pace(td, n_vertices))


def read_layering(path: str | os.PathLike) -> Layering:
    return text_to_layering(_read(path))


def write_layering(ly: Layering, path: str | os.PathLike) -> None:
    _write(path, layering_to_text(ly))
