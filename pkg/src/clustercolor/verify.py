"""Coloring verifiers: monochromatic components, list conformance, and the
exhaustive two-coloring path oracle on small triangulated grids."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import BudgetExceeded
from .graph import Graph

DEFAULT_PATH_BUDGET = 10_000_000
ORACLE_MAX_SIZE = 4


class _DisjointSets:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


@dataclass
class ClusterReport:
    """Monochromatic components of a coloring, largest first is not assumed;
    components are ordered by their smallest vertex."""

    components: tuple[tuple[int, tuple[int, ...]], ...]
    max_size: int
    per_color_max: dict[int, int]

    def to_json(self) -> str:
        payload = {
            "components": [
                {"color": color, "vertices": list(verts)}
                for color, verts in self.components
            ],
            "max_size": self.max_size,
            "per_color_max": {str(c): s for c, s in sorted(self.per_color_max.items())},
        }
        return json.dumps(payload, indent=2)


def monochromatic_components(g: Graph, coloring: dict[int, int]) -> ClusterReport:
    """Partition the vertex set into maximal connected same-color pieces.

    The coloring must assign a color to every vertex of ``g``.
    """
    for v in g.vertices():
        if v not in coloring:
            raise ValueError(f"coloring missing vertex {v}")
    ds = _DisjointSets(g.n)
    for u, v in g.edges:
        if coloring[u] == coloring[v]:
            ds.union(u, v)
    groups: dict[int, list[int]] = {}
    for v in g.vertices():
        groups.setdefault(ds.find(v), []).append(v)
    components = sorted(
        (coloring[min(verts)], tuple(sorted(verts))) for verts in groups.values()
    )
    components.sort(key=lambda item: item[1][0])
    max_size = max((len(verts) for _, verts in components), default=0)
    per_color: dict[int, int] = {}
    for color, verts in components:
        per_color[color] = max(per_color.get(color, 0), len(verts))
    return ClusterReport(tuple(components), max_size, per_color)


def check_list_coloring(
    coloring: dict[int, int], lists: dict[int, frozenset[int]]
) -> tuple[bool, int | None]:
    """True iff every listed vertex is colored from its list."""
    for v in sorted(lists):
        if v not in coloring or coloring[v] not in lists[v]:
            return False, v
    return True, None


def longest_monochromatic_path(
    g: Graph, coloring: dict[int, int], budget: int = DEFAULT_PATH_BUDGET
) -> int:
    """Most vertices on a simple path whose vertices share one color.

    Plain DFS over simple paths with a step budget; exceeding it raises
    BudgetExceeded rather than returning a wrong answer.
    """
    for v in g.vertices():
        if v not in coloring:
            raise ValueError(f"coloring missing vertex {v}")
    best = 0
    steps = 0

    def dfs(v, visited, length):
        nonlocal best, steps
        best = max(best, length)
        for u in g.neighbors(v):
            if coloring[u] == coloring[v] and u not in visited:
                steps += 1
                if steps > budget:
                    raise BudgetExceeded("path search exceeded budget")
                visited.add(u)
                dfs(u, visited, length + 1)
                visited.remove(u)

    for v in g.vertices():
        dfs(v, {v}, 1)
    return best


def _has_path_of(adj, colors, target: int, n_vertices: int) -> bool:
    if target <= 1:
        return n_vertices > 0

    def dfs(v, visited, length):
        if length >= target:
            return True
        for u in adj[v]:
            if colors[u] == colors[v] and not visited & (1 << u):
                if dfs(u, visited | (1 << u), length + 1):
                    return True
        return False

    return any(dfs(v, 1 << v, 1) for v in range(n_vertices))


def trigrid_path_oracle(n: int) -> bool:
    """Exhaustively test whether every 2-coloring of the triangulated
    n-by-n grid contains a monochromatic path on at least n vertices.

    Only sizes up to 4 are feasible; larger n raises BudgetExceeded.
    """
    if n < 1:
        raise ValueError("grid size must be positive")
    if n > ORACLE_MAX_SIZE:
        raise BudgetExceeded(f"oracle limited to n <= {ORACLE_MAX_SIZE}")
    from .generators import gen_grid

    g, _, _ = gen_grid(n, triangulated=True)
    nn = g.n
    adj = [g.neighbors(v) for v in range(nn)]
    colors = [0] * nn
    for mask in range(1 << nn):
        for v in range(nn):
            colors[v] = (mask >> v) & 1
        if not _has_path_of(adj, colors, n, nn):
            return False
    return True
