"""Core graph, layering, and tree-decomposition types with validators.

Vertices are integers 0..n-1. Layers are indexed 1..m. Decomposition nodes
are integers 0..node_count-1; node 0 is the default root whenever a rooted
view is needed. All structures are immutable after construction, so they can
be shared freely between threads and reused across operations.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidDecomposition, InvalidLayering


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


def _jsonable(obj):
    if isinstance(obj, (frozenset, set)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    return obj


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of a single structural axiom check."""

    axiom: str
    passed: bool
    witness: object = None


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def to_json(self) -> str:
        payload = [
            {"axiom": c.axiom, "pass": c.passed, "witness": _jsonable(c.witness)}
            for c in self.checks
        ]
        return json.dumps(payload, indent=2)


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Duplicate edges collapse silently; self-loops and out-of-range endpoints
    are rejected. Adjacency lists are kept sorted so iteration order is
    deterministic everywhere.
    """

    __slots__ = ("n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            seen.add(_norm_edge(u, v))
        adj = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self._edges = frozenset(seen)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self._edges

    def vertices(self) -> range:
        return range(self.n)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with the given additional edges."""
        return Graph(self.n, list(self._edges) + list(extra))

    def induced(self, keep: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``keep``, relabeled to 0..k-1.

        Returns the subgraph and the sorted tuple of original ids; position
        in the tuple is the new id.
        """
        old = tuple(sorted(set(keep)))
        index = {v: i for i, v in enumerate(old)}
        sub_edges = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return Graph(len(old), sub_edges), old

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self._edges)})"


class Layering:
    """Ordered partition of a vertex set into layers, indexed from 1.

    Layers may be empty. A vertex may appear in at most one layer; the
    constructor rejects repeats outright since no graph could make them valid.
    """

    __slots__ = ("layers", "_index")

    def __init__(self, layers: Iterable[Iterable[int]]):
        packed = []
        index = {}
        for i, layer in enumerate(layers, start=1):
            row = tuple(sorted(set(layer)))
            for v in row:
                if v in index:
                    raise ValueError(f"vertex {v} appears in layers {index[v]} and {i}")
                index[v] = i
            packed.append(row)
        self.layers = tuple(packed)
        self._index = index

    @property
    def m(self) -> int:
        return len(self.layers)

    def layer(self, i: int) -> tuple[int, ...]:
        """Layer ``i`` (1-based); empty outside 1..m."""
        if 1 <= i <= len(self.layers):
            return self.layers[i - 1]
        return ()

    def layer_of(self, v: int) -> int:
        return self._index[v]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._index)

    def __eq__(self, other):
        return isinstance(other, Layering) and self.layers == other.layers

    def __hash__(self):
        return hash(self.layers)

    def __repr__(self):
        return f"Layering(m={self.m}, n={len(self._index)})"


class TreeDecomposition:
    """Tree of bags over a host graph's vertices.

    The node set is 0..node_count-1; ``edges`` holds unordered node pairs.
    Whether the structure actually satisfies the decomposition axioms for a
    given graph is the validator's business, not the constructor's.
    """

    __slots__ = ("bags", "edges", "root", "_adj")

    def __init__(
        self,
        bags: Iterable[Iterable[int]],
        edges: Iterable[tuple[int, int]] = (),
        root: int = 0,
    ):
        self.bags = tuple(frozenset(b) for b in bags)
        nn = len(self.bags)
        if nn == 0:
            raise ValueError("a tree-decomposition needs at least one node")
        seen = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at node {a}")
            if not (0 <= a < nn and 0 <= b < nn):
                raise ValueError(f"tree edge ({a}, {b}) out of range")
            seen.add(_norm_edge(a, b))
        adj = [[] for _ in range(nn)]
        for a, b in seen:
            adj[a].append(b)
            adj[b].append(a)
        if not (0 <= root < nn):
            raise ValueError(f"root {root} out of range")
        self.edges = frozenset(seen)
        self.root = root
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def node_count(self) -> int:
        return len(self.bags)

    def node_neighbors(self, t: int) -> tuple[int, ...]:
        return self._adj[t]

    def width(self) -> int:
        """Largest bag size minus one (-1 when every bag is empty)."""
        return max((len(b) for b in self.bags), default=0) - 1

    def is_tree(self) -> bool:
        nn = self.node_count
        if len(self.edges) != nn - 1:
            return False
        seen = {0}
        queue = deque([0])
        while queue:
            t = queue.popleft()
            for u in self._adj[t]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == nn

    def nodes_containing(self, v: int) -> tuple[int, ...]:
        return tuple(t for t, bag in enumerate(self.bags) if v in bag)

    def depths(self, root: int | None = None) -> list[int]:
        """BFS depth of every node from ``root`` (default: stored root)."""
        r = self.root if root is None else root
        depth = [-1] * self.node_count
        depth[r] = 0
        queue = deque([r])
        while queue:
            t = queue.popleft()
            for u in self._adj[t]:
                if depth[u] < 0:
                    depth[u] = depth[t] + 1
                    queue.append(u)
        return depth

    def __eq__(self, other):
        return (
            isinstance(other, TreeDecomposition)
            and self.bags == other.bags
            and self.edges == other.edges
            and self.root == other.root
        )

    def __hash__(self):
        return hash((self.bags, self.edges, self.root))

    def __repr__(self):
        return f"TreeDecomposition(nodes={self.node_count}, width={self.width()})"


@dataclass(frozen=True)
class LayeredTreeDecomposition:
    """A tree-decomposition together with a layering of the same graph."""

    td: TreeDecomposition
    layering: Layering

    def layered_width_raw(self) -> int:
        """max over (bag, layer) of the intersection size, without validation."""
        best = 0
        for bag in self.td.bags:
            per_layer: dict[int, int] = {}
            for v in bag:
                i = self.layering._index.get(v)
                if i is not None:
                    per_layer[i] = per_layer.get(i, 0) + 1
            if per_layer:
                best = max(best, max(per_layer.values()))
        return best


def validate_layering(g: Graph, ly: Layering) -> ValidationReport:
    """Check the partition and consecutive-layer axioms of a layering."""
    checks = []

    missing = next((v for v in g.vertices() if v not in ly._index), None)
    stray = next((v for v in sorted(ly._index) if not 0 <= v < g.n), None)
    partition_ok = missing is None and stray is None
    checks.append(
        AxiomCheck("partition", partition_ok, missing if missing is not None else stray)
    )

    bad_edge = None
    for u, v in sorted(g.edges):
        lu = ly._index.get(u)
        lv = ly._index.get(v)
        if lu is None or lv is None:
            continue
        if abs(lu - lv) > 1:
            bad_edge = (u, v)
            break
    checks.append(AxiomCheck("edge-span", bad_edge is None, bad_edge))
    return ValidationReport(tuple(checks))


def validate_tree_decomposition(g: Graph, td: TreeDecomposition) -> ValidationReport:
    """Check tree shape, coverage, and connectivity axioms against ``g``."""
    checks = []
    checks.append(AxiomCheck("tree", td.is_tree(), None))

    stray = None
    for t, bag in enumerate(td.bags):
        bad = next((v for v in sorted(bag) if not 0 <= v < g.n), None)
        if bad is not None:
            stray = (t, bad)
            break
    checks.append(AxiomCheck("bag-contents", stray is None, stray))

    covered = set()
    for bag in td.bags:
        covered.update(bag)
    missing = next((v for v in g.vertices() if v not in covered), None)
    checks.append(AxiomCheck("vertex-coverage", missing is None, missing))

    bad_edge = None
    for u, v in sorted(g.edges):
        if not any(u in bag and v in bag for bag in td.bags):
            bad_edge = (u, v)
            break
    checks.append(AxiomCheck("edge-coverage", bad_edge is None, bad_edge))

    # Each vertex's node set must induce a connected subtree.
    bad_vertex = None
    holders: dict[int, list[int]] = {}
    for t, bag in enumerate(td.bags):
        for v in bag:
            holders.setdefault(v, []).append(t)
    for v in sorted(holders):
        nodes = holders[v]
        if len(nodes) <= 1:
            continue
        node_set = set(nodes)
        seen = {nodes[0]}
        queue = deque([nodes[0]])
        while queue:
            t = queue.popleft()
            for u in td.node_neighbors(t):
                if u in node_set and u not in seen:
                    seen.add(u)
                    queue.append(u)
        if len(seen) != len(node_set):
            bad_vertex = v
            break
    checks.append(AxiomCheck("connectivity", bad_vertex is None, bad_vertex))
    return ValidationReport(tuple(checks))


def layered_width(ltd: LayeredTreeDecomposition, g: Graph | None = None) -> int:
    """Layered width of a layered tree-decomposition.

    When ``g`` is supplied both components are validated first and an invalid
    input raises instead of producing a meaningless number.
    """
    if g is not None:
        rep = validate_tree_decomposition(g, ltd.td)
        if not rep.ok:
            raise InvalidDecomposition(rep.failures()[0])
        rep = validate_layering(g, ltd.layering)
        if not rep.ok:
            raise InvalidLayering(rep.failures()[0])
    return ltd.layered_width_raw()


def bfs_layering(g: Graph, roots: Iterable[int]) -> Layering:
    """Layer ``g`` by BFS distance from ``roots``.

    Vertices unreachable from the roots are grouped by component; each extra
    component is layered from its minimum-id vertex and appended after an
    empty separator layer, which keeps the layering axiom intact.
    """
    root_list = sorted(set(roots))
    if not root_list:
        raise ValueError("roots must be nonempty")
    for r in root_list:
        if not 0 <= r < g.n:
            raise ValueError(f"root {r} out of range")

    def bfs(sources):
        dist = {v: 0 for v in sources}
        queue = deque(sources)
        rows = [list(sources)]
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    if dist[u] == len(rows):
                        rows.append([])
                    rows[dist[u]].append(u)
                    queue.append(u)
        return rows, set(dist)

    layers, seen = bfs(root_list)
    remaining = [v for v in g.vertices() if v not in seen]
    while remaining:
        start = remaining[0]
        rows, comp = bfs([start])
        layers.append([])
        layers.extend(rows)
        remaining = [v for v in remaining if v not in comp]
    return Layering(layers)
