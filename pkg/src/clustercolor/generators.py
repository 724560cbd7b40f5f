"""Instance generators: grids, complete bipartite graphs, paths, apexed graphs.

Every generator that emits a decomposition also emits the layering it was
designed around, so the pair can be validated and fed straight into the
coloring pipeline.
"""

from __future__ import annotations

from .graph import Graph, Layering, LayeredTreeDecomposition, TreeDecomposition


def gen_grid(n: int, triangulated: bool = False):
    """n-by-n grid, optionally with one diagonal per cell.

    Rows become layers and bag j holds columns j and j+1, giving a path
    decomposition with layered width at most 2. Max degree is at most 4
    (plain) or 6 (triangulated).

    Returns (graph, layered tree-decomposition, max degree).
    """
    if n < 1:
        raise ValueError("grid size must be positive")

    def vid(r, c):
        return r * n + c

    edges = []
    for r in range(n):
        for c in range(n):
            if c + 1 < n:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < n:
                edges.append((vid(r, c), vid(r + 1, c)))
            if triangulated and r + 1 < n and c + 1 < n:
                edges.append((vid(r, c), vid(r + 1, c + 1)))
    g = Graph(n * n, edges)

    layers = [tuple(vid(r, c) for c in range(n)) for r in range(n)]
    if n == 1:
        bags = [frozenset({0})]
        tree_edges = []
    else:
        bags = [
            frozenset(vid(r, c) for r in range(n) for c in (j, j + 1))
            for j in range(n - 1)
        ]
        tree_edges = [(j, j + 1) for j in range(n - 2)]
    ltd = LayeredTreeDecomposition(
        TreeDecomposition(bags, tree_edges), Layering(layers)
    )
    return g, ltd, g.max_degree()


def gen_rect_grid(rows: int, cols: int):
    """rows-by-cols plain grid with a sliding-window path decomposition.

    The window moves one vertex at a time between adjacent columns, so the
    width is exactly ``rows`` (for cols >= 2). Columns become layers.

    Returns (graph, layered tree-decomposition, max degree).
    """
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")

    def vid(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    g = Graph(rows * cols, edges)

    layers = [tuple(vid(r, c) for r in range(rows)) for c in range(cols)]
    if cols == 1:
        bags = [frozenset(vid(r, 0) for r in range(rows))]
    else:
        bags = []
        for j in range(cols - 1):
            for i in range(rows):
                bag = {vid(r, j) for r in range(i, rows)}
                bag |= {vid(r, j + 1) for r in range(i + 1)}
                bags.append(frozenset(bag))
    tree_edges = [(t, t + 1) for t in range(len(bags) - 1)]
    ltd = LayeredTreeDecomposition(
        TreeDecomposition(bags, tree_edges), Layering(layers)
    )
    return g, ltd, g.max_degree()


def gen_path(n: int):
    """Path on n vertices with singleton layers and edge bags.

    Returns (graph, layered tree-decomposition, max degree).
    """
    if n < 1:
        raise ValueError("path length must be positive")
    g = Graph(n, [(i, i + 1) for i in range(n - 1)])
    layers = [(i,) for i in range(n)]
    if n == 1:
        bags = [frozenset({0})]
        tree_edges = []
    else:
        bags = [frozenset({i, i + 1}) for i in range(n - 1)]
        tree_edges = [(i, i + 1) for i in range(n - 2)]
    ltd = LayeredTreeDecomposition(
        TreeDecomposition(bags, tree_edges), Layering(layers)
    )
    return g, ltd, g.max_degree()


def gen_kst(s: int, t: int) -> Graph:
    """Complete bipartite graph with sides 0..s-1 and s..s+t-1."""
    if s < 1 or t < 1:
        raise ValueError("both sides must be nonempty")
    return Graph(s + t, [(a, s + b) for a in range(s) for b in range(t)])


def gen_kst_instance(s: int, t: int):
    """Complete bipartite graph plus a trivial one-bag decomposition.

    The two sides become the two layers, so the layered width equals
    max(s, t). Returns (graph, layered tree-decomposition, max degree).
    """
    g = gen_kst(s, t)
    ltd = LayeredTreeDecomposition(
        TreeDecomposition([frozenset(range(s + t))]),
        Layering([tuple(range(s)), tuple(range(s, s + t))]),
    )
    return g, ltd, g.max_degree()


def add_apex(g: Graph, count: int = 1) -> tuple[Graph, frozenset[int]]:
    """Add ``count`` vertices each adjacent to every original vertex.

    The new vertices are not adjacent to each other. Returns the new graph
    and the set of new vertex ids.
    """
    if count < 0:
        raise ValueError("apex count must be nonnegative")
    extra = [
        (v, g.n + a) for a in range(count) for v in range(g.n)
    ]
    g2 = Graph(g.n + count, list(g.edges) + extra)
    return g2, frozenset(range(g.n, g.n + count))
