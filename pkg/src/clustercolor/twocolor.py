"""Two-coloring with bounded monochromatic components, and controlled
addition of edge groups to a graph together with its decomposition.

The colorer works from a rooted tree-decomposition: each vertex is anchored
at the shallowest node whose bag contains it, anchor depths are cut into
bands as long as the deepest bag-interval any single vertex spans, and bands
alternate between the two colors. Adjacent vertices then land in the same or
in adjacent bands, so components stay inside one band on path-shaped
decompositions. The clustering bound is verified after the fact and the
operation fails loudly when it does not hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque
from typing import Iterable

from .errors import (
    ClusteringBoundError,
    GroupBudgetError,
    InternalInvariantError,
    InvalidDecomposition,
)
from .graph import Graph, TreeDecomposition, validate_tree_decomposition
from .verify import monochromatic_components

# Multiplier on (w+1)*delta in the guaranteed clustering bound. Kept as a
# module constant so callers can see and override the slack applied on top
# of the band construction.
DEFAULT_CLUSTER_FACTOR = 4


def cluster_bound(width: int, degree: int, cluster_factor: int | None = None) -> int:
    """Guaranteed clustering bound for a width/degree pair."""
    cb = DEFAULT_CLUSTER_FACTOR if cluster_factor is None else cluster_factor
    return cb * (max(width, 0) + 1) * max(degree, 1)


def two_color_bounded_treewidth(
    g: Graph,
    td: TreeDecomposition,
    delta: int,
    cluster_factor: int | None = None,
) -> tuple[dict[int, int], int]:
    """Color ``g`` with colors {1, 2} so monochromatic components are small.

    Requires a valid decomposition of ``g`` and max degree at most ``delta``.
    Returns (coloring, measured clustering); the measured value is checked
    against cluster_bound(width, delta) and a violation raises
    ClusteringBoundError instead of returning an unbounded coloring.
    """
    if g.max_degree() > delta:
        raise ValueError(
            f"graph max degree {g.max_degree()} exceeds declared {delta}"
        )
    report = validate_tree_decomposition(g, td)
    if not report.ok:
        raise InvalidDecomposition(report.failures()[0])
    if g.n == 0:
        return {}, 0

    depth = td.depths()
    lo = [None] * g.n
    hi = [None] * g.n
    for t, bag in enumerate(td.bags):
        d = depth[t]
        for v in bag:
            if lo[v] is None or d < lo[v]:
                lo[v] = d
            if hi[v] is None or d > hi[v]:
                hi[v] = d
    band_len = max((hi[v] - lo[v] + 1 for v in range(g.n)), default=1)
    coloring = {v: 1 + (lo[v] // band_len) % 2 for v in range(g.n)}

    measured = monochromatic_components(g, coloring).max_size
    bound = cluster_bound(td.width(), delta, cluster_factor)
    if measured > bound:
        raise ClusteringBoundError("two-color", measured, bound)
    return coloring, measured


@dataclass(frozen=True)
class EdgeGroup:
    """A batch of vertex pairs to add, together with the tree region that
    absorbs their endpoints.

    ``nodes`` are the cover nodes whose bags contain the pair endpoints;
    they must lie inside ``subtree``, a connected set of decomposition nodes.
    """

    nodes: frozenset[int]
    subtree: frozenset[int]
    pairs: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class GroupBudget:
    """Per-call limits: pairs per group, pair uses per vertex, and groups
    whose subtree may cover any single node."""

    max_pairs_per_group: int
    max_pair_uses_per_vertex: int
    max_groups_per_node: int


def _connected_in_tree(td: TreeDecomposition, nodes: frozenset[int]) -> bool:
    if not nodes:
        return False
    start = min(nodes)
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for u in td.node_neighbors(t):
            if u in nodes and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(nodes)


def enlarge_decomposition(
    g: Graph,
    td: TreeDecomposition,
    groups: Iterable[EdgeGroup],
    budget: GroupBudget,
) -> tuple[Graph, TreeDecomposition]:
    """Add the groups' pairs as edges and widen the decomposition to match.

    Every group's endpoints are poured into each bag of its subtree, which
    preserves all decomposition axioms. Under the budget (k pairs per group,
    d pair uses per vertex, h group subtrees per node) the width grows by at
    most 2*h*k and the max degree by at most d; both are re-checked on the
    output. Budget violations raise GroupBudgetError naming the field.
    """
    groups = list(groups)
    use_count: dict[int, int] = {}
    cover_count: dict[int, int] = {}
    for idx, group in enumerate(groups):
        if len(group.pairs) > budget.max_pairs_per_group:
            raise GroupBudgetError(
                "max_pairs_per_group",
                f"group {idx} has {len(group.pairs)} pairs",
            )
        if not group.pairs:
            continue
        if not group.nodes or not group.nodes <= group.subtree:
            raise GroupBudgetError(
                "group-structure", f"group {idx} cover nodes must lie in its subtree"
            )
        for t in group.subtree:
            if not 0 <= t < td.node_count:
                raise GroupBudgetError(
                    "group-structure", f"group {idx} node {t} out of range"
                )
        if not _connected_in_tree(td, group.subtree):
            raise GroupBudgetError(
                "group-structure", f"group {idx} subtree is not connected"
            )
        allowed = set()
        for t in group.nodes:
            allowed |= td.bags[t]
        for u, v in group.pairs:
            if u == v or not (0 <= u < g.n and 0 <= v < g.n):
                raise GroupBudgetError(
                    "group-structure", f"group {idx} has invalid pair ({u}, {v})"
                )
            if u not in allowed or v not in allowed:
                raise GroupBudgetError(
                    "group-structure",
                    f"group {idx} pair ({u}, {v}) outside its cover bags",
                )
            use_count[u] = use_count.get(u, 0) + 1
            use_count[v] = use_count.get(v, 0) + 1
        for t in group.subtree:
            cover_count[t] = cover_count.get(t, 0) + 1

    for v, c in sorted(use_count.items()):
        if c > budget.max_pair_uses_per_vertex:
            raise GroupBudgetError(
                "max_pair_uses_per_vertex", f"vertex {v} used by {c} pairs"
            )
    for t, c in sorted(cover_count.items()):
        if c > budget.max_groups_per_node:
            raise GroupBudgetError(
                "max_groups_per_node", f"node {t} covered by {c} group subtrees"
            )

    live = [grp for grp in groups if grp.pairs]
    if not live:
        return g, td

    all_pairs = [pair for grp in live for pair in grp.pairs]
    g2 = g.with_edges(all_pairs)
    new_bags = [set(bag) for bag in td.bags]
    for grp in live:
        endpoints = {v for pair in grp.pairs for v in pair}
        for t in grp.subtree:
            new_bags[t] |= endpoints
    td2 = TreeDecomposition(new_bags, td.edges, td.root)

    report = validate_tree_decomposition(g2, td2)
    if not report.ok:
        raise InternalInvariantError(
            f"enlarged decomposition invalid: {report.failures()[0]}"
        )
    h = budget.max_groups_per_node
    k = budget.max_pairs_per_group
    if td2.width() > td.width() + 2 * h * k:
        raise InternalInvariantError("enlarged width exceeds w + 2hk")
    if g2.max_degree() > g.max_degree() + budget.max_pair_uses_per_vertex:
        raise InternalInvariantError("enlarged degree exceeds delta + d")
    return g2, td2
