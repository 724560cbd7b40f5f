"""Clustered 3-coloring of graphs with a layered tree decomposition.

Layers are split round-robin into three classes. Each class is two-colored
layer by layer over a restricted tree decomposition, with the second and
third classes first augmented by fake edges: for every small monochromatic
component of an earlier stage, all pairs of its neighbors in the target
layer become one edge group, so the later coloring cannot cut through such
a component's neighborhood. The class palettes {1,2}, {2,3}, {1,3} overlap
so that each color appears in only two classes, which caps the size of
every monochromatic component by a function of the layered width and the
maximum degree alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ClusteringBoundError, GroupBudgetError
from .graph import Graph, Layering, LayeredTreeDecomposition, TreeDecomposition, layered_width
from .twocolor import (
    EdgeGroup,
    GroupBudget,
    cluster_bound,
    enlarge_decomposition,
    two_color_bounded_treewidth,
)
from .verify import monochromatic_components


@dataclass(frozen=True)
class ThreeColorConstants:
    """Widths, degrees, and clustering bounds for the three stages.

    ``f1``/``f2``/``f3`` bound the clustering of each stage's two-coloring;
    ``delta2``/``delta3`` and ``w2``/``w3`` bound the degree and width of
    the augmented inputs the later stages color; ``g`` bounds the final
    monochromatic component size.
    """

    width: int
    degree: int
    cluster_factor: int
    f1: int
    delta2: int
    w2: int
    f2: int
    delta3: int
    w3: int
    f3: int
    g: int


def compute_constants(
    width: int, degree: int, cluster_factor: int | None = None
) -> ThreeColorConstants:
    """Evaluate the pipeline's constant chain for the given width and degree."""
    if width < 1:
        raise ValueError("width must be at least 1")
    if degree < 1:
        raise ValueError("degree must be at least 1")
    w, d = width, degree
    f1 = cluster_bound(w, d, cluster_factor)
    delta2 = d + f1 * d * d
    w2 = w + 2 * (w + 1) * f1 * f1 * d * d
    f2 = cluster_bound(w2, delta2, cluster_factor)
    delta3 = d + f2 * d * d
    w3 = w + 4 * (w2 + 1) * f2 * f2 * d * d
    f3 = cluster_bound(w3, delta3, cluster_factor)
    g = (1 + f2 * d) * f3
    factor = cluster_bound(0, 1, cluster_factor)
    return ThreeColorConstants(
        width=w,
        degree=d,
        cluster_factor=factor,
        f1=f1,
        delta2=delta2,
        w2=w2,
        f2=f2,
        delta3=delta3,
        w3=w3,
        f3=f3,
        g=g,
    )


@dataclass(frozen=True)
class LayerClassSplit:
    """The three round-robin unions of layers: u1 = V1 u V4 u ..., etc."""

    u1: frozenset[int]
    u2: frozenset[int]
    u3: frozenset[int]

    def class_of(self, layer_index: int) -> int:
        return ((layer_index - 1) % 3) + 1


def split_layer_classes(ly: Layering) -> LayerClassSplit:
    """Assign every layer to class 1, 2, or 3 by its index mod 3."""
    parts: list[set[int]] = [set(), set(), set()]
    for i in range(1, ly.m + 1):
        parts[(i - 1) % 3].update(ly.layer(i))
    return LayerClassSplit(
        u1=frozenset(parts[0]), u2=frozenset(parts[1]), u3=frozenset(parts[2])
    )


@dataclass(frozen=True)
class ThreeColorResult:
    """Coloring with its measured clustering, the constants used, and the
    fake edges the later stages were forced to respect."""

    coloring: dict[int, int]
    clustering: int
    constants: ThreeColorConstants
    split: LayerClassSplit
    stage2_pairs: frozenset[tuple[int, int]]
    stage3_pairs: frozenset[tuple[int, int]]


def _restricted_td(
    td: TreeDecomposition, keep: frozenset[int], index: dict[int, int]
) -> TreeDecomposition:
    bags = [
        frozenset(index[v] for v in bag if v in keep) for bag in td.bags
    ]
    return TreeDecomposition(bags, td.edges, td.root)


def _color_components(
    g: Graph, ids: tuple[int, ...], coloring: dict[int, int], color: int
) -> list[frozenset[int]]:
    """Components of the given color in an induced subgraph, as original ids."""
    report = monochromatic_components(g, coloring)
    return [
        frozenset(ids[v] for v in verts)
        for comp_color, verts in report.components
        if comp_color == color
    ]


def _cover_nodes(
    td: TreeDecomposition, comp: frozenset[int], nbrs: frozenset[int], g: Graph
) -> frozenset[int]:
    """Greedy node cover of the edges between a component and its target-layer
    neighbors: scan edges in sorted order, take the smallest node whose bag
    holds both ends, skip edges already covered."""
    edges = sorted(
        (min(c, u), max(c, u))
        for c in comp
        for u in g.neighbors(c)
        if u in nbrs
    )
    cover: set[int] = set()
    covered: set[tuple[int, int]] = set()
    for e in edges:
        if e in covered:
            continue
        node = next(
            t
            for t in range(td.node_count)
            if e[0] in td.bags[t] and e[1] in td.bags[t]
        )
        cover.add(node)
        for e2 in edges:
            if e2[0] in td.bags[node] and e2[1] in td.bags[node]:
                covered.add(e2)
    return frozenset(cover)


def _groups_for_layer(
    g: Graph,
    td: TreeDecomposition,
    comps: list[tuple[frozenset[int], list[set[int]]]],
    target: frozenset[int],
    index: dict[int, int],
) -> tuple[list[EdgeGroup], set[tuple[int, int]]]:
    """Edge groups forcing the target layer to respect earlier components.

    Each component contributes all pairs of its neighbors in the target
    layer, a greedy cover of the connecting edges, and the subtree of nodes
    whose (possibly rebased) bags meet it.
    """
    groups: list[EdgeGroup] = []
    fake: set[tuple[int, int]] = set()
    for comp, node_bags in sorted(comps, key=lambda item: min(item[0])):
        nbrs = frozenset(
            u for c in comp for u in g.neighbors(c) if u in target
        )
        if len(nbrs) < 2:
            continue
        pairs = frozenset(
            (index[a], index[b])
            for a in nbrs
            for b in nbrs
            if a < b
        )
        subtree = frozenset(
            t for t in range(td.node_count) if node_bags[t] & comp
        )
        cover = _cover_nodes(td, comp, nbrs, g)
        groups.append(EdgeGroup(nodes=cover, subtree=subtree, pairs=pairs))
        fake.update(
            (min(a, b), max(a, b))
            for a in nbrs
            for b in nbrs
            if a < b
        )
    return groups, fake


def three_color(
    g: Graph,
    ltd: LayeredTreeDecomposition,
    delta: int,
    width: int | None = None,
    cluster_factor: int | None = None,
) -> ThreeColorResult:
    """3-color g so that every monochromatic component has at most
    ``constants.g`` vertices.

    ``delta`` must bound the maximum degree; ``width`` may raise the layered
    width the constants are computed for (the measured width is always
    honored). Stage failures keep their exception types but name the stage
    and layer; the final clustering is measured and checked before
    returning.
    """
    measured_width = layered_width(ltd, g)
    if g.max_degree() > delta:
        raise ValueError(
            f"graph degree {g.max_degree()} exceeds declared bound {delta}"
        )
    w_eff = max(1, measured_width, width or 0)
    d_eff = max(1, delta)
    constants = compute_constants(w_eff, d_eff, cluster_factor)
    ly = ltd.layering
    td = ltd.td
    split = split_layer_classes(ly)
    if g.n == 0:
        return ThreeColorResult(
            coloring={},
            clustering=0,
            constants=constants,
            split=split,
            stage2_pairs=frozenset(),
            stage3_pairs=frozenset(),
        )

    budget2 = GroupBudget(
        max_pairs_per_group=constants.f1 ** 2 * d_eff ** 2,
        max_pair_uses_per_vertex=constants.f1 * d_eff ** 2,
        max_groups_per_node=w_eff + 1,
    )
    budget3 = GroupBudget(
        max_pairs_per_group=constants.f2 ** 2 * d_eff ** 2,
        max_pair_uses_per_vertex=constants.f2 * d_eff ** 2,
        max_groups_per_node=2 * (constants.w2 + 1),
    )

    coloring: dict[int, int] = {}
    # Small color-2 components of stage 1, keyed by their layer index.
    stage1_comps: dict[int, list[frozenset[int]]] = {}
    # Small color-3 components of stage 2 (over fake edges), by layer index.
    stage2_comps: dict[int, list[frozenset[int]]] = {}
    # Per-node bag contents after stage-2 enlargement, rebased to the
    # original ids; starts from the first-class part of each original bag.
    rebased: list[set[int]] = [set(bag & split.u1) for bag in td.bags]
    stage2_pairs: set[tuple[int, int]] = set()
    stage3_pairs: set[tuple[int, int]] = set()

    def relabel(colors: dict[int, int], ids: tuple[int, ...], shift) -> None:
        for local, color in colors.items():
            coloring[ids[local]] = shift(color)

    # Stage 1: first-class layers, palette {1, 2}.
    for li in range(1, ly.m + 1, 3):
        verts = frozenset(ly.layer(li))
        if not verts:
            continue
        sub, ids = g.induced(verts)
        index = {old: new for new, old in enumerate(ids)}
        sub_td = _restricted_td(td, verts, index)
        try:
            colors, _ = two_color_bounded_treewidth(
                sub, sub_td, d_eff, cluster_factor
            )
        except ClusteringBoundError as exc:
            raise ClusteringBoundError(
                f"stage-1 layer {li}", exc.measured, exc.bound
            ) from exc
        relabel(colors, ids, lambda c: c)
        stage1_comps[li] = _color_components(sub, ids, colors, 2)

    # Stage 2: second-class layers, palette {2, 3}, guarding the stage-1
    # color-2 components of the layer below.
    original_bags = [set(bag) for bag in td.bags]
    for li in range(2, ly.m + 1, 3):
        verts = frozenset(ly.layer(li))
        if not verts:
            continue
        sub, ids = g.induced(verts)
        index = {old: new for new, old in enumerate(ids)}
        sub_td = _restricted_td(td, verts, index)
        comps = [(c, original_bags) for c in stage1_comps.get(li - 1, [])]
        groups, fake = _groups_for_layer(g, td, comps, verts, index)
        try:
            sub2, td2 = enlarge_decomposition(sub, sub_td, groups, budget2)
        except GroupBudgetError as exc:
            raise GroupBudgetError(
                exc.budget, f"stage-2 layer {li}: {exc}"
            ) from exc
        try:
            colors, _ = two_color_bounded_treewidth(
                sub2, td2, constants.delta2, cluster_factor
            )
        except ClusteringBoundError as exc:
            raise ClusteringBoundError(
                f"stage-2 layer {li}", exc.measured, exc.bound
            ) from exc
        relabel(colors, ids, lambda c: c + 1)
        stage2_pairs.update(fake)
        stage2_comps[li] = _color_components(sub2, ids, colors, 2)
        for t in range(td2.node_count):
            rebased[t].update(ids[v] for v in td2.bags[t])

    # Stage 3: third-class layers, palette {1, 3}, guarding the stage-1
    # color-1 components of the layer above and the stage-2 color-3
    # components of the layer below.
    for li in range(3, ly.m + 1, 3):
        verts = frozenset(ly.layer(li))
        if not verts:
            continue
        sub, ids = g.induced(verts)
        index = {old: new for new, old in enumerate(ids)}
        sub_td = _restricted_td(td, verts, index)
        comps: list[tuple[frozenset[int], list[set[int]]]] = []
        if li + 1 <= ly.m and ly.layer(li + 1):
            above_sub, above_ids = g.induced(frozenset(ly.layer(li + 1)))
            above_colors = {
                v: coloring[above_ids[v]] for v in range(above_sub.n)
            }
            comps.extend(
                (c, rebased)
                for c in _color_components(above_sub, above_ids, above_colors, 1)
            )
        comps.extend((c, rebased) for c in stage2_comps.get(li - 1, []))
        groups, fake = _groups_for_layer(g, td, comps, verts, index)
        try:
            sub3, td3 = enlarge_decomposition(sub, sub_td, groups, budget3)
        except GroupBudgetError as exc:
            raise GroupBudgetError(
                exc.budget, f"stage-3 layer {li}: {exc}"
            ) from exc
        try:
            colors, _ = two_color_bounded_treewidth(
                sub3, td3, constants.delta3, cluster_factor
            )
        except ClusteringBoundError as exc:
            raise ClusteringBoundError(
                f"stage-3 layer {li}", exc.measured, exc.bound
            ) from exc
        relabel(colors, ids, lambda c: 1 if c == 1 else 3)
        stage3_pairs.update(fake)

    report = monochromatic_components(g, coloring)
    if report.max_size > constants.g:
        raise ClusteringBoundError("three-color", report.max_size, constants.g)
    return ThreeColorResult(
        coloring=coloring,
        clustering=report.max_size,
        constants=constants,
        split=split,
        stage2_pairs=frozenset(stage2_pairs),
        stage3_pairs=frozenset(stage3_pairs),
    )
