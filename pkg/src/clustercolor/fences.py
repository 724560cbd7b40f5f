"""Separator toolkit for tree-decompositions: tree parts, central nodes,
fences, and fan extraction from parades.

A fence is a set of tree nodes that chops the decomposition into parts,
each of which meets a given vertex set Q in a bounded number of vertices.
Parades are strictly descending chains of tree nodes; a fan is a parade
whose bags agree with the first bag in exactly `level` vertices and are
otherwise pairwise disjoint. These are the combinatorial gadgets the
three-coloring argument uses to keep monochromatic components apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InternalInvariantError, InvalidDecomposition
from .graph import TreeDecomposition


@dataclass(frozen=True)
class TreePart:
    """A component of the tree minus a fence, widened by the fence nodes
    adjacent to it. ``boundary`` is the fence nodes inside the part."""

    nodes: frozenset[int]
    boundary: frozenset[int]


@dataclass(frozen=True)
class Fence:
    """Fence node set with the width bound and vertex set it was built for.

    Guarantees: every part meets ``q`` in at most 12w+13 vertices, every
    fence node touches at least two parts holding q-vertices beyond its own
    bag, and |nodes| <= max(|q| - 3w - 3, 0).
    """

    nodes: frozenset[int]
    w: int
    q: frozenset[int]


@dataclass(frozen=True)
class Fan:
    """A descending node sequence whose bags all share exactly ``level``
    vertices with the first bag and are disjoint from each other outside it.

    ``anchor`` is (first node, last node); the shared-vertex and
    disjointness conditions quantify over the elements after the anchor.
    """

    nodes: tuple[int, ...]
    level: int
    anchor: tuple[int, int]


def _bag_union(td: TreeDecomposition, nodes: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for t in nodes:
        out |= td.bags[t]
    return frozenset(out)


def _components_within(
    td: TreeDecomposition, nodes: frozenset[int], removed: frozenset[int]
) -> list[frozenset[int]]:
    """Connected components of the induced subtree on nodes - removed."""
    remaining = nodes - removed
    seen: set[int] = set()
    comps = []
    for start in sorted(remaining):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            t = queue.popleft()
            for u in td.node_neighbors(t):
                if u in remaining and u not in comp:
                    comp.add(u)
                    seen.add(u)
                    queue.append(u)
        comps.append(frozenset(comp))
    return comps


def f_parts(td: TreeDecomposition, fence_nodes: Iterable[int]) -> list[TreePart]:
    """Parts of the tree relative to a fence node set.

    Each component of tree - fence is extended by the fence nodes adjacent
    to it; the boundary is those fence nodes. An empty fence yields one part
    covering the whole tree.
    """
    fset = frozenset(fence_nodes)
    for t in fset:
        if not 0 <= t < td.node_count:
            raise ValueError(f"fence node {t} out of range")
    all_nodes = frozenset(range(td.node_count))
    parts = []
    for comp in _components_within(td, all_nodes, fset):
        attach = set()
        for t in comp:
            for u in td.node_neighbors(t):
                if u in fset:
                    attach.add(u)
        parts.append(TreePart(nodes=comp | attach, boundary=frozenset(attach)))
    return parts


def _central_in(
    td: TreeDecomposition, nodes: frozenset[int], q: frozenset[int]
) -> int:
    """Smallest node in the subtree such that every component hanging off
    it carries, together with its own bag, under two thirds of q."""
    for cand in sorted(nodes):
        ok = True
        for comp in _components_within(td, nodes, frozenset((cand,))):
            carried = (q & _bag_union(td, comp)) | td.bags[cand]
            if 3 * len(carried) >= 2 * len(q):
                ok = False
                break
        if ok:
            return cand
    raise InternalInvariantError("no central node exists for this vertex set")


def central_node(td: TreeDecomposition, q: Iterable[int], w: int) -> int:
    """Node whose removal leaves every component holding under (2/3)|q|
    of q even after adding the node's own bag. Requires |q| >= 12w+13."""
    qset = frozenset(q)
    if td.width() > w:
        raise InvalidDecomposition(f"width {td.width()} exceeds declared {w}")
    if not td.is_tree():
        raise InvalidDecomposition("decomposition nodes do not form a tree")
    if len(qset) < 12 * w + 13:
        raise ValueError(f"need at least {12 * w + 13} vertices, got {len(qset)}")
    return _central_in(td, frozenset(range(td.node_count)), qset)


def _eps_rec(
    td: TreeDecomposition,
    nodes: frozenset[int],
    q: frozenset[int],
    eps: Fraction,
    w: int,
) -> set[int]:
    if len(q) * eps <= 12 * w + 13:
        return set()
    star = _central_in(td, nodes, q)
    out = {star}
    for comp in _components_within(td, nodes, frozenset((star,))):
        part = comp | {star}
        sub_q = (q & _bag_union(td, part)) | td.bags[star]
        out |= _eps_rec(td, part, frozenset(sub_q), eps, w)
    return out


def epsilon_fence(
    td: TreeDecomposition,
    q: Iterable[int],
    epsilon: Fraction | int,
    w: int,
) -> frozenset[int]:
    """Fence of at most epsilon*(|q|-3w-3) nodes whose parts each carry at
    most (12w+13)/epsilon vertices of q, counting their boundary bags.

    epsilon must lie in [1/(w+1), 1] and is handled as an exact rational.
    Both output bounds are rechecked before returning.
    """
    qset = frozenset(q)
    eps = Fraction(epsilon)
    if not Fraction(1, w + 1) <= eps <= 1:
        raise ValueError(f"epsilon {eps} outside [1/{w + 1}, 1]")
    if td.width() > w:
        raise InvalidDecomposition(f"width {td.width()} exceeds declared {w}")
    if not td.is_tree():
        raise InvalidDecomposition("decomposition nodes do not form a tree")

    fence_set = frozenset(
        _eps_rec(td, frozenset(range(td.node_count)), qset, eps, w)
    )

    if len(fence_set) > max(eps * (len(qset) - 3 * w - 3), 0):
        raise InternalInvariantError("fence size bound violated")
    cap = Fraction(12 * w + 13) / eps
    for part in f_parts(td, fence_set):
        load = (qset & _bag_union(td, part.nodes)) | _bag_union(td, part.boundary)
        if len(load) > cap:
            raise InternalInvariantError("fence part load bound violated")
    return fence_set


def _second_condition_counts(
    td: TreeDecomposition,
    fence_set: set[int] | frozenset[int],
    q: frozenset[int],
) -> dict[int, int]:
    """For each fence node, how many parts both touch it and hold q-vertices
    outside its bag."""
    counts = {t: 0 for t in fence_set}
    for part in f_parts(td, fence_set):
        content = q & _bag_union(td, part.nodes)
        for t in part.boundary:
            if content - td.bags[t]:
                counts[t] += 1
    return counts


def fence(td: TreeDecomposition, q: Iterable[int], w: int) -> Fence:
    """Minimal fence for q: parts carry at most 12w+13 q-vertices and every
    fence node separates at least two parts with q-content beyond its bag.

    Built by shrinking an epsilon=1 fence: nodes failing the two-part
    condition are deleted in ascending id order until none remain, then all
    three guarantees are verified.
    """
    qset = frozenset(q)
    working = set(epsilon_fence(td, qset, 1, w))
    if qset:
        while True:
            counts = _second_condition_counts(td, working, qset)
            doomed = next(
                (t for t in sorted(working) if counts[t] <= 1), None
            )
            if doomed is None:
                break
            working.discard(doomed)
    else:
        working = set()

    if len(working) > max(len(qset) - 3 * w - 3, 0):
        raise InternalInvariantError("fence size bound violated")
    for part in f_parts(td, working):
        if len(qset & _bag_union(td, part.nodes)) > 12 * w + 13:
            raise InternalInvariantError("fence part content bound violated")
    if qset:
        counts = _second_condition_counts(td, working, qset)
        if any(c < 2 for c in counts.values()):
            raise InternalInvariantError("fence minimality condition violated")
    return Fence(nodes=frozenset(working), w=w, q=qset)


def n_fan_bound(w: int, k: int) -> int:
    """Parade length that guarantees a fan of size k at width bound w."""
    if w < 0 or k < 1:
        raise ValueError("need w >= 0 and k >= 1")
    value = max(k, 2)
    for _ in range(w):
        value *= (k - 1) * (w + 1)
    return value


def _subtree_order(td: TreeDecomposition) -> tuple[dict[int, int], dict[int, int]]:
    """Entry/exit times of a DFS from the root, for ancestor tests."""
    tin: dict[int, int] = {}
    tout: dict[int, int] = {}
    clock = 0
    stack: list[tuple[int, int | None, bool]] = [(td.root, None, False)]
    while stack:
        node, parent, closing = stack.pop()
        if closing:
            tout[node] = clock
            clock += 1
            continue
        tin[node] = clock
        clock += 1
        stack.append((node, parent, True))
        for u in sorted(td.node_neighbors(node), reverse=True):
            if u != parent:
                stack.append((u, node, False))
    return tin, tout


def _is_strict_descendant(
    tin: dict[int, int], tout: dict[int, int], anc: int, node: int
) -> bool:
    return anc != node and tin[anc] <= tin[node] and tout[node] <= tout[anc]


def is_parade(td: TreeDecomposition, nodes: Sequence[int]) -> bool:
    """Whether each node is a strict descendant of the previous one."""
    if not td.is_tree():
        raise InvalidDecomposition("decomposition nodes do not form a tree")
    tin, tout = _subtree_order(td)
    return all(
        _is_strict_descendant(tin, tout, nodes[i], nodes[i + 1])
        for i in range(len(nodes) - 1)
    )


def _fan_rec(
    td: TreeDecomposition,
    bags: dict[int, frozenset[int]],
    parade: list[int],
    w: int,
    k: int,
    tin: dict[int, int],
    tout: dict[int, int],
) -> tuple[list[int], int]:
    if len(parade) < n_fan_bound(w, k):
        raise InternalInvariantError("fan recursion ran out of parade")

    kept: list[int] = []
    kept_union: set[int] = set()
    for t in parade:
        if not (bags[t] & kept_union):
            kept.append(t)
            kept_union |= bags[t]
    if len(kept) >= k:
        return kept[:k], 0
    if w == 0:
        raise InternalInvariantError("disjoint pick failed at width zero")

    # Every parade element intersects some kept bag at or before it, so the
    # kept nodes cover the parade; take the most popular one.
    position = {t: i for i, t in enumerate(parade)}
    best_q = None
    best_members: list[int] = []
    for qnode in kept:
        members = [
            t
            for t in parade[position[qnode]:]
            if bags[t] & bags[qnode]
        ]
        if best_q is None or len(members) > len(best_members):
            best_q = qnode
            best_members = members
    if best_q is None:
        raise InternalInvariantError("no covering node in dense branch")

    by_size: dict[int, list[int]] = {}
    for t in best_members:
        by_size.setdefault(len(bags[t] & bags[best_q]), []).append(t)
    star = max(sorted(by_size), key=lambda a: len(by_size[a]))
    if star > w:
        raise InternalInvariantError("full-bag overlap class was largest")
    sub_parade = by_size[star]

    shared = bags[sub_parade[0]] & bags[best_q]
    for t in sub_parade:
        if bags[t] & bags[best_q] != shared:
            raise InternalInvariantError("overlap class shares no common core")

    stripped = dict(bags)
    for t in sub_parade:
        stripped[t] = bags[t] - shared
    nodes, level = _fan_rec(td, stripped, sub_parade, w - 1, k, tin, tout)
    return nodes, level + len(shared)


def _verify_fan(
    td: TreeDecomposition,
    fan: Fan,
    tin: dict[int, int],
    tout: dict[int, int],
) -> None:
    nodes = fan.nodes
    anchor_bag = td.bags[nodes[0]]
    last = nodes[-1]
    for j in range(len(nodes) - 1):
        if not _is_strict_descendant(tin, tout, nodes[j], nodes[j + 1]):
            raise InternalInvariantError("fan nodes are not strictly descending")
        if nodes[j] != last and not _is_strict_descendant(
            tin, tout, nodes[j], last
        ):
            raise InternalInvariantError("fan end left an earlier subtree")
    outside: set[int] = set()
    for t in nodes[1:]:
        if len(td.bags[t] & anchor_bag) != fan.level:
            raise InternalInvariantError("fan bag overlaps anchor wrongly")
        free = td.bags[t] - anchor_bag
        if free & outside:
            raise InternalInvariantError("fan bags collide outside the anchor")
        outside |= free


def find_fan(
    td: TreeDecomposition, parade: Sequence[int], w: int, k: int
) -> Fan:
    """Extract a size-k fan from a parade of length at least n_fan_bound(w, k).

    Requires parade bags of size at most w+1 with no later bag contained in
    an earlier one. Greedily picks pairwise-disjoint bags; failing that,
    strips the common overlap with the most-intersected picked bag and
    recurses one width lower, accumulating the overlap into the fan level.
    """
    seq = list(parade)
    if not seq:
        raise ValueError("parade is empty")
    if len(seq) < n_fan_bound(w, k):
        raise ValueError(
            f"parade length {len(seq)} below required {n_fan_bound(w, k)}"
        )
    if not td.is_tree():
        raise InvalidDecomposition("decomposition nodes do not form a tree")
    for t in seq:
        if len(td.bags[t]) > w + 1:
            raise ValueError(f"bag of node {t} larger than {w + 1}")
    tin, tout = _subtree_order(td)
    if not is_parade(td, seq):
        raise ValueError("sequence is not a parade")
    for j in range(len(seq)):
        for i in range(j + 1, len(seq)):
            if td.bags[seq[i]] <= td.bags[seq[j]]:
                raise ValueError(
                    f"bag of {seq[i]} contained in earlier bag of {seq[j]}"
                )

    bags = {t: td.bags[t] for t in seq}
    nodes, level = _fan_rec(td, bags, seq, w, k, tin, tout)
    fan = Fan(nodes=tuple(nodes), level=level, anchor=(nodes[0], nodes[-1]))
    if len(fan.nodes) != k or not 0 <= level <= w:
        raise InternalInvariantError("fan has wrong size or level")
    _verify_fan(td, fan, tin, tout)
    return fan
