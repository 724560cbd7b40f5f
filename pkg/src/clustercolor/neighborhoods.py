"""Threshold neighborhoods, expansion bounds, and complete-bipartite search.

The bounds here cap how many vertices can see at least ``s`` members of a
set ``X`` in graphs without a K_{s,t} subgraph, in graphs that additionally
have bounded layered treewidth, and in graphs of bounded density. They are
exact rational quantities, so everything is computed with ``fractions``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import BudgetExceeded
from .graph import Graph

DEFAULT_KST_BUDGET = 10_000_000


def _x_counts(g: Graph, x_set) -> dict[int, int]:
    x = frozenset(x_set)
    for v in x:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    counts: dict[int, int] = {}
    for u in x:
        for w in g.neighbors(u):
            if w not in x:
                counts[w] = counts.get(w, 0) + 1
    return counts


def n_at_least(g: Graph, x_set, s: int) -> frozenset[int]:
    """Vertices outside X with at least ``s`` neighbors in X."""
    if s < 1:
        raise ValueError("threshold s must be positive")
    counts = _x_counts(g, x_set)
    return frozenset(v for v, c in counts.items() if c >= s)


def n_below(g: Graph, x_set, s: int) -> frozenset[int]:
    """Vertices outside X with at least one but fewer than ``s`` neighbors in X."""
    if s < 1:
        raise ValueError("threshold s must be positive")
    counts = _x_counts(g, x_set)
    return frozenset(v for v, c in counts.items() if 1 <= c < s)


def growth_bound(s: int, t: int, x: int) -> int:
    """Cap on |N^{>=s}(X)| with |X| = x in a K_{s,t}-subgraph-free graph."""
    if s < 1 or t < 1 or x < 0:
        raise ValueError("arguments out of range")
    return comb(x, s) * (t - 1)


def growth_bound_layered(s: int, t: int, w: int, x: int) -> Fraction:
    """Linear cap on |N^{>=s}(X)| under layered treewidth at most ``w``."""
    if s < 1 or t < 1 or w < 0 or x < 0:
        raise ValueError("arguments out of range")
    return (Fraction(5 * w, 2) + (t - 1) * comb(5 * w, s - 1)) * x


def falling_binomial(top, k: int) -> Fraction:
    """Generalized binomial coefficient via the falling factorial."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    top = Fraction(top)
    num = Fraction(1)
    for i in range(k):
        num *= top - i
    return num / factorial(k)


def growth_bound_density(s: int, t: int, density, x: int) -> Fraction:
    """Linear cap on |N^{>=s}(X)| when every subgraph has average degree
    at most 2 * ``density``."""
    if s < 1 or t < 1 or x < 0:
        raise ValueError("arguments out of range")
    d = Fraction(density)
    if d < 0:
        raise ValueError("density must be nonnegative")
    coeff = max(Fraction(t - 1), d / 2 + (t - 1) * falling_binomial(d, s - 1))
    return coeff * x


def has_kst_subgraph(
    g: Graph, s: int, t: int, budget: int = DEFAULT_KST_BUDGET
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Search for a (not necessarily induced) K_{s,t} subgraph.

    Candidate s-sides are explored in lexicographic order, pruning on the
    running common neighborhood. Returns (found, witness) where the witness
    is the pair of sides. Exceeding ``budget`` extension steps raises
    BudgetExceeded, so a clean False is a certificate.
    """
    if s < 1 or t < 1:
        raise ValueError("both sides must be nonempty")
    adj = [frozenset(g.neighbors(v)) for v in range(g.n)]
    steps = 0

    def extend(chosen, common, start):
        nonlocal steps
        if len(chosen) == s:
            rest = sorted(v for v in common if v not in chosen)
            if len(rest) >= t:
                return tuple(chosen), tuple(rest[:t])
            return None
        for v in range(start, g.n):
            steps += 1
            if steps > budget:
                raise BudgetExceeded(
                    f"K_{{{s},{t}}} search exceeded {budget} extension steps"
                )
            nc = adj[v] if not chosen else common & adj[v]
            if len(nc) < t:
                continue
            found = extend(chosen + [v], nc, v + 1)
            if found is not None:
                return found
        return None

    witness = extend([], frozenset(), 0)
    return (witness is not None), witness
