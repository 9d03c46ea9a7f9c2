"""Exhaustive labeled enumeration of connected graphs on few vertices.

Graphs are identified with edge-set masks in the same pair order the
vectorized screens use, so the two routes can be compared bit for bit.
Deduplication to one representative per isomorphism class is opt-in and
capped lower, since it canonicalizes every survivor.
"""

from __future__ import annotations

from .fastscan import MAX_SCAN_VERTICES, connected_masks, pair_order
from .graphs import BudgetExceededError, Graph, canonical_form

DEDUP_MAX_VERTICES = 7


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    pairs = pair_order(n)
    edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
    return Graph.new(n, edges)


def edge_mask(g: Graph) -> int:
    mask = 0
    for k, (u, v) in enumerate(pair_order(g.n)):
        if g.has_edge(u, v):
            mask |= 1 << k
    return mask


def enumerate_connected_graphs(n: int, dedup: bool = False):
    """All connected labeled graphs on n vertices in ascending mask order;
    with dedup, the first representative of each isomorphism class."""
    if not 1 <= n <= MAX_SCAN_VERTICES:
        raise BudgetExceededError(
            f"enumeration supports 1..{MAX_SCAN_VERTICES} vertices, got {n}"
        )
    if dedup and n > DEDUP_MAX_VERTICES:
        raise BudgetExceededError(
            f"deduplication capped at {DEDUP_MAX_VERTICES} vertices, got {n}"
        )
    seen: set[str] = set()
    for mask in connected_masks(n):
        g = graph_from_edge_mask(n, int(mask))
        if dedup:
            key = canonical_form(g).key
            if key in seen:
                continue
            seen.add(key)
        yield g


__all__ = [
    "DEDUP_MAX_VERTICES",
    "edge_mask",
    "enumerate_connected_graphs",
    "graph_from_edge_mask",
]
