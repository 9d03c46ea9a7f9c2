"""Vectorized mask screens over all labeled graphs on n <= 8 vertices.

A labeled graph on n vertices is one integer whose bit k is the presence of
the k-th vertex pair in column order ((0,1), (0,2), (1,2), (0,3), ...). These
screens push whole chunks of that integer range through numpy at once:
connectivity, domination-number cutoffs, and the added-edge criticality test.
They produce candidate mask arrays only; callers re-verify each survivor with
the exact per-graph solvers, so a screen bug can only cost completeness, and
the cross-check tests pin both routes to each other exhaustively for n <= 6.
"""

from __future__ import annotations

import numpy as np

MAX_SCAN_VERTICES = 8
DEFAULT_CHUNK = 1 << 20


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in ascending bit order of the graph mask encoding."""
    return [(u, v) for v in range(n) for u in range(v)]


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def vertex_incidence(n: int) -> list[int]:
    """For each vertex, the graph-mask bits of pairs touching it."""
    inc = [0] * n
    for k, (u, v) in enumerate(pair_order(n)):
        inc[u] |= 1 << k
        inc[v] |= 1 << k
    return inc


def open_rows(n: int, masks: np.ndarray) -> list[np.ndarray]:
    """Per-vertex open neighborhood masks (uint16) for each graph in masks."""
    rows = [np.zeros(masks.shape, dtype=np.uint16) for _ in range(n)]
    for k, (u, v) in enumerate(pair_order(n)):
        bits = ((masks >> np.uint32(k)) & np.uint32(1)).astype(np.uint16)
        rows[u] |= bits << np.uint16(v)
        rows[v] |= bits << np.uint16(u)
    return rows


def connected_rows(n: int, rows: list[np.ndarray]) -> np.ndarray:
    """Boolean array: the graph described by each row set is connected."""
    if n == 1:
        return np.ones(rows[0].shape, dtype=bool)
    full = np.uint16((1 << n) - 1)
    reach = rows[0] | np.uint16(1)
    for _ in range(n - 1):
        for v in range(1, n):
            has = ((reach >> np.uint16(v)) & np.uint16(1)).astype(bool)
            reach = reach | np.where(has, rows[v], np.uint16(0))
    return reach == full


def _chunks(total: int, chunk: int):
    lo = 0
    while lo < total:
        hi = min(lo + chunk, total)
        yield lo, hi
        lo = hi


def _min_degree_keep(n: int, masks: np.ndarray, min_deg: int) -> np.ndarray:
    keep = np.ones(masks.shape, dtype=bool)
    for inc in vertex_incidence(n):
        deg = np.bitwise_count(masks & np.uint32(inc))
        keep &= deg >= min_deg
    return keep


def _screen_gc(n: int, masks: np.ndarray) -> np.ndarray:
    """3-connected-domination-critical screen on already connected masks."""
    rows = open_rows(n, masks)
    full = np.uint16((1 << n) - 1)
    closed = [rows[v] | np.uint16(1 << v) for v in range(n)]

    # kill gamma_c <= 2: some dominating vertex or adjacent dominating pair
    low = np.zeros(masks.shape, dtype=bool)
    for v in range(n):
        low |= closed[v] == full
    for v in range(n):
        for u in range(v):
            adj = ((rows[u] >> np.uint16(v)) & np.uint16(1)).astype(bool)
            low |= adj & ((closed[u] | closed[v]) == full)
    keep = ~low
    masks = masks[keep]
    rows = [r[keep] for r in rows]
    closed = [c[keep] for c in closed]
    if not masks.size:
        return masks

    # require gamma_c <= 3: a dominating triple inducing >= 2 edges
    has3 = np.zeros(masks.shape, dtype=bool)
    for w in range(n):
        for v in range(w):
            for u in range(v):
                union = closed[u] | closed[v] | closed[w]
                euv = ((rows[u] >> np.uint16(v)) & np.uint16(1)).astype(np.uint8)
                euw = ((rows[u] >> np.uint16(w)) & np.uint16(1)).astype(np.uint8)
                evw = ((rows[v] >> np.uint16(w)) & np.uint16(1)).astype(np.uint8)
                has3 |= (union == full) & (euv + euw + evw >= 2)
    masks = masks[has3]
    rows = [r[has3] for r in rows]
    closed = [c[has3] for c in closed]
    if not masks.size:
        return masks

    # criticality: every absent pair admits a 2-vertex connected dominating
    # set once added; candidates must touch an endpoint
    keep = np.ones(masks.shape, dtype=bool)
    for k, (u, v) in enumerate(pair_order(n)):
        present = ((masks >> np.uint32(k)) & np.uint32(1)).astype(bool)
        au = closed[u] | np.uint16(1 << v)
        av = closed[v] | np.uint16(1 << u)
        drop = (au | av) == full
        for z in range(n):
            if z == u or z == v:
                continue
            near_u = ((rows[u] >> np.uint16(z)) & np.uint16(1)).astype(bool)
            drop |= near_u & ((au | closed[z]) == full)
            near_v = ((rows[v] >> np.uint16(z)) & np.uint16(1)).astype(bool)
            drop |= near_v & ((av | closed[z]) == full)
        keep &= present | drop
    return masks[keep]


def _screen_gt(n: int, masks: np.ndarray) -> np.ndarray:
    """3-total-domination-critical screen on already connected masks."""
    rows = open_rows(n, masks)
    full = np.uint16((1 << n) - 1)

    low = np.zeros(masks.shape, dtype=bool)
    for v in range(n):
        for u in range(v):
            low |= (rows[u] | rows[v]) == full
    keep = ~low
    masks = masks[keep]
    rows = [r[keep] for r in rows]
    if not masks.size:
        return masks

    has3 = np.zeros(masks.shape, dtype=bool)
    for w in range(n):
        for v in range(w):
            for u in range(v):
                has3 |= (rows[u] | rows[v] | rows[w]) == full
    masks = masks[has3]
    rows = [r[has3] for r in rows]
    if not masks.size:
        return masks

    keep = np.ones(masks.shape, dtype=bool)
    for k, (u, v) in enumerate(pair_order(n)):
        present = ((masks >> np.uint32(k)) & np.uint32(1)).astype(bool)
        nu = rows[u] | np.uint16(1 << v)
        nv = rows[v] | np.uint16(1 << u)
        drop = (nu | nv) == full
        for z in range(n):
            if z == u or z == v:
                continue
            drop |= (nu | rows[z]) == full
            drop |= (nv | rows[z]) == full
        keep &= present | drop
    return masks[keep]


def _sweep(n: int, screen, min_deg: int, chunk: int, stats: dict | None) -> np.ndarray:
    if not 1 <= n <= MAX_SCAN_VERTICES:
        raise ValueError(f"mask sweeps support 1..{MAX_SCAN_VERTICES} vertices, got {n}")
    total = 1 << pair_count(n)
    parts = []
    connected_count = 0
    for lo, hi in _chunks(total, chunk):
        masks = np.arange(lo, hi, dtype=np.uint32)
        if min_deg > 0:
            masks = masks[_min_degree_keep(n, masks, min_deg)]
            if not masks.size:
                continue
        rows = open_rows(n, masks)
        conn = connected_rows(n, rows)
        connected_count += int(conn.sum())
        masks = masks[conn]
        if not masks.size:
            continue
        survivors = screen(n, masks)
        if survivors.size:
            parts.append(survivors)
    if stats is not None:
        stats["connected"] = connected_count
    if not parts:
        return np.empty(0, dtype=np.uint32)
    return np.concatenate(parts)


def critical3_gc_masks(
    n: int, min_deg: int = 0, chunk: int = DEFAULT_CHUNK, stats: dict | None = None
) -> np.ndarray:
    """Masks of all connected labeled 3-connected-domination-critical graphs."""
    return _sweep(n, _screen_gc, min_deg, chunk, stats)


def critical3_gt_masks(
    n: int, min_deg: int = 0, chunk: int = DEFAULT_CHUNK, stats: dict | None = None
) -> np.ndarray:
    """Masks of all connected labeled 3-total-domination-critical graphs."""
    return _sweep(n, _screen_gt, min_deg, chunk, stats)


def connected_masks(n: int, chunk: int = DEFAULT_CHUNK) -> np.ndarray:
    """Masks of all connected labeled graphs on n vertices, ascending."""
    if not 1 <= n <= MAX_SCAN_VERTICES:
        raise ValueError(f"mask sweeps support 1..{MAX_SCAN_VERTICES} vertices, got {n}")
    total = 1 << pair_count(n)
    parts = []
    for lo, hi in _chunks(total, chunk):
        masks = np.arange(lo, hi, dtype=np.uint32)
        rows = open_rows(n, masks)
        parts.append(masks[connected_rows(n, rows)])
    return np.concatenate(parts)


__all__ = [
    "DEFAULT_CHUNK",
    "MAX_SCAN_VERTICES",
    "connected_masks",
    "connected_rows",
    "critical3_gc_masks",
    "critical3_gt_masks",
    "open_rows",
    "pair_count",
    "pair_order",
    "vertex_incidence",
]
