"""Exact structural invariants: degrees, independence, vertex connectivity.

The two nontrivial solvers take deliberately different routes from the naive
subset scans used to cross-check them: the independence number runs a
branch-and-bound maximum-clique search on the complement with a greedy
coloring bound, and connectivity comes from Menger's theorem as a minimum of
vertex-capacity max-flows over non-adjacent pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bit, iter_bits, subsets_of_size
from .graphs import BudgetExceededError, Graph

CUT_ENUM_DEFAULT_LIMIT = 16


def min_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.rows)


def max_degree(g: Graph) -> int:
    return max(row.bit_count() for row in g.rows)


# --- independence -----------------------------------------------------------


def _greedy_color_order(rows: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Vertices of ``cand`` with greedy clique-cover colors, colors ascending.

    Color classes are built greedily as independent-in-``rows`` groups; a
    clique meeting ``cand`` has at most one vertex per class, so the color
    number bounds the clique size from above.
    """
    order: list[int] = []
    colors: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            order.append(v)
            colors.append(color)
            avail &= ~rows[v]
            avail &= ~bit(v)
            rest &= ~bit(v)
    return order, colors


def _max_clique(rows: tuple[int, ...], cand: int) -> int:
    """Maximum clique mask in the graph given by ``rows``, restricted to ``cand``."""
    best_mask = 0
    best_size = 0

    def expand(current: int, size: int, cand: int) -> None:
        nonlocal best_mask, best_size
        order, colors = _greedy_color_order(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best_size:
                return
            v = order[i]
            cand &= ~bit(v)
            nxt = current | bit(v)
            if size + 1 > best_size:
                best_size = size + 1
                best_mask = nxt
            sub = cand & rows[v]
            if sub:
                expand(nxt, size + 1, sub)

    expand(0, 0, cand)
    return best_mask


def maximum_independent_set(g: Graph) -> int:
    """One maximum independent set, as a mask (deterministic)."""
    comp_rows = tuple(~row & g.vertex_mask & ~bit(v) for v, row in enumerate(g.rows))
    return _max_clique(comp_rows, g.vertex_mask)


def independence_number(g: Graph) -> int:
    return maximum_independent_set(g).bit_count()


def all_maximum_independent_sets(g: Graph) -> list[int]:
    """Every independent set of maximum size, ascending by mask value."""
    alpha = independence_number(g)
    out: list[int] = []

    def grow(chosen: int, size: int, cand: int) -> None:
        if size == alpha:
            out.append(chosen)
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~bit(v)
            if size + 1 + cand.bit_count() < alpha:
                return
            grow(chosen | bit(v), size + 1, cand & ~g.rows[v])

    grow(0, 0, g.vertex_mask)
    return sorted(out)


def is_independent(g: Graph, mask: int) -> bool:
    return all(not g.rows[v] & mask for v in iter_bits(mask))


# --- connectivity -----------------------------------------------------------


class _VertexFlow:
    """Unit-vertex-capacity max-flow scratchpad, reused across pairs.

    Nodes 0..n-1 are entries, n..2n-1 exits; the split arc v->v+n carries
    capacity 1 and every edge uv contributes exit(u)->entry(v) and
    exit(v)->entry(u) with effectively unbounded capacity.
    """

    def __init__(self, g: Graph):
        self.n = g.n
        self.rows = g.rows
        self.inf = g.n + 1

    def local_connectivity(self, s: int, t: int, stop_at: int) -> int:
        """min vertex cut separating non-adjacent s,t; early exit at stop_at."""
        n = self.n
        inf = self.inf
        # residual capacities, dict keyed by (from, to) over split nodes
        cap: dict[tuple[int, int], int] = {}
        for v in range(n):
            cap[(v, v + n)] = 1 if v not in (s, t) else inf
            cap[(v + n, v)] = 0
        for v in range(n):
            for u in iter_bits(self.rows[v]):
                cap[(v + n, u)] = inf
                cap[(u, v + n)] = cap.get((u, v + n), 0)
        out: list[list[int]] = [[] for _ in range(2 * n)]
        for a, b in cap:
            out[a].append(b)
        flow = 0
        source, sink = s + n, t
        while flow < stop_at:
            # BFS for a shortest augmenting path in the residual network
            parent = {source: source}
            queue = [source]
            while queue and sink not in parent:
                nxt = []
                for x in queue:
                    for y in out[x]:
                        if y not in parent and cap[(x, y)] > 0:
                            parent[y] = x
                            nxt.append(y)
                queue = nxt
            if sink not in parent:
                break
            y = sink
            while y != source:
                x = parent[y]
                cap[(x, y)] -= 1
                cap[(y, x)] += 1
                y = x
            flow += 1
        return flow


def connectivity(g: Graph) -> int:
    """Vertex connectivity; n-1 for complete graphs, 0 when disconnected."""
    if g.is_complete:
        return g.n - 1
    if not g.is_connected:
        return 0
    solver = _VertexFlow(g)
    best = min_degree(g)
    # scan pairs starting from a minimum-degree vertex so the bound drops fast
    start = min(range(g.n), key=lambda v: g.rows[v].bit_count())
    pairs = []
    for v in range(g.n):
        for u in range(v):
            if not g.rows[v] >> u & 1:
                pairs.append((u, v))
    pairs.sort(key=lambda p: (p[0] != start and p[1] != start,))
    for u, v in pairs:
        if best == 0:
            break
        best = min(best, solver.local_connectivity(u, v, best))
    return best


def all_minimum_cut_sets(g: Graph, limit: int = CUT_ENUM_DEFAULT_LIMIT) -> list[int]:
    """Every size-kappa separating set, ascending by mask; [] for complete graphs."""
    if g.n > limit:
        raise BudgetExceededError(
            f"cut-set enumeration limited to n <= {limit}, got n={g.n}"
        )
    if g.is_complete:
        return []
    k = connectivity(g)
    fm = g.vertex_mask
    out = []
    for s in subsets_of_size(fm, k):
        rest = fm & ~s
        if rest.bit_count() < 2:
            continue
        v = (rest & -rest).bit_length() - 1
        if g.reachable_from(v, rest) != rest:
            out.append(s)
    return out


# --- profile ----------------------------------------------------------------


@dataclass(frozen=True)
class InvariantProfile:
    n: int
    m: int
    connected: bool
    delta: int
    alpha: int
    kappa: int
    gamma: int
    gamma_c: int | None
    gamma_t: int | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "connected": self.connected,
            "delta": self.delta,
            "alpha": self.alpha,
            "kappa": self.kappa,
            "gamma": self.gamma,
            "gamma_c": self.gamma_c,
            "gamma_t": self.gamma_t,
        }


def profile(g: Graph) -> InvariantProfile:
    from .domination import gamma, gamma_c, gamma_t

    connected = g.is_connected
    delta = min_degree(g)
    kappa = connectivity(g)
    assert kappa <= delta, "Whitney inequality violated; solver bug"
    return InvariantProfile(
        n=g.n,
        m=g.edge_count,
        connected=connected,
        delta=delta,
        alpha=independence_number(g),
        kappa=kappa,
        gamma=gamma(g),
        gamma_c=gamma_c(g) if connected else None,
        gamma_t=gamma_t(g) if delta >= 1 else None,
    )


def describe(g: Graph) -> str:
    p = profile(g)
    parts = [f"n={p.n}", f"m={p.m}", f"delta={p.delta}", f"alpha={p.alpha}", f"kappa={p.kappa}", f"gamma={p.gamma}"]
    if p.gamma_c is not None:
        parts.append(f"gamma_c={p.gamma_c}")
    if p.gamma_t is not None:
        parts.append(f"gamma_t={p.gamma_t}")
    return " ".join(parts)


__all__ = [
    "InvariantProfile",
    "all_maximum_independent_sets",
    "all_minimum_cut_sets",
    "connectivity",
    "describe",
    "independence_number",
    "is_independent",
    "max_degree",
    "maximum_independent_set",
    "min_degree",
    "profile",
]
