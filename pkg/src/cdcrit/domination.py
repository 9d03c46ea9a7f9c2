"""Domination numbers and edge-addition criticality.

gamma, gamma_c, gamma_t are found by sweeping candidate sets in increasing
cardinality (and ascending mask value within a cardinality), so the first hit
is both minimum and deterministic.  A set D dominates iff the union of closed
neighborhoods over D covers V; it totally dominates iff the union of open
neighborhoods does (membership of v in some open N(d) already says v has a
neighbor in D, so no separate adjacency clause is needed); it connected-
dominates iff it dominates and induces a connected subgraph.

Criticality of G means adding any one missing edge strictly drops the
invariant below k.  For k = 3 there is a sound shortcut: once gamma_c(G) >= 3
is known, a 2-element connected dominating set of G+uv that avoids both u and
v would already have been one in G, so only pairs meeting {u, v} need
scanning.  The same argument caps the gamma_t scan.  The shortcut is
cross-checked against the unrestricted solver in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitset import bit, iter_bits, subsets_of_size
from .graphs import BudgetExceededError, Graph


class DisconnectedGraphError(ValueError):
    """gamma_c asked for on a disconnected graph."""


class IsolatedVertexError(ValueError):
    """gamma_t asked for on a graph with an isolated vertex."""


def dominates(g: Graph, subset: int) -> bool:
    cover = subset
    for v in iter_bits(subset):
        cover |= g.rows[v]
    return cover == g.vertex_mask


def totally_dominates(g: Graph, subset: int) -> bool:
    cover = 0
    for v in iter_bits(subset):
        cover |= g.rows[v]
    return cover == g.vertex_mask


def is_connected_dominating(g: Graph, subset: int) -> bool:
    return subset != 0 and dominates(g, subset) and g.is_connected_induced(subset)


def _first_at_most(g: Graph, limit: int, accept) -> tuple[int, int] | None:
    """First (size, mask) with accept(mask), sizes 1..limit, masks ascending."""
    fm = g.vertex_mask
    for k in range(1, min(limit, g.n) + 1):
        for s in subsets_of_size(fm, k):
            if accept(s):
                return k, s
    return None


def gamma(g: Graph) -> int:
    hit = _first_at_most(g, g.n, lambda s: dominates(g, s))
    assert hit is not None
    return hit[0]


def gamma_c(g: Graph) -> int:
    if not g.is_connected:
        raise DisconnectedGraphError("gamma_c undefined for disconnected graphs")
    hit = _first_at_most(g, g.n, lambda s: is_connected_dominating(g, s))
    assert hit is not None
    return hit[0]


def gamma_t(g: Graph) -> int:
    if any(not row for row in g.rows):
        raise IsolatedVertexError("gamma_t undefined with an isolated vertex")
    hit = _first_at_most(g, g.n, lambda s: totally_dominates(g, s))
    assert hit is not None
    return hit[0]


def gamma_c_at_most(g: Graph, limit: int) -> int | None:
    """Smallest connected dominating set size if <= limit, else None.

    Witness of the hit is recoverable via all_min_connected_dominating_sets;
    this variant exists so criticality scans can stop at k-1.
    """
    hit = _first_at_most(g, limit, lambda s: is_connected_dominating(g, s))
    return None if hit is None else hit[0]


def all_min_connected_dominating_sets(g: Graph, max_subsets: int = 2_000_000) -> list[int]:
    """Every connected dominating set of size gamma_c(g), ascending by mask."""
    k = gamma_c(g)
    from math import comb

    if comb(g.n, k) > max_subsets:
        raise BudgetExceededError(
            f"enumerating C({g.n},{k}) connected dominating sets exceeds budget"
        )
    return [
        s for s in subsets_of_size(g.vertex_mask, k) if is_connected_dominating(g, s)
    ]


# --- criticality ------------------------------------------------------------


@dataclass(frozen=True)
class CriticalityReport:
    """Outcome of the every-non-edge drop test for gamma_c or gamma_t.

    ``witnesses`` maps each non-edge (u, v) to a dominating set of G+uv of
    size < k that certifies the drop; ``failures`` lists non-edges where the
    invariant refused to fall.  A complete graph has no non-edges, so for
    k >= 2 it is reported non-critical purely through ``base`` != k.
    """

    k: int
    base: int
    is_critical: bool
    witnesses: dict[tuple[int, int], int] = field(default_factory=dict)
    failures: tuple[tuple[int, int], ...] = ()

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "base": self.base,
            "is_critical": self.is_critical,
            "witnesses": {
                f"{u},{v}": sorted_bits(m) for (u, v), m in sorted(self.witnesses.items())
            },
            "failures": [list(p) for p in self.failures],
        }


def sorted_bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def _drop_witness_gc3(g: Graph, u: int, v: int) -> int | None:
    """A connected dominating set of G+uv of size <= 2, given gamma_c(g) >= 3.

    Any qualifying pair must contain u or v: a pair avoiding both is
    untouched by the new edge and would certify gamma_c(g) <= 2.
    """
    fm = g.vertex_mask
    au = g.rows[u] | bit(u) | bit(v)
    av = g.rows[v] | bit(v) | bit(u)
    if au | av == fm:
        return bit(u) | bit(v)
    for z in iter_bits(g.rows[u] & ~bit(v)):
        if au | g.rows[z] | bit(z) == fm:
            return bit(u) | bit(z)
    for z in iter_bits(g.rows[v] & ~bit(u)):
        if av | g.rows[z] | bit(z) == fm:
            return bit(v) | bit(z)
    return None


def _drop_witness_gt3(g: Graph, u: int, v: int) -> int | None:
    """A total dominating set of G+uv of size 2, given gamma_t(g) >= 3."""
    fm = g.vertex_mask
    nu = g.rows[u] | bit(v)
    nv = g.rows[v] | bit(u)
    if nu | nv == fm:
        return bit(u) | bit(v)
    for z in range(g.n):
        if z == u or z == v:
            continue
        if nu | g.rows[z] == fm:
            return bit(u) | bit(z)
        if nv | g.rows[z] == fm:
            return bit(v) | bit(z)
    return None


def is_k_gamma_c_critical(g: Graph, k: int = 3) -> CriticalityReport:
    """Does gamma_c equal k and fall below k on every single edge addition?"""
    base = gamma_c(g)
    if base != k:
        return CriticalityReport(k=k, base=base, is_critical=False)
    witnesses: dict[tuple[int, int], int] = {}
    failures: list[tuple[int, int]] = []
    for u, v in g.non_edges():
        if k == 3:
            w = _drop_witness_gc3(g, u, v)
        else:
            w = _generic_drop_witness(g.with_edge(u, v), k, total=False)
        if w is None:
            failures.append((u, v))
        else:
            witnesses[(u, v)] = w
    return CriticalityReport(
        k=k,
        base=base,
        is_critical=not failures,
        witnesses=witnesses,
        failures=tuple(failures),
    )


def is_k_gamma_t_critical(g: Graph, k: int = 3) -> CriticalityReport:
    base = gamma_t(g)
    if base != k:
        return CriticalityReport(k=k, base=base, is_critical=False)
    witnesses: dict[tuple[int, int], int] = {}
    failures: list[tuple[int, int]] = []
    for u, v in g.non_edges():
        if k == 3:
            w = _drop_witness_gt3(g, u, v)
        else:
            w = _generic_drop_witness(g.with_edge(u, v), k, total=True)
        if w is None:
            failures.append((u, v))
        else:
            witnesses[(u, v)] = w
    return CriticalityReport(
        k=k,
        base=base,
        is_critical=not failures,
        witnesses=witnesses,
        failures=tuple(failures),
    )


def _generic_drop_witness(g_plus: Graph, k: int, total: bool) -> int | None:
    accept = (
        (lambda s: totally_dominates(g_plus, s))
        if total
        else (lambda s: is_connected_dominating(g_plus, s))
    )
    hit = _first_at_most(g_plus, k - 1, accept)
    return None if hit is None else hit[1]


def drop_witnesses_all(g: Graph, u: int, v: int, k: int = 3, total: bool = False) -> list[int]:
    """Every dominating set of G+uv smaller than k, ascending by mask."""
    g_plus = g.with_edge(u, v)
    accept = (
        (lambda s: totally_dominates(g_plus, s))
        if total
        else (lambda s: is_connected_dominating(g_plus, s))
    )
    out = []
    for size in range(1, k):
        out.extend(s for s in subsets_of_size(g_plus.vertex_mask, size) if accept(s))
    return out


__all__ = [
    "CriticalityReport",
    "DisconnectedGraphError",
    "IsolatedVertexError",
    "all_min_connected_dominating_sets",
    "dominates",
    "drop_witnesses_all",
    "gamma",
    "gamma_c",
    "gamma_c_at_most",
    "gamma_t",
    "is_connected_dominating",
    "is_k_gamma_c_critical",
    "is_k_gamma_t_critical",
    "totally_dominates",
]
