"""Brute-force reference implementations.

Everything here scans all subsets or all permutations with no pruning beyond
feasibility, and works on Python sets instead of bit tricks wherever
practical.  The point is independence from the package's solvers: agreement
between the two routes is evidence, shared code would be none.
"""

from __future__ import annotations

from itertools import combinations, permutations

from cdcrit.graphs import Graph


def vertex_sets(n: int):
    for r in range(n + 1):
        yield from (frozenset(c) for c in combinations(range(n), r))


def adj(g: Graph, u: int, v: int) -> bool:
    return bool(g.rows[u] >> v & 1)


def components_as_sets(g: Graph, inside: frozenset[int] | None = None) -> list[set[int]]:
    todo = set(range(g.n)) if inside is None else set(inside)
    comps = []
    while todo:
        start = min(todo)
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in list(todo):
                if y not in comp and adj(g, x, y):
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
        todo -= comp
    return comps


def is_connected(g: Graph, inside: frozenset[int] | None = None) -> bool:
    scope = set(range(g.n)) if inside is None else set(inside)
    if not scope:
        return False
    return len(components_as_sets(g, frozenset(scope))) == 1


def independence_number(g: Graph) -> int:
    best = 0
    for s in vertex_sets(g.n):
        if all(not adj(g, u, v) for u, v in combinations(sorted(s), 2)):
            best = max(best, len(s))
    return best


def maximum_independent_sets(g: Graph) -> list[frozenset[int]]:
    alpha = independence_number(g)
    out = []
    for s in vertex_sets(g.n):
        if len(s) == alpha and all(
            not adj(g, u, v) for u, v in combinations(sorted(s), 2)
        ):
            out.append(s)
    return out


def dominates(g: Graph, s: frozenset[int]) -> bool:
    covered = set(s)
    for v in s:
        covered.update(w for w in range(g.n) if adj(g, v, w))
    return len(covered) == g.n


def totally_dominates(g: Graph, s: frozenset[int]) -> bool:
    covered = set()
    for v in s:
        covered.update(w for w in range(g.n) if adj(g, v, w))
    return len(covered) == g.n


def gamma(g: Graph) -> int:
    return min(len(s) for s in vertex_sets(g.n) if s and dominates(g, s))


def gamma_c(g: Graph) -> int:
    assert is_connected(g)
    return min(
        len(s)
        for s in vertex_sets(g.n)
        if s and dominates(g, s) and is_connected(g, s)
    )


def gamma_t(g: Graph) -> int:
    assert all(g.rows[v] for v in range(g.n))
    return min(len(s) for s in vertex_sets(g.n) if s and totally_dominates(g, s))


def kappa(g: Graph) -> int:
    """Vertex connectivity: smallest separating set, n-1 for complete graphs."""
    if all(adj(g, u, v) for u, v in combinations(range(g.n), 2)):
        return g.n - 1
    best = g.n
    for s in vertex_sets(g.n):
        rest = frozenset(range(g.n)) - s
        if len(rest) >= 2 and len(components_as_sets(g, rest)) >= 2:
            best = min(best, len(s))
    return best


def minimum_cut_sets(g: Graph) -> list[frozenset[int]]:
    if all(adj(g, u, v) for u, v in combinations(range(g.n), 2)):
        return []
    k = kappa(g)
    out = []
    for s in vertex_sets(g.n):
        if len(s) != k:
            continue
        rest = frozenset(range(g.n)) - s
        if len(rest) >= 2 and len(components_as_sets(g, rest)) >= 2:
            out.append(s)
    return out


def has_hamiltonian_path(g: Graph, u: int, v: int) -> bool:
    if g.n == 1:
        return u == v
    for order in permutations(set(range(g.n)) - {u, v}):
        walk = (u, *order, v)
        if all(adj(g, walk[i], walk[i + 1]) for i in range(g.n - 1)):
            return True
    return False


def is_hamiltonian_connected(g: Graph) -> bool:
    return all(
        has_hamiltonian_path(g, u, v) for u, v in combinations(range(g.n), 2)
    )


def is_3gc_critical(g: Graph) -> bool:
    if not is_connected(g) or g.n < 3:
        return False
    if gamma_c(g) != 3:
        return False
    for u, v in combinations(range(g.n), 2):
        if not adj(g, u, v) and gamma_c(g.with_edge(u, v)) >= 3:
            return False
    return True


def is_3gt_critical(g: Graph) -> bool:
    if any(not g.rows[v] for v in range(g.n)):
        return False
    if gamma_t(g) != 3:
        return False
    for u, v in combinations(range(g.n), 2):
        if not adj(g, u, v) and gamma_t(g.with_edge(u, v)) >= 3:
            return False
    return True


def all_graph_masks(n: int):
    """Every labeled simple graph as an edge mask, bit v(v-1)/2+u for u<v."""
    yield from range(1 << (n * (n - 1) // 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if mask >> k & 1:
                edges.append((u, v))
            k += 1
    return Graph.new(n, edges)
