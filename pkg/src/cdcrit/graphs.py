"""Immutable simple graphs on at most 64 vertices, bit-mask adjacency.

A graph stores one int per vertex: ``rows[v]`` is the open-neighborhood mask
of v.  Simple and undirected, so rows are symmetric and the diagonal is
always clear.  Vertices are 0..n-1; every vertex-set argument and result is a
bit mask (see bitset).

Also here: the graph6 codec (bit-exact, byte-offset diagnostics), a canonical
form for isomorphism tests on small graphs, and DOT export.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .bitset import bit, full_mask, iter_bits, mask_of, to_indices

MAX_VERTICES = 64
CANONICAL_DEFAULT_LIMIT = 12


class CapacityError(ValueError):
    """Vertex count outside the supported range 1..64."""


class BudgetExceededError(RuntimeError):
    """An exact search was asked to exceed its configured work budget."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the first offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise IndexError(f"vertex {v} out of range for n={n}")


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    # --- construction ---------------------------------------------------

    @staticmethod
    def new(n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        if not 1 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            rows[u] |= bit(v)
            rows[v] |= bit(u)
        return Graph(n, tuple(rows))

    def with_edge(self, u: int, v: int) -> "Graph":
        _check_vertex(u, self.n)
        _check_vertex(v, self.n)
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        rows = list(self.rows)
        rows[u] |= bit(v)
        rows[v] |= bit(u)
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        _check_vertex(u, self.n)
        _check_vertex(v, self.n)
        rows = list(self.rows)
        rows[u] &= ~bit(v)
        rows[v] &= ~bit(u)
        return Graph(self.n, tuple(rows))

    def remove_vertices(self, vertices: Iterable[int] | int) -> tuple["Graph", dict[int, int]]:
        """Delete a vertex set, relabel the rest; returns (graph, old->new map)."""
        drop = vertices if isinstance(vertices, int) else mask_of(vertices)
        if drop & ~full_mask(self.n):
            raise IndexError("vertex out of range in removal set")
        keep = [v for v in range(self.n) if not drop >> v & 1]
        if not keep:
            raise CapacityError("removal would leave an empty graph")
        relabel = {old: new for new, old in enumerate(keep)}
        rows = []
        for old in keep:
            row = 0
            for w in iter_bits(self.rows[old] & ~drop):
                row |= bit(relabel[w])
            rows.append(row)
        return Graph(len(keep), tuple(rows)), relabel

    # --- local structure ------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(u, self.n)
        _check_vertex(v, self.n)
        return bool(self.rows[u] >> v & 1)

    def open_neighborhood(self, v: int) -> int:
        _check_vertex(v, self.n)
        return self.rows[v]

    def closed_neighborhood(self, v: int) -> int:
        _check_vertex(v, self.n)
        return self.rows[v] | bit(v)

    def degree(self, v: int) -> int:
        _check_vertex(v, self.n)
        return self.rows[v].bit_count()

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in iter_bits(self.rows[v] & (bit(v) - 1)):
                yield (u, v)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            missing = ~self.rows[v] & (bit(v) - 1)
            for u in iter_bits(missing):
                yield (u, v)

    @property
    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    # --- global structure -----------------------------------------------

    def reachable_from(self, v: int, within: int | None = None) -> int:
        """Mask of vertices reachable from v inside the induced mask ``within``."""
        allowed = self.vertex_mask if within is None else within
        seen = bit(v) & allowed
        frontier = seen
        while frontier:
            grow = 0
            for w in iter_bits(frontier):
                grow |= self.rows[w]
            frontier = grow & allowed & ~seen
            seen |= frontier
        return seen

    @property
    def is_connected(self) -> bool:
        return self.reachable_from(0) == self.vertex_mask

    def components(self) -> list[int]:
        """Connected components as masks, ordered by smallest member vertex."""
        out = []
        remaining = self.vertex_mask
        while remaining:
            v = (remaining & -remaining).bit_length() - 1
            comp = self.reachable_from(v, remaining)
            out.append(comp)
            remaining &= ~comp
        return out

    def is_connected_induced(self, subset: int) -> bool:
        """Connectivity of the subgraph induced by a nonempty vertex mask."""
        v = (subset & -subset).bit_length() - 1
        return self.reachable_from(v, subset) == subset

    def complement(self) -> "Graph":
        fm = self.vertex_mask
        return Graph(self.n, tuple(~row & fm & ~bit(v) for v, row in enumerate(self.rows)))


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    return Graph.new(n, edges)


# --- graph6 codec --------------------------------------------------------
#
# Upper-triangle bits in column order (0,1),(0,2),(1,2),(0,3),...; packed
# MSB-first into sextets, each printed as chr(value + 63).  Vertex counts
# 63..258047 use the '~' + 3-sextet long form.

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = g.rows[v] & (bit(v) - 1)
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\n")
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)

    def sextet(i: int) -> int:
        c = ord(s[i])
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside graph6 range 63..126", base + i)
        return c - 63

    pos = 0
    first = sextet(0)
    if first == 63:  # '~': long vertex count
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("graph6 8-byte vertex counts exceed capacity", base + 1)
        if len(s) < 4:
            raise Graph6Error("truncated long-form vertex count", base + len(s))
        n = sextet(1) << 12 | sextet(2) << 6 | sextet(3)
        if n < 63:
            raise Graph6Error("non-minimal long-form vertex count", base + 1)
        pos = 4
    else:
        n = first
        pos = 1
    if not 1 <= n <= MAX_VERTICES:
        raise CapacityError(f"vertex count {n} outside 1..{MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(s) - pos != nchars:
        where = base + min(len(s), pos + nchars)
        raise Graph6Error(
            f"expected {nchars} adjacency bytes for n={n}, got {len(s) - pos}", where
        )
    rows = [0] * n
    k = 0  # bit cursor over the upper triangle in column order
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for i in range(nchars):
        val = sextet(pos + i)
        for j in range(5, -1, -1):
            b = val >> j & 1
            if k < nbits:
                if b:
                    u, v = pairs[k]
                    rows[u] |= bit(v)
                    rows[v] |= bit(u)
                k += 1
            elif b:
                raise Graph6Error("nonzero padding bit", base + pos + i)
    return Graph(n, tuple(rows))


# --- canonical form -------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Minimum upper-triangle bit string over degree-respecting relabelings.

    Two graphs are isomorphic iff their forms compare equal: an isomorphism
    preserves degrees, so both searches minimize over identical orbit sets.
    ``key`` is the graph6 encoding of the canonically relabeled graph.
    """

    n: int
    key: str


def canonical_form(g: Graph, limit: int = CANONICAL_DEFAULT_LIMIT) -> CanonicalForm:
    if g.n > limit:
        raise BudgetExceededError(
            f"canonical form limited to n <= {limit}, got n={g.n}"
        )
    n = g.n
    degs = g.degrees
    template = sorted(degs)
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(degs[v], []).append(v)

    best: list[int] | None = None
    best_perm: list[int] | None = None
    assigned: list[int] = []
    generation = 0

    def search(used: int, rowbits: list[int], tight: bool) -> None:
        # tight: the current rowbits prefix equals best's prefix, so best[k]
        # is a live bound.  A best update deep in a child always extends the
        # current prefix, which re-tightens the bound for later siblings.
        nonlocal best, best_perm, generation
        k = len(assigned)
        if k == n:
            best = rowbits.copy()
            best_perm = assigned.copy()
            generation += 1
            return
        cands = []
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        for v in by_deg.get(template[k], ()):
            if used >> v & 1:
                continue
            # Twin pruning: swapping open twins (equal rows) or closed twins
            # (equal rows once each includes itself) is an automorphism, so
            # one representative per twin class covers the whole orbit.
            row = g.rows[v]
            if row in seen_open or row | bit(v) in seen_closed:
                continue
            seen_open.add(row)
            seen_closed.add(row | bit(v))
            rb = 0
            for w in assigned:
                rb = rb << 1 | (row >> w & 1)
            cands.append((rb, v))
        cands.sort()
        for rb, v in cands:
            if best is not None and tight and rb > best[k]:
                break  # candidates ascend, the rest only get worse
            child_tight = best is None or (tight and rb == best[k])
            mark = generation
            assigned.append(v)
            rowbits.append(rb)
            search(used | bit(v), rowbits, child_tight)
            rowbits.pop()
            assigned.pop()
            if generation != mark:
                tight = True

    search(0, [], True)
    assert best_perm is not None
    relabel = {old: pos for pos, old in enumerate(best_perm)}
    canon = Graph.new(n, [(relabel[u], relabel[v]) for u, v in g.edges()])
    return CanonicalForm(n, to_graph6(canon))


def is_isomorphic(g: Graph, h: Graph, limit: int = CANONICAL_DEFAULT_LIMIT) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g, limit) == canonical_form(h, limit)


# --- DOT export -----------------------------------------------------------


def to_dot(g: Graph, labels: dict[int, str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in sorted(g.edges()):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
