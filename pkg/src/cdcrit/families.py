"""Constructors for the known families of 3-gamma_c-critical graphs.

Five parametric families, each returned together with a Layout mapping the
construction's role names to concrete vertex indices:

* star-forest complements with a pendant tail (``cutvertex-G1``) and their
  thickened variant with a universal-minus-{x,y} block U (``cutvertex-G2``);
  these two are exactly the critical graphs having a cut vertex,
* ``classG1(b_0..b_{s-1})``: tightness of the alpha <= kappa + 2 bound,
* ``classG2(j_1, j_2)``: alpha = kappa + 1 with kappa < delta,
* ``classG3(m_0..m_s)``: alpha = kappa < delta.

Vertex indices follow the construction order of each family's role list, so
layouts, graph6 strings and DOT files are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bit, mask_of
from .graphs import Graph, canonical_form


class FamilyParameterError(ValueError):
    """Family parameters outside the defining constraints."""


@dataclass(frozen=True)
class Layout:
    """Role names -> vertex indices; aliases name distinguished group members."""

    roles: tuple[tuple[str, tuple[int, ...]], ...]
    aliases: tuple[tuple[str, int], ...] = ()

    def group(self, name: str) -> tuple[int, ...]:
        for role, members in self.roles:
            if role == name:
                return members
        raise KeyError(name)

    def vertex(self, name: str) -> int:
        for alias, v in self.aliases:
            if alias == name:
                return v
        members = self.group(name)
        if len(members) != 1:
            raise KeyError(f"role {name!r} names {len(members)} vertices")
        return members[0]

    def mask(self, name: str) -> int:
        for alias, v in self.aliases:
            if alias == name:
                return bit(v)
        return mask_of(self.group(name))

    def labels(self) -> dict[int, str]:
        out: dict[int, str] = {}
        for role, members in self.roles:
            if len(members) == 1:
                out[members[0]] = role
            else:
                for i, v in enumerate(members):
                    out[v] = f"{role}[{i}]"
        return out

    def to_dict(self) -> dict:
        return {
            "roles": {role: list(members) for role, members in self.roles},
            "aliases": {alias: v for alias, v in self.aliases},
        }


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.family}:{','.join(str(p) for p in self.params)}"


FAMILY_NAMES = ("cutvertex-G1", "cutvertex-G2", "classG1", "classG2", "classG3")


def parse_family_spec(text: str) -> FamilySpec:
    name, sep, rest = text.partition(":")
    if not sep or not rest:
        raise FamilyParameterError(f"expected 'family:p1,p2,...', got {text!r}")
    if name not in FAMILY_NAMES:
        raise FamilyParameterError(
            f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}"
        )
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise FamilyParameterError(f"non-integer parameter in {text!r}") from None
    return FamilySpec(name, params)


def build_family(spec: FamilySpec) -> tuple[Graph, Layout]:
    if spec.family == "cutvertex-G1":
        return build_cutvertex_g1(spec.params)
    if spec.family == "cutvertex-G2":
        if len(spec.params) < 3:
            raise FamilyParameterError(
                "cutvertex-G2 takes star sizes n_1..n_r plus |U| last, r >= 2"
            )
        return build_cutvertex_g2(spec.params[:-1], spec.params[-1])
    if spec.family == "classG1":
        return build_class_g1(spec.params)
    if spec.family == "classG2":
        if len(spec.params) != 2:
            raise FamilyParameterError("classG2 takes exactly two parameters j1, j2")
        return build_class_g2(*spec.params)
    if spec.family == "classG3":
        return build_class_g3(spec.params)
    raise FamilyParameterError(f"unknown family {spec.family!r}")


# --- star forests and the cut-vertex pair -----------------------------------


def build_star_forest(star_sizes) -> tuple[Graph, Layout]:
    """Disjoint union of stars K_{1,n_i}; center c{i} then leaves w{i}_{j}."""
    star_sizes = tuple(star_sizes)
    if len(star_sizes) < 1 or any(s < 1 for s in star_sizes):
        raise FamilyParameterError("star sizes must be positive")
    roles = []
    edges = []
    idx = 0
    for i, size in enumerate(star_sizes, start=1):
        center = idx
        roles.append((f"c{i}", (center,)))
        for j in range(1, size + 1):
            idx += 1
            roles.append((f"w{i}_{j}", (idx,)))
            edges.append((center, idx))
        idx += 1
    return Graph.new(idx, edges), Layout(tuple(roles))


def _cutvertex_core(star_sizes, extra: int):
    star_sizes = tuple(star_sizes)
    if len(star_sizes) < 2:
        raise FamilyParameterError("need r >= 2 stars")
    if any(s < 1 for s in star_sizes):
        raise FamilyParameterError("star sizes must be positive")
    h, h_layout = build_star_forest(star_sizes)
    nh = h.n
    n = nh + 2 + extra
    x, y = nh, nh + 1
    hbar = h.complement()
    edges = list(hbar.edges())
    edges.append((x, y))
    leaves = [
        v for role, (v,) in h_layout.roles if role.startswith("w")
    ]
    edges.extend((x, leaf) for leaf in leaves)
    return n, x, y, edges, h_layout


def build_cutvertex_g1(star_sizes) -> tuple[Graph, Layout]:
    """Complement of a star forest, plus x joined to all leaves and pendant y."""
    n, x, y, edges, h_layout = _cutvertex_core(star_sizes, extra=0)
    g = Graph.new(n, edges)
    layout = Layout(tuple(h_layout.roles) + (("x", (x,)), ("y", (y,))))
    return g, layout


def build_cutvertex_g2(star_sizes, u_count: int) -> tuple[Graph, Layout]:
    """cutvertex-G1 plus a block U of vertices adjacent to everything but x, y."""
    if u_count < 1:
        raise FamilyParameterError("|U| must be at least 1")
    n, x, y, edges, h_layout = _cutvertex_core(star_sizes, extra=u_count)
    u_block = tuple(range(x + 2, x + 2 + u_count))
    for u in u_block:
        for z in range(n):
            if z not in (x, y, u):
                edges.append((u, z))
    g = Graph.new(n, edges)
    layout = Layout(
        tuple(h_layout.roles) + (("x", (x,)), ("y", (y,)), ("U", u_block))
    )
    return g, layout


# --- classG1: alpha = kappa + 2 witnesses ------------------------------------


def build_class_g1(b_sizes) -> tuple[Graph, Layout]:
    """Vertices a_0..a_s, blocks B_0..B_{s-1}, and x; s = len(b_sizes).

    Join rules: a_0 to x and every block; a_i (0 < i < s) to every block but
    B_i; a_s to blocks B_1..B_{s-1}; x to everything except itself, a_s and
    the marked vertex b in B_0; B_0 is a clique and so is B_1 u ... u B_{s-1}.
    """
    b_sizes = tuple(b_sizes)
    s = len(b_sizes)
    if s < 2:
        raise FamilyParameterError("classG1 needs at least two block sizes")
    if any(b < 1 for b in b_sizes):
        raise FamilyParameterError("classG1 block sizes must be positive")
    a = tuple(range(s + 1))
    blocks: list[tuple[int, ...]] = []
    idx = s + 1
    for size in b_sizes:
        blocks.append(tuple(range(idx, idx + size)))
        idx += size
    x = idx
    n = idx + 1
    b_vertex = blocks[0][0]

    edges = []
    for blk in blocks:
        edges.extend((a[0], v) for v in blk)
    edges.append((a[0], x))
    for i in range(1, s):
        for j, blk in enumerate(blocks):
            if j != i:
                edges.extend((a[i], v) for v in blk)
    for j in range(1, s):
        edges.extend((a[s], v) for v in blocks[j])
    for z in range(n):
        if z not in (x, b_vertex, a[s]):
            edges.append((x, z))
    upper = [v for blk in blocks[1:] for v in blk]
    edges.extend(
        (upper[i], upper[j]) for i in range(len(upper)) for j in range(i)
    )
    b0 = blocks[0]
    edges.extend((b0[i], b0[j]) for i in range(len(b0)) for j in range(i))

    seen = set()
    dedup = []
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            dedup.append(key)
    g = Graph.new(n, dedup)
    roles = tuple((f"a{i}", (a[i],)) for i in range(s + 1))
    roles += tuple((f"B{j}", blocks[j]) for j in range(s))
    roles += (("x", (x,)),)
    return g, Layout(roles, aliases=(("b", b_vertex),))


# --- classG2: alpha = kappa + 1, kappa < delta --------------------------------


def build_class_g2(j1: int, j2: int) -> tuple[Graph, Layout]:
    """Cliques J_1, J_2 bridged by w, w_1, each missing one of u_1, u_2 in J_2.

    v_1 hangs on J_1 alone; u_1 and u_2 are the two lowest-indexed vertices
    of J_2 (either choice gives an isomorphic graph).
    """
    if j1 < 3 or j2 < 3:
        raise FamilyParameterError("classG2 needs j1, j2 >= 3")
    jset1 = tuple(range(j1))
    jset2 = tuple(range(j1, j1 + j2))
    w, w1, v1 = j1 + j2, j1 + j2 + 1, j1 + j2 + 2
    n = j1 + j2 + 3
    u1, u2 = jset2[0], jset2[1]

    edges = [(v1, z) for z in jset1]
    edges += [(w1, z) for z in jset1]
    edges += [(w1, z) for z in jset2 if z != u1]
    edges.append((w1, w))
    edges += [(w, z) for z in jset1]
    edges += [(w, z) for z in jset2 if z != u2]
    edges += [(jset1[i], jset1[j]) for i in range(j1) for j in range(i)]
    edges += [(jset2[i], jset2[j]) for i in range(j2) for j in range(i)]

    seen = set()
    dedup = []
    for a, c in edges:
        key = (min(a, c), max(a, c))
        if key not in seen:
            seen.add(key)
            dedup.append(key)
    g = Graph.new(n, dedup)
    layout = Layout(
        (
            ("J1", jset1),
            ("J2", jset2),
            ("w", (w,)),
            ("w1", (w1,)),
            ("v1", (v1,)),
        ),
        aliases=(("u1", u1), ("u2", u2)),
    )
    return g, layout


# --- classG3: alpha = kappa < delta -------------------------------------------


def build_class_g3(m_sizes) -> tuple[Graph, Layout]:
    """Blocks M_0..M_s plus a_1..a_s; a_i joined to every block except M_i.

    M_0 is a clique, M_1 u ... u M_s is a clique, and there are no edges
    between M_0 and the upper clique except through the a_i.
    """
    m_sizes = tuple(m_sizes)
    if len(m_sizes) < 3:
        raise FamilyParameterError("classG3 needs m_0 plus at least two m_i")
    if any(m < 2 for m in m_sizes):
        raise FamilyParameterError("classG3 block sizes must be at least 2")
    s = len(m_sizes) - 1
    blocks: list[tuple[int, ...]] = []
    idx = 0
    for size in m_sizes:
        blocks.append(tuple(range(idx, idx + size)))
        idx += size
    a = tuple(range(idx, idx + s))
    n = idx + s

    edges = []
    for i in range(1, s + 1):
        for j, blk in enumerate(blocks):
            if j != i:
                edges.extend((a[i - 1], v) for v in blk)
    m0 = blocks[0]
    edges.extend((m0[i], m0[j]) for i in range(len(m0)) for j in range(i))
    upper = [v for blk in blocks[1:] for v in blk]
    edges.extend(
        (upper[i], upper[j]) for i in range(len(upper)) for j in range(i)
    )
    g = Graph.new(n, edges)
    roles = tuple((f"M{j}", blocks[j]) for j in range(s + 1))
    roles += tuple((f"a{i}", (a[i - 1],)) for i in range(1, s + 1))
    return g, Layout(roles)


# --- classG2 membership --------------------------------------------------------


def _class_g2_degree_multiset(j1: int, j2: int) -> tuple[int, ...]:
    degs = [j1] + [j1 + 2] * j1 + [j2 + 1] * (j2 - 2) + [j2] * 2 + [j1 + j2] * 2
    return tuple(sorted(degs))


def class_g2_member(g: Graph) -> tuple[int, int] | None:
    """The (j1, j2) with g isomorphic to classG2(j1, j2), or None.

    Degree multisets prune first, so the canonical-form comparison only runs
    on plausible candidates (whose heavy twin classes keep it fast).
    """
    n = g.n
    if n < 9:
        return None
    own = tuple(sorted(g.degrees))
    for j1 in range(3, n - 5):
        j2 = n - 3 - j1
        if j2 < 3:
            continue
        if own != _class_g2_degree_multiset(j1, j2):
            continue
        cand, _ = build_class_g2(j1, j2)
        if canonical_form(g, limit=max(12, n)) == canonical_form(cand, limit=max(12, n)):
            return (j1, j2)
    return None


__all__ = [
    "FAMILY_NAMES",
    "FamilyParameterError",
    "FamilySpec",
    "Layout",
    "build_class_g1",
    "build_class_g2",
    "build_class_g3",
    "build_cutvertex_g1",
    "build_cutvertex_g2",
    "build_star_forest",
    "build_family",
    "class_g2_member",
    "parse_family_spec",
]
