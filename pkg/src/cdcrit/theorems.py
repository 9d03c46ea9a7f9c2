"""Executable checks for the structure statements about 3-gamma_c-critical graphs.

Every check returns a CheckReport with status pass, fail, or not-applicable.
A fail always carries a witness that can be re-validated from scratch: the
offending non-edge and dominating set, the vertex pair with no Hamiltonian
path, the cut set with too many components, and so on. Hypotheses are tested
at runtime, so feeding an arbitrary graph to any check is safe; vacuous cases
come back not-applicable rather than pass.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bit, iter_bits, mask_of, popcount, subsets_of_size, to_indices
from .domination import (
    all_min_connected_dominating_sets,
    is_k_gamma_c_critical,
)
from .families import class_g2_member
from .graphs import BudgetExceededError, Graph
from .invariants import (
    all_maximum_independent_sets,
    all_minimum_cut_sets,
    connectivity,
    independence_number,
    min_degree,
)

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"

HAM_BUDGET_DEFAULT = 20
SCATTER_BUDGET_DEFAULT = 8
CUT_ENUM_LIMIT_DEFAULT = 16


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    status: str
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self) -> dict:
        return {"check": self.check_id, "status": self.status, "witness": self.witness}


@dataclass(frozen=True)
class CutIndependencePartition:
    """One minimum cut set with the component split used against it."""

    s_mask: int
    i_mask: int
    h1_mask: int
    h2_mask: int

    @property
    def i1_mask(self) -> int:
        return self.i_mask & self.h1_mask

    @property
    def i2_mask(self) -> int:
        return self.i_mask & self.h2_mask

    @property
    def alpha1(self) -> int:
        return popcount(self.i1_mask)

    @property
    def alpha2(self) -> int:
        return popcount(self.i2_mask)

    @property
    def p(self) -> int:
        return popcount(self.i_mask & ~self.s_mask)

    def to_dict(self) -> dict:
        return {
            "S": list(to_indices(self.s_mask)),
            "I": list(to_indices(self.i_mask)),
            "H1": list(to_indices(self.h1_mask)),
            "H2": list(to_indices(self.h2_mask)),
            "I1": list(to_indices(self.i1_mask)),
            "I2": list(to_indices(self.i2_mask)),
            "alpha1": self.alpha1,
            "alpha2": self.alpha2,
            "p": self.p,
        }


class Facts:
    """Per-graph cache so a battery of checks shares the expensive invariants."""

    def __init__(
        self,
        g: Graph,
        critical3: bool | None = None,
        alpha: int | None = None,
        kappa: int | None = None,
        delta: int | None = None,
    ):
        self.graph = g
        self._critical3 = critical3
        self._alpha = alpha
        self._kappa = kappa
        self._delta = delta
        self._g2: tuple[int, int] | None | str = "?"
        self._max_independent_sets: list[int] | None = None
        self._min_cut_sets: dict[int, list[int]] = {}

    @property
    def critical3(self) -> bool:
        if self._critical3 is None:
            self._critical3 = is_k_gamma_c_critical(self.graph).is_critical
        return self._critical3

    @property
    def alpha(self) -> int:
        if self._alpha is None:
            self._alpha = independence_number(self.graph)
        return self._alpha

    @property
    def kappa(self) -> int:
        if self._kappa is None:
            self._kappa = connectivity(self.graph)
        return self._kappa

    @property
    def delta(self) -> int:
        if self._delta is None:
            self._delta = min_degree(self.graph)
        return self._delta

    @property
    def g2_params(self) -> tuple[int, int] | None:
        if self._g2 == "?":
            self._g2 = class_g2_member(self.graph)
        return self._g2

    def max_independent_sets(self) -> list[int]:
        if self._max_independent_sets is None:
            self._max_independent_sets = all_maximum_independent_sets(self.graph)
        return self._max_independent_sets

    def min_cut_sets(self, limit: int = CUT_ENUM_LIMIT_DEFAULT) -> list[int]:
        if limit not in self._min_cut_sets:
            self._min_cut_sets[limit] = all_minimum_cut_sets(self.graph, limit=limit)
        return self._min_cut_sets[limit]


def _facts(g: Graph, facts: Facts | None) -> Facts:
    if facts is None:
        return Facts(g)
    if facts.graph is not g:
        raise ValueError("facts built for a different graph")
    return facts


def components_within(g: Graph, allowed: int) -> list[int]:
    """Connected components of the subgraph induced by a vertex mask."""
    out = []
    remaining = allowed
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        comp = g.reachable_from(v, remaining)
        out.append(comp)
        remaining &= ~comp
    return out


def _vertices(mask: int) -> list[int]:
    return list(to_indices(mask))


# --- local behavior of added edges ------------------------------------------


def verify_lemma1(g: Graph, facts: Facts | None = None) -> CheckReport:
    """Adding any non-edge uv: every smallest connected dominating set of the
    result has two vertices, meets {u, v}, and when only one endpoint is in it
    the other endpoint keeps all its old neighbors out of the set."""
    facts = _facts(g, facts)
    if not facts.critical3:
        return CheckReport("lemma1", NA, {"reason": "not 3-critical"})
    checked = 0
    for u, v in g.non_edges():
        dsets = all_min_connected_dominating_sets(g.with_edge(u, v))
        ends = bit(u) | bit(v)
        for d in dsets:
            if popcount(d) != 2:
                return CheckReport(
                    "lemma1", FAIL,
                    {"nonedge": [u, v], "set": _vertices(d), "violated": "size-two"},
                )
            if d & ends == 0:
                return CheckReport(
                    "lemma1", FAIL,
                    {"nonedge": [u, v], "set": _vertices(d), "violated": "meets-endpoints"},
                )
            if d & bit(u) and not d & bit(v) and g.rows[v] & d:
                return CheckReport(
                    "lemma1", FAIL,
                    {"nonedge": [u, v], "set": _vertices(d), "violated": "old-neighbors-of-v"},
                )
            if d & bit(v) and not d & bit(u) and g.rows[u] & d:
                return CheckReport(
                    "lemma1", FAIL,
                    {"nonedge": [u, v], "set": _vertices(d), "violated": "old-neighbors-of-u"},
                )
        checked += 1
    return CheckReport("lemma1", PASS, {"nonedges": checked})


def verify_lemma_w(g: Graph, facts: Facts | None = None) -> CheckReport:
    """When two non-adjacent vertices share a common non-neighbor, every
    smallest connected dominating set after joining them contains exactly one
    of the two."""
    facts = _facts(g, facts)
    if not facts.critical3:
        return CheckReport("lemmaw", NA, {"reason": "not 3-critical"})
    full = g.vertex_mask
    found = False
    checked = 0
    for u, v in g.non_edges():
        third = full & ~(g.rows[u] | g.rows[v]) & ~bit(u) & ~bit(v)
        if not third:
            continue
        found = True
        ends = bit(u) | bit(v)
        for d in all_min_connected_dominating_sets(g.with_edge(u, v)):
            if popcount(d & ends) != 1:
                r = (third & -third).bit_length() - 1
                return CheckReport(
                    "lemmaw", FAIL,
                    {"pair": [u, v], "third": r, "set": _vertices(d)},
                )
        checked += 1
    if not found:
        return CheckReport("lemmaw", NA, {"reason": "no independent triple"})
    return CheckReport("lemmaw", PASS, {"pairs": checked})


def _lemma2_search(g: Graph, members: list[int]) -> tuple[list[int], list[int]] | None:
    p = len(members)
    outside = g.vertex_mask & ~mask_of(members)
    rows = g.rows
    full = g.vertex_mask

    def dominating_pair(a_cur: int, x_cur: int, a_next: int) -> bool:
        if not rows[a_cur] & bit(x_cur):
            return False
        covered = rows[a_cur] | bit(a_cur) | bit(a_next) | rows[x_cur] | bit(x_cur)
        return covered == full

    def extend(order: list[int], path: list[int], used_a: int, used_x: int):
        i = len(order)
        if i == p:
            return order, path
        for a_next in members:
            if used_a & bit(a_next):
                continue
            if not order:
                got = extend([a_next], path, used_a | bit(a_next), used_x)
                if got:
                    return got
                continue
            a_cur = order[-1]
            cand = outside & ~used_x
            if path:
                cand &= rows[path[-1]]
            for x_cur in iter_bits(cand):
                if dominating_pair(a_cur, x_cur, a_next):
                    got = extend(
                        order + [a_next], path + [x_cur],
                        used_a | bit(a_next), used_x | bit(x_cur),
                    )
                    if got:
                        return got
        return None

    return extend([], [], 0, 0)


def verify_lemma2(g: Graph, independent: int, facts: Facts | None = None) -> CheckReport:
    """An independent set of size p >= 3 can be ordered a_1..a_p alongside a
    path x_1..x_{p-1} outside it so that each {a_i, x_i} becomes a connected
    dominating pair once a_i a_{i+1} is added."""
    facts = _facts(g, facts)
    members = _vertices(independent)
    for i, u in enumerate(members):
        for v in members[:i]:
            if g.has_edge(u, v):
                raise ValueError(f"vertex set is not independent: edge {v}-{u}")
    if len(members) < 3:
        return CheckReport("lemma2", NA, {"reason": "fewer than three vertices"})
    if not facts.critical3:
        return CheckReport("lemma2", NA, {"reason": "not 3-critical"})
    got = _lemma2_search(g, members)
    if got is None:
        return CheckReport("lemma2", FAIL, {"independent": members, "reason": "search exhausted"})
    order, path = got
    return CheckReport("lemma2", PASS, {"order": order, "path": path})


def _lemma2_over_all_maximum_sets(g: Graph, facts: Facts | None = None) -> CheckReport:
    facts = _facts(g, facts)
    if not facts.critical3:
        return CheckReport("lemma2", NA, {"reason": "not 3-critical"})
    if facts.alpha < 3:
        return CheckReport("lemma2", NA, {"reason": "alpha below three"})
    last = None
    for imask in facts.max_independent_sets():
        rep = verify_lemma2(g, imask, facts)
        if rep.status == FAIL:
            return rep
        if rep.status == PASS:
            last = rep
    if last is None:
        return CheckReport("lemma2", NA, {"reason": "no applicable set"})
    return CheckReport("lemma2", PASS, {"sets": len(facts.max_independent_sets())})


def _valid_split_exists(sizes: list[int]) -> int | None:
    """An assignment (bitmask over component indices) with both sides >= 2."""
    m = len(sizes)
    total = sum(sizes)
    for assign in range(1, 1 << (m - 1)):
        side1 = sum(sizes[i] for i in range(m) if assign >> i & 1)
        if side1 >= 2 and total - side1 >= 2:
            return assign
    return None


def verify_lemma_p0(
    g: Graph, facts: Facts | None = None, cut_limit: int = CUT_ENUM_LIMIT_DEFAULT
) -> CheckReport:
    """Whenever a minimum cut set S admits a two-sided component split with
    both sides of size >= 2 and a maximum independent set has p >= 3 vertices
    off S, then S carries at least p - 1 vertices outside that set."""
    facts = _facts(g, facts)
    if not facts.critical3:
        return CheckReport("p0", NA, {"reason": "not 3-critical"})
    if facts.kappa < 2:
        return CheckReport("p0", NA, {"reason": "not 2-connected"})
    applicable = 0
    for s_mask in facts.min_cut_sets(cut_limit):
        comps = components_within(g, g.vertex_mask & ~s_mask)
        sizes = [popcount(c) for c in comps]
        assign = _valid_split_exists(sizes)
        if assign is None:
            continue
        h1 = 0
        for i, comp in enumerate(comps):
            if assign >> i & 1:
                h1 |= comp
        h2 = g.vertex_mask & ~s_mask & ~h1
        for i_mask in facts.max_independent_sets():
            part = CutIndependencePartition(s_mask, i_mask, h1, h2)
            if part.p < 3:
                continue
            applicable += 1
            if popcount(s_mask & ~i_mask) < part.p - 1:
                return CheckReport("p0", FAIL, part.to_dict())
    if not applicable:
        return CheckReport("p0", NA, {"reason": "hypotheses never met"})
    return CheckReport("p0", PASS, {"pairs": applicable})


# --- global bounds ------------------------------------------------------------


def verify_thm_pm0(g: Graph, facts: Facts | None = None) -> CheckReport:
    """Independence number at most connectivity plus two."""
    facts = _facts(g, facts)
    if not facts.critical3:
        return CheckReport("pm0", NA, {"reason": "not 3-critical"})
    values = {"alpha": facts.alpha, "kappa": facts.kappa}
    if facts.alpha <= facts.kappa + 2:
        return CheckReport("pm0", PASS, values)
    return CheckReport("pm0", FAIL, values)


def verify_thm_k(g: Graph, facts: Facts | None = None) -> CheckReport:
    """Independence number at most min degree plus two; in the extremal case
    the minimum-degree vertex is unique and its closed neighborhood is a
    clique."""
    facts = _facts(g, facts)
    if not facts.critical3:
        return CheckReport("k", NA, {"reason": "not 3-critical"})
    if facts.delta < 2:
        return CheckReport("k", NA, {"reason": "min degree below two"})
    values = {"alpha": facts.alpha, "delta": facts.delta}
    if facts.alpha > facts.delta + 2:
        return CheckReport("k", FAIL, dict(values, violated="bound"))
    if facts.alpha == facts.delta + 2:
        lows = [v for v in range(g.n) if g.degree(v) == facts.delta]
        if len(lows) != 1:
            return CheckReport(
                "k", FAIL, dict(values, violated="unique-min-degree", vertices=lows)
            )
        x = lows[0]
        closed = g.closed_neighborhood(x)
        for v in iter_bits(closed):
            if closed & ~(g.rows[v] | bit(v)):
                return CheckReport(
                    "k", FAIL,
                    dict(values, violated="closed-neighborhood-clique", vertex=x),
                )
        return CheckReport("k", PASS, dict(values, extremal=True, vertex=x))
    return CheckReport("k", PASS, dict(values, extremal=False))


def classify_mp1(g: Graph, facts: Facts | None = None) -> CheckReport:
    """alpha >= kappa + 1 forces either kappa = delta or membership in the
    classG2 family; records which branch held."""
    facts = _facts(g, facts)
    if not facts.critical3:
        return CheckReport("mp1", NA, {"reason": "not 3-critical"})
    if facts.alpha < facts.kappa + 1:
        return CheckReport("mp1", NA, {"reason": "alpha <= kappa"})
    values = {"alpha": facts.alpha, "kappa": facts.kappa, "delta": facts.delta}
    if facts.kappa == facts.delta:
        return CheckReport("mp1", PASS, dict(values, disjunct="kappa=delta"))
    params = facts.g2_params
    if params is not None:
        return CheckReport(
            "mp1", PASS, dict(values, disjunct="classG2", j1=params[0], j2=params[1])
        )
    return CheckReport("mp1", FAIL, values)


def verify_pm1(
    g: Graph,
    facts: Facts | None = None,
    mode: str = "exists",
    cut_limit: int = CUT_ENUM_LIMIT_DEFAULT,
) -> CheckReport:
    """Nearly independent minimum cut (at most one vertex outside a maximum
    independent set) plus kappa < delta and alpha >= kappa + 1 forces classG2
    membership. The hypothesis quantifier over (cut, independent-set) pairs is
    ambiguous, so both readings ship: mode 'exists' fires when some pair is
    nearly independent, mode 'forall' only when all pairs are."""
    if mode not in ("exists", "forall"):
        raise ValueError(f"mode must be 'exists' or 'forall', got {mode!r}")
    check_id = f"pm1-{mode}"
    facts = _facts(g, facts)
    if not facts.critical3:
        return CheckReport(check_id, NA, {"reason": "not 3-critical"})
    if facts.alpha < facts.kappa + 1 or facts.kappa >= facts.delta:
        return CheckReport(check_id, NA, {"reason": "numeric hypotheses fail"})
    pairs = [
        (s, i)
        for s in facts.min_cut_sets(cut_limit)
        for i in facts.max_independent_sets()
    ]
    near = [(s, i) for s, i in pairs if popcount(s & ~i) <= 1]
    if mode == "exists":
        if not near:
            return CheckReport(check_id, NA, {"reason": "no nearly independent cut"})
        s, i = near[0]
    else:
        if len(near) != len(pairs):
            return CheckReport(
                check_id, NA, {"reason": "some pair has |S-I| >= 2"}
            )
        s, i = pairs[0]
    evidence = {"S": _vertices(s), "I": _vertices(i)}
    params = facts.g2_params
    if params is not None:
        return CheckReport(check_id, PASS, dict(evidence, j1=params[0], j2=params[1]))
    return CheckReport(check_id, FAIL, evidence)


def verify_mp2(g: Graph, facts: Facts | None = None) -> CheckReport:
    """Outside the classG2 family, alpha = kappa + q and alpha = delta + q are
    equivalent for q in {1, 2}."""
    facts = _facts(g, facts)
    if not facts.critical3:
        return CheckReport("mp2", NA, {"reason": "not 3-critical"})
    if facts.g2_params is not None:
        return CheckReport("mp2", NA, {"reason": "classG2 member"})
    values = {"alpha": facts.alpha, "kappa": facts.kappa, "delta": facts.delta}
    for q in (1, 2):
        if (facts.alpha == facts.kappa + q) != (facts.alpha == facts.delta + q):
            return CheckReport("mp2", FAIL, dict(values, q=q))
    return CheckReport("mp2", PASS, values)


def verify_mp3(g: Graph, facts: Facts | None = None) -> CheckReport:
    """kappa strictly below delta (with delta >= 2) forces alpha <= kappa or
    classG2 membership."""
    facts = _facts(g, facts)
    if not facts.critical3:
        return CheckReport("mp3", NA, {"reason": "not 3-critical"})
    if facts.delta < 2 or facts.kappa > facts.delta - 1:
        return CheckReport("mp3", NA, {"reason": "hypotheses fail"})
    values = {"alpha": facts.alpha, "kappa": facts.kappa, "delta": facts.delta}
    if facts.alpha <= facts.kappa:
        return CheckReport("mp3", PASS, dict(values, disjunct="alpha<=kappa"))
    params = facts.g2_params
    if params is not None:
        return CheckReport(
            "mp3", PASS, dict(values, disjunct="classG2", j1=params[0], j2=params[1])
        )
    return CheckReport("mp3", FAIL, values)


# --- Hamiltonian machinery ------------------------------------------------------


def hamiltonian_pairs(g: Graph, budget: int = HAM_BUDGET_DEFAULT) -> list[int]:
    """For each end vertex, the mask of start vertices joined to it by a
    Hamiltonian path. One subset-DP pass covers all starts simultaneously."""
    n = g.n
    if n > budget:
        raise BudgetExceededError(f"Hamiltonian DP limited to {budget} vertices, got {n}")
    rows = g.rows
    size = (1 << n) * n
    dp = [0] * size
    for v in range(n):
        dp[(1 << v) * n + v] = 1 << v
    for mask in range(1, 1 << n):
        base = mask * n
        rest = mask
        while rest:
            e = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            cur = dp[base + e]
            if not cur:
                continue
            ext = rows[e] & ~mask
            while ext:
                w = (ext & -ext).bit_length() - 1
                ext &= ext - 1
                dp[(mask | (1 << w)) * n + w] |= cur
    full_base = ((1 << n) - 1) * n
    return [dp[full_base + e] for e in range(n)]


def hamiltonian_connected(g: Graph, budget: int = HAM_BUDGET_DEFAULT) -> CheckReport:
    """Every vertex pair joined by a Hamiltonian path; fail carries the first
    pair without one."""
    if g.n < 3:
        return CheckReport("ham", NA, {"reason": "fewer than three vertices"})
    ends = hamiltonian_pairs(g, budget)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not ends[v] & bit(u):
                return CheckReport("ham", FAIL, {"pair": [u, v]})
    return CheckReport("ham", PASS, {"pairs": g.n * (g.n - 1) // 2})


def scattering_condition(g: Graph, max_cut_size: int = SCATTER_BUDGET_DEFAULT) -> CheckReport:
    """Necessary condition for Hamiltonian connectedness: every disconnecting
    set S leaves at most |S| - 1 components. Sweeps cut sizes ascending and
    reports the first violating set; a clean sweep below the budget is an
    inconclusive pass."""
    n = g.n
    searched = min(max_cut_size, n - 2)
    for k in range(1, searched + 1):
        for s_mask in subsets_of_size(g.vertex_mask, k):
            comps = components_within(g, g.vertex_mask & ~s_mask)
            if len(comps) < 2:
                continue
            if len(comps) >= k:
                return CheckReport(
                    "scatter", FAIL,
                    {"cut": _vertices(s_mask), "components": len(comps)},
                )
    witness = {"searched_up_to": searched}
    if searched < n - 2:
        witness["inconclusive"] = True
    return CheckReport("scatter", PASS, witness)


def chvatal_erdos_check(
    g: Graph, facts: Facts | None = None, budget: int = HAM_BUDGET_DEFAULT
) -> CheckReport:
    """Independence number strictly below connectivity must give Hamiltonian
    connectedness; a fail would expose a solver bug, not a counterexample."""
    facts = _facts(g, facts)
    if not g.is_connected:
        return CheckReport("ce", NA, {"reason": "disconnected"})
    if facts.alpha >= facts.kappa:
        return CheckReport(
            "ce", NA,
            {"reason": "alpha >= kappa", "alpha": facts.alpha, "kappa": facts.kappa},
        )
    ham = hamiltonian_connected(g, budget)
    if ham.status == PASS:
        return CheckReport("ce", PASS, {"alpha": facts.alpha, "kappa": facts.kappa})
    return CheckReport("ce", FAIL, ham.witness)


def open_problem_probe(
    g: Graph, facts: Facts | None = None, budget: int = HAM_BUDGET_DEFAULT
) -> CheckReport:
    """Does 3 <= alpha = kappa <= delta - 1 force Hamiltonian connectedness?
    A fail here is a genuine counterexample to the open question."""
    facts = _facts(g, facts)
    if not facts.critical3:
        return CheckReport("open-problem", NA, {"reason": "not 3-critical"})
    values = {"alpha": facts.alpha, "kappa": facts.kappa, "delta": facts.delta}
    if not (3 <= facts.alpha == facts.kappa <= facts.delta - 1):
        return CheckReport("open-problem", NA, dict(values, reason="profile"))
    ham = hamiltonian_connected(g, budget)
    if ham.status == PASS:
        return CheckReport("open-problem", PASS, values)
    return CheckReport(
        "open-problem", FAIL, dict(values, pair=ham.witness["pair"], counterexample=True)
    )


# --- registry -------------------------------------------------------------------


def _run_ham(g, facts, budgets):
    return hamiltonian_connected(g, budgets.get("ham", HAM_BUDGET_DEFAULT))


def _run_scatter(g, facts, budgets):
    return scattering_condition(g, budgets.get("scatter", SCATTER_BUDGET_DEFAULT))


def _run_ce(g, facts, budgets):
    return chvatal_erdos_check(g, facts, budgets.get("ham", HAM_BUDGET_DEFAULT))


def _run_open(g, facts, budgets):
    return open_problem_probe(g, facts, budgets.get("ham", HAM_BUDGET_DEFAULT))


def _run_p0(g, facts, budgets):
    return verify_lemma_p0(g, facts, budgets.get("cuts", CUT_ENUM_LIMIT_DEFAULT))


def _run_pm1_exists(g, facts, budgets):
    return verify_pm1(g, facts, "exists", budgets.get("cuts", CUT_ENUM_LIMIT_DEFAULT))


def _run_pm1_forall(g, facts, budgets):
    return verify_pm1(g, facts, "forall", budgets.get("cuts", CUT_ENUM_LIMIT_DEFAULT))


CHECKS = {
    "lemma1": lambda g, facts, budgets: verify_lemma1(g, facts),
    "lemmaw": lambda g, facts, budgets: verify_lemma_w(g, facts),
    "lemma2": lambda g, facts, budgets: _lemma2_over_all_maximum_sets(g, facts),
    "p0": _run_p0,
    "pm0": lambda g, facts, budgets: verify_thm_pm0(g, facts),
    "k": lambda g, facts, budgets: verify_thm_k(g, facts),
    "mp1": lambda g, facts, budgets: classify_mp1(g, facts),
    "pm1-exists": _run_pm1_exists,
    "pm1-forall": _run_pm1_forall,
    "mp2": lambda g, facts, budgets: verify_mp2(g, facts),
    "mp3": lambda g, facts, budgets: verify_mp3(g, facts),
    "ham": _run_ham,
    "scatter": _run_scatter,
    "ce": _run_ce,
    "open-problem": _run_open,
}


def run_check(
    check_id: str, g: Graph, facts: Facts | None = None, budgets: dict | None = None
) -> CheckReport:
    if check_id not in CHECKS:
        raise ValueError(f"unknown check {check_id!r}; known: {', '.join(sorted(CHECKS))}")
    return CHECKS[check_id](g, _facts(g, facts), budgets or {})


__all__ = [
    "CHECKS",
    "CheckReport",
    "CutIndependencePartition",
    "FAIL",
    "Facts",
    "NA",
    "PASS",
    "chvatal_erdos_check",
    "classify_mp1",
    "components_within",
    "hamiltonian_connected",
    "hamiltonian_pairs",
    "open_problem_probe",
    "run_check",
    "scattering_condition",
    "verify_lemma1",
    "verify_lemma2",
    "verify_lemma_p0",
    "verify_lemma_w",
    "verify_mp2",
    "verify_mp3",
    "verify_pm1",
    "verify_thm_k",
    "verify_thm_pm0",
]
