"""Checks of the statement verifiers: known instances, witness soundness,
oracle agreement for the Hamiltonian decision procedure, and a small sweep
over every 3-critical graph with at most six vertices."""

from itertools import combinations

import pytest

from cdcrit.bitset import mask_of, popcount, to_indices
from cdcrit.domination import is_connected_dominating, is_k_gamma_c_critical
from cdcrit.families import (
    build_class_g1,
    build_class_g2,
    build_class_g3,
    build_cutvertex_g1,
)
from cdcrit.graphs import BudgetExceededError, new_graph
from cdcrit.theorems import (
    CHECKS,
    CutIndependencePartition,
    Facts,
    chvatal_erdos_check,
    classify_mp1,
    components_within,
    hamiltonian_connected,
    hamiltonian_pairs,
    open_problem_probe,
    run_check,
    scattering_condition,
    verify_lemma1,
    verify_lemma2,
    verify_lemma_p0,
    verify_lemma_w,
    verify_mp2,
    verify_mp3,
    verify_pm1,
    verify_thm_k,
    verify_thm_pm0,
)

import oracles


def cycle(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return new_graph(n, [(i, j) for i in range(n) for j in range(i)])


def path(n):
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture(scope="module")
def critical_n6():
    """All connected labeled 3-critical graphs with at most 6 vertices."""
    found = []
    for n in range(2, 7):
        for mask in oracles.all_graph_masks(n):
            g = oracles.graph_from_mask(n, mask)
            if not g.is_connected:
                continue
            if is_k_gamma_c_critical(g).is_critical:
                found.append(g)
    assert found
    return found


# --- lemma 1 -------------------------------------------------------------------


def test_lemma1_family_instances():
    for builder, params in [
        (build_class_g3, ((2, 2, 2),)),
        (build_class_g2, (3, 3)),
        (build_cutvertex_g1, ((1, 1),)),
    ]:
        g, _ = builder(*params)
        rep = verify_lemma1(g)
        assert rep.status == "pass", rep


def test_lemma1_not_applicable_on_k4():
    assert verify_lemma1(complete(4)).status == "not-applicable"


def test_lemma1_detects_violations_when_forced():
    # C6 is not 3-critical (its chords leave three-vertex dominating sets);
    # forcing the hypothesis exposes the size-two violation with a witness
    g = cycle(6)
    rep = verify_lemma1(g, Facts(g, critical3=True))
    assert rep.status == "fail"
    assert rep.witness["violated"] == "size-two"
    u, v = rep.witness["nonedge"]
    d = mask_of(rep.witness["set"])
    assert is_connected_dominating(g.with_edge(u, v), d)


def test_lemma1_sweep(critical_n6):
    for g in critical_n6:
        rep = verify_lemma1(g, Facts(g, critical3=True))
        assert rep.status == "pass", oracles


# --- lemma w -------------------------------------------------------------------


def test_lemmaw_class_g2():
    g, layout = build_class_g2(3, 3)
    u1, w1, v1 = layout.vertex("u1"), layout.vertex("w1"), layout.vertex("v1")
    # the triple named in the construction really is independent
    assert not g.has_edge(u1, w1)
    assert not g.has_edge(u1, v1)
    assert not g.has_edge(w1, v1)
    assert verify_lemma_w(g).status == "pass"


def test_lemmaw_no_triple():
    g = cycle(5)
    rep = verify_lemma_w(g)
    assert rep.status == "not-applicable"
    assert rep.witness["reason"] == "no independent triple"


def test_lemmaw_detects_violations_when_forced():
    g = new_graph(5, [(0, i) for i in range(1, 5)])
    rep = verify_lemma_w(g, Facts(g, critical3=True))
    assert rep.status == "fail"
    assert rep.witness["set"] == [0]


def test_lemmaw_sweep(critical_n6):
    for g in critical_n6:
        rep = verify_lemma_w(g, Facts(g, critical3=True))
        assert rep.status in ("pass", "not-applicable")


# --- lemma 2 -------------------------------------------------------------------


def recheck_lemma2_witness(g, members, witness):
    order = witness["order"]
    xs = witness["path"]
    assert sorted(order) == sorted(members)
    assert len(xs) == len(order) - 1
    assert len(set(xs)) == len(xs)
    imask = mask_of(members)
    for x in xs:
        assert not imask & (1 << x)
    for i in range(len(xs) - 1):
        assert g.has_edge(xs[i], xs[i + 1])
    for i, x in enumerate(xs):
        a_cur, a_next = order[i], order[i + 1]
        g2 = g.with_edge(a_cur, a_next)
        assert is_connected_dominating(g2, (1 << a_cur) | (1 << x))


def test_lemma2_class_g1():
    g, layout = build_class_g1((1, 1, 1, 1))
    members = [layout.vertex(f"a{i}") for i in range(5)]
    rep = verify_lemma2(g, mask_of(members))
    assert rep.status == "pass"
    recheck_lemma2_witness(g, members, rep.witness)


def test_lemma2_all_triples_class_g3():
    g, _ = build_class_g3((2, 2, 2, 2))
    count = 0
    for triple in combinations(range(g.n), 3):
        if any(g.has_edge(u, v) for u, v in combinations(triple, 2)):
            continue
        rep = verify_lemma2(g, mask_of(triple))
        assert rep.status == "pass", triple
        recheck_lemma2_witness(g, list(triple), rep.witness)
        count += 1
    assert count > 0


def test_lemma2_input_validation():
    g = cycle(5)
    with pytest.raises(ValueError):
        verify_lemma2(g, mask_of([0, 1, 3]))
    assert verify_lemma2(g, mask_of([0, 2])).status == "not-applicable"
    c6 = cycle(6)
    rep = verify_lemma2(c6, mask_of([0, 2, 4]))
    assert rep.status == "not-applicable"
    assert rep.witness["reason"] == "not 3-critical"


def test_lemma2_sweep(critical_n6):
    for g in critical_n6:
        rep = run_check("lemma2", g, Facts(g, critical3=True), {})
        assert rep.status != "fail"


# --- lemma p0 -------------------------------------------------------------------


def test_p0_family_and_sweep(critical_n6):
    g, _ = build_class_g1((1, 1, 1))
    assert verify_lemma_p0(g).status != "fail"
    for h in critical_n6:
        assert verify_lemma_p0(h, Facts(h, critical3=True)).status != "fail"


def test_p0_not_applicable_with_cut_vertex():
    g, _ = build_cutvertex_g1((1, 1))
    rep = verify_lemma_p0(g)
    assert rep.status == "not-applicable"
    assert rep.witness["reason"] == "not 2-connected"


def test_cut_independence_partition_fields():
    part = CutIndependencePartition(
        s_mask=mask_of([0, 1]),
        i_mask=mask_of([0, 2, 4]),
        h1_mask=mask_of([2, 3]),
        h2_mask=mask_of([4, 5]),
    )
    assert part.i1_mask == mask_of([2])
    assert part.i2_mask == mask_of([4])
    assert part.alpha1 == 1 and part.alpha2 == 1
    assert part.p == 2
    d = part.to_dict()
    assert d["S"] == [0, 1] and d["p"] == 2


def test_components_within():
    g = cycle(6)
    comps = components_within(g, mask_of([0, 1, 3, 4]))
    assert sorted(popcount(c) for c in comps) == [2, 2]


# --- bounds: pm0 and k ------------------------------------------------------------


def test_pm0_tight_on_class_g1():
    for sizes in [(1, 1), (2, 1, 1), (1, 1, 1, 1)]:
        g, _ = build_class_g1(sizes)
        rep = verify_thm_pm0(g)
        assert rep.status == "pass"
        assert rep.witness["alpha"] == rep.witness["kappa"] + 2


def test_pm0_k_sweep(critical_n6):
    for g in critical_n6:
        facts = Facts(g, critical3=True)
        assert verify_thm_pm0(g, facts).status == "pass"
        assert verify_thm_k(g, facts).status != "fail"


def test_k_extremal_class_g1():
    g, layout = build_class_g1((1, 1, 1))
    rep = verify_thm_k(g)
    assert rep.status == "pass"
    assert rep.witness["extremal"] is True
    assert rep.witness["vertex"] == layout.vertex("a3")


def test_k_not_applicable():
    assert verify_thm_k(complete(4)).status == "not-applicable"
    g, _ = build_cutvertex_g1((1, 1))
    rep = verify_thm_k(g)
    assert rep.status == "not-applicable"
    assert rep.witness["reason"] == "min degree below two"


# --- mp1 family ---------------------------------------------------------------


def test_mp1_class_g2_disjunct():
    g, _ = build_class_g2(3, 3)
    rep = classify_mp1(g)
    assert rep.status == "pass"
    assert rep.witness["disjunct"] == "classG2"
    assert (rep.witness["j1"], rep.witness["j2"]) == (3, 3)


def test_mp1_kappa_delta_disjunct():
    g, _ = build_cutvertex_g1((1, 1))
    rep = classify_mp1(g)
    assert rep.status == "pass"
    assert rep.witness["disjunct"] == "kappa=delta"


def test_mp1_sweep(critical_n6):
    for g in critical_n6:
        assert classify_mp1(g, Facts(g, critical3=True)).status != "fail"


def test_pm1_readings():
    g, _ = build_class_g2(3, 3)
    for mode in ("exists", "forall"):
        rep = verify_pm1(g, mode=mode)
        assert rep.status != "fail", (mode, rep)
    with pytest.raises(ValueError):
        verify_pm1(g, mode="sometimes")


def test_pm1_sweep(critical_n6):
    for g in critical_n6:
        facts = Facts(g, critical3=True)
        assert verify_pm1(g, facts, "exists").status != "fail"
        assert verify_pm1(g, facts, "forall").status != "fail"


# --- mp2 / mp3 -----------------------------------------------------------------


def test_mp2_instances():
    g, _ = build_class_g1((1, 1, 1, 1))
    facts = Facts(g)
    rep = verify_mp2(g, facts)
    assert rep.status == "pass"
    assert facts.alpha == facts.kappa + 2 == facts.delta + 2
    g3, _ = build_class_g3((2, 2, 2))
    assert verify_mp2(g3).status == "pass"
    g2, _ = build_class_g2(3, 3)
    assert verify_mp2(g2).status == "not-applicable"


def test_mp3_instances():
    g3, _ = build_class_g3((2, 2, 2))
    rep = verify_mp3(g3)
    assert rep.status == "pass"
    assert rep.witness["disjunct"] == "alpha<=kappa"
    g2, _ = build_class_g2(3, 3)
    rep = verify_mp3(g2)
    assert rep.status == "pass"
    assert rep.witness["disjunct"] == "classG2"


def test_mp2_mp3_sweep(critical_n6):
    for g in critical_n6:
        facts = Facts(g, critical3=True)
        assert verify_mp2(g, facts).status != "fail"
        assert verify_mp3(g, facts).status != "fail"


# --- hamiltonian connectivity -----------------------------------------------------


def test_ham_known_graphs():
    assert hamiltonian_connected(complete(4)).status == "pass"
    rep = hamiltonian_connected(path(4))
    assert rep.status == "fail"
    assert hamiltonian_connected(cycle(5)).status == "fail"
    assert hamiltonian_connected(new_graph(2, [(0, 1)])).status == "not-applicable"


def test_ham_fail_witness_is_first_pair():
    rep = hamiltonian_connected(path(4))
    u, v = rep.witness["pair"]
    assert (u, v) == (0, 1)
    assert not oracles.has_hamiltonian_path(path(4), 0, 1)


def test_ham_budget():
    with pytest.raises(BudgetExceededError):
        hamiltonian_connected(cycle(5), budget=4)


def test_ham_matches_oracle_n5():
    for n in range(3, 6):
        for mask in oracles.all_graph_masks(n):
            g = oracles.graph_from_mask(n, mask)
            if not g.is_connected:
                continue
            rep = hamiltonian_connected(g)
            assert (rep.status == "pass") == oracles.is_hamiltonian_connected(g), (n, mask)


def test_ham_matches_oracle_n6_sample():
    for mask in oracles.all_graph_masks(6):
        if mask % 449 != 0:
            continue
        g = oracles.graph_from_mask(6, mask)
        if not g.is_connected:
            continue
        rep = hamiltonian_connected(g)
        assert (rep.status == "pass") == oracles.is_hamiltonian_connected(g), mask


def test_ham_pairs_symmetric_bits():
    g = cycle(5)
    ends = hamiltonian_pairs(g)
    for u in range(5):
        for v in range(5):
            if u != v:
                assert bool(ends[v] & (1 << u)) == bool(ends[u] & (1 << v))


# --- scattering --------------------------------------------------------------------


def test_scatter_cycle5():
    rep = scattering_condition(cycle(5))
    assert rep.status == "fail"
    assert rep.witness["cut"] == [0, 2]
    assert rep.witness["components"] == 2


def test_scatter_complete():
    rep = scattering_condition(complete(5))
    assert rep.status == "pass"
    assert "inconclusive" not in rep.witness


def test_scatter_inconclusive_budget():
    rep = scattering_condition(cycle(12), max_cut_size=0)
    assert rep.status == "pass"
    assert rep.witness["inconclusive"] is True


def test_scatter_class_g1_witness():
    g, layout = build_class_g1((1, 1, 1, 1))
    rep = scattering_condition(g)
    assert rep.status == "fail"
    want = sorted(
        [layout.vertex("b"), layout.vertex("x")]
        + [layout.group(f"B{j}")[0] for j in (1, 2, 3)]
    )
    assert rep.witness["cut"] == want
    assert rep.witness["components"] == 5
    # the witness really disconnects the graph into that many parts
    comps = components_within(g, g.vertex_mask & ~mask_of(rep.witness["cut"]))
    assert len(comps) == 5


def test_scatter_fail_implies_ham_fail_n5():
    for n in range(3, 6):
        for mask in oracles.all_graph_masks(n):
            g = oracles.graph_from_mask(n, mask)
            if not g.is_connected:
                continue
            if scattering_condition(g).status == "fail":
                assert hamiltonian_connected(g).status == "fail", (n, mask)


# --- chvatal-erdos and the probe ------------------------------------------------


def test_ce_instances():
    assert chvatal_erdos_check(complete(5)).status == "pass"
    g3, _ = build_class_g3((2, 2, 2))
    assert chvatal_erdos_check(g3).status == "not-applicable"
    disconnected = new_graph(4, [(0, 1), (2, 3)])
    assert chvatal_erdos_check(disconnected).status == "not-applicable"


def test_ce_never_fails_small():
    for n in range(3, 6):
        for mask in oracles.all_graph_masks(n):
            g = oracles.graph_from_mask(n, mask)
            if not g.is_connected:
                continue
            assert chvatal_erdos_check(g).status != "fail", (n, mask)


def test_probe_class_g2_not_applicable():
    g, _ = build_class_g2(3, 3)
    rep = open_problem_probe(g)
    assert rep.status == "not-applicable"
    assert rep.witness["reason"] == "profile"


def test_probe_class_g3_applicable():
    g, _ = build_class_g3((2, 2, 2, 2))
    facts = Facts(g)
    rep = open_problem_probe(g, facts)
    assert facts.alpha == facts.kappa == 3
    assert facts.delta >= 4
    assert rep.status in ("pass", "fail")
    if rep.status == "fail":
        assert rep.witness["counterexample"] is True


# --- registry ---------------------------------------------------------------------


def test_registry_runs_everything():
    g, _ = build_class_g3((2, 2, 2))
    facts = Facts(g)
    for check_id in CHECKS:
        rep = run_check(check_id, g, facts, {"ham": 20, "scatter": 8, "cuts": 16})
        assert rep.check_id == check_id
        assert rep.status in ("pass", "fail", "not-applicable")
        d = rep.to_dict()
        assert d["check"] == check_id


def test_registry_unknown_check():
    with pytest.raises(ValueError):
        run_check("nope", cycle(5))
