"""Cross-checks of the domination solvers and criticality tests."""

import pytest

from cdcrit.bitset import mask_of, to_indices
from cdcrit.domination import (
    CriticalityReport,
    DisconnectedGraphError,
    IsolatedVertexError,
    all_min_connected_dominating_sets,
    dominates,
    drop_witnesses_all,
    gamma,
    gamma_c,
    gamma_c_at_most,
    gamma_t,
    is_connected_dominating,
    is_k_gamma_c_critical,
    is_k_gamma_t_critical,
    totally_dominates,
)
from cdcrit.graphs import BudgetExceededError, new_graph

import oracles


def cycle(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return new_graph(n, [(i, j) for i in range(n) for j in range(i)])


def connected_graphs(n):
    for mask in oracles.all_graph_masks(n):
        g = oracles.graph_from_mask(n, mask)
        if g.is_connected:
            yield g


def test_predicates():
    g = cycle(5)
    assert dominates(g, mask_of([0, 2]))
    assert not dominates(g, mask_of([0]))
    assert totally_dominates(g, mask_of([0, 1, 2, 3]))
    assert not totally_dominates(g, mask_of([0, 2]))
    assert is_connected_dominating(g, mask_of([0, 1, 2]))
    assert not is_connected_dominating(g, mask_of([0, 2, 4]))


def test_gamma_matches_oracle():
    for n in range(1, 6):
        for mask in oracles.all_graph_masks(n):
            g = oracles.graph_from_mask(n, mask)
            assert gamma(g) == oracles.gamma(g), (n, mask)


def test_gamma_c_matches_oracle():
    for n in range(1, 6):
        for g in connected_graphs(n):
            assert gamma_c(g) == oracles.gamma_c(g)


def test_gamma_t_matches_oracle():
    for n in range(2, 6):
        for mask in oracles.all_graph_masks(n):
            g = oracles.graph_from_mask(n, mask)
            if any(d == 0 for d in g.degrees):
                continue
            assert gamma_t(g) == oracles.gamma_t(g), (n, mask)


def test_gamma_n6_sample():
    for mask in oracles.all_graph_masks(6):
        if mask % 211 != 0:
            continue
        g = oracles.graph_from_mask(6, mask)
        assert gamma(g) == oracles.gamma(g)
        if g.is_connected:
            assert gamma_c(g) == oracles.gamma_c(g)
            assert gamma_t(g) == oracles.gamma_t(g)


def test_undefined_inputs_raise():
    disconnected = new_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        gamma_c(disconnected)
    isolated = new_graph(3, [(0, 1)])
    with pytest.raises(IsolatedVertexError):
        gamma_t(isolated)


def test_gamma_c_at_most():
    g = cycle(6)
    assert gamma_c(g) == 4
    assert gamma_c_at_most(g, 3) is None
    assert gamma_c_at_most(g, 4) == 4


def test_all_min_cds_cycle5():
    sets = all_min_connected_dominating_sets(cycle(5))
    got = {frozenset(to_indices(m)) for m in sets}
    want = {
        frozenset({i, (i + 1) % 5, (i + 2) % 5}) for i in range(5)
    }
    assert got == want


def test_all_min_cds_budget():
    g = cycle(17)
    with pytest.raises(BudgetExceededError):
        all_min_connected_dominating_sets(g, max_subsets=100)


def test_cycle5_not_3_critical():
    # gamma_c(C5) = 3 but C5 + uv keeps gamma_c = 2? No: C5 plus a chord has
    # gamma_c 2, so C5 actually is 3-critical; pin the solver's verdict against
    # the naive oracle instead of guessing.
    rep = is_k_gamma_c_critical(cycle(5))
    assert rep.is_critical == oracles.is_3gc_critical(cycle(5))


def test_criticality_matches_oracle_n5():
    for n in range(2, 6):
        for g in connected_graphs(n):
            rep = is_k_gamma_c_critical(g)
            assert rep.is_critical == oracles.is_3gc_critical(g)
            rep_t = is_k_gamma_t_critical(g)
            assert rep_t.is_critical == oracles.is_3gt_critical(g)


def test_criticality_matches_oracle_n6_sample():
    seen_critical = 0
    for mask in oracles.all_graph_masks(6):
        if mask % 131 != 0:
            continue
        g = oracles.graph_from_mask(6, mask)
        if not g.is_connected:
            continue
        rep = is_k_gamma_c_critical(g)
        assert rep.is_critical == oracles.is_3gc_critical(g)
        seen_critical += rep.is_critical
    assert seen_critical >= 0


def test_witnesses_are_valid_drop_sets():
    # every recorded witness must be a connected dominating set of size k-1
    # in the graph with that edge added
    for g in connected_graphs(5):
        rep = is_k_gamma_c_critical(g)
        if not rep.is_critical:
            continue
        assert rep.base == 3
        for (u, v), wmask in rep.witnesses.items():
            g2 = g.with_edge(u, v)
            assert is_connected_dominating(g2, wmask)
            assert wmask.bit_count() == 2


def test_generic_route_agrees_with_fast_route():
    # k=3 uses a specialized screen; k passed as 4 exercises the generic
    # search on the same graphs, and both must agree with first principles
    for g in connected_graphs(5):
        rep4 = is_k_gamma_c_critical(g, k=4)
        want = oracles.gamma_c(g) == 4 and all(
            oracles.gamma_c(g.with_edge(u, v)) < 4 for u, v in g.non_edges()
        )
        assert rep4.is_critical == want


def test_report_to_dict():
    rep = is_k_gamma_c_critical(cycle(5))
    d = rep.to_dict()
    assert d["k"] == 3
    assert d["base"] == 3
    assert isinstance(d["witnesses"], dict)


def test_drop_witnesses_all_lists_every_pair():
    g = cycle(5)
    ws = drop_witnesses_all(g, 0, 2)
    got = {frozenset(to_indices(m)) for m in ws}
    g2 = g.with_edge(0, 2)
    want = {
        frozenset(to_indices(m))
        for m in all_min_connected_dominating_sets(g2)
    }
    assert got == want
