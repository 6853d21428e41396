import pytest

from strongprod.census import all_graphs, connected_graphs
from strongprod.graph import (
    Graph, bull_graph, complete_bipartite, complete_graph, cycle_graph,
    path_graph, star_graph,
)
from strongprod.matching import (
    all_matchings, has_near_perfect_matching, has_perfect_matching,
    is_equimatchable, is_factor_critical, is_matching, is_maximal_matching,
    is_minimal_eds, is_well_edge_dominated, matching_number,
    maximal_matchings, maximum_matching, min_maximal_matching,
    minimal_edge_dominating_sets,
)
from strongprod.products import strong_product

from oracles import (
    brute_all_matchings, brute_equimatchable, brute_matching_number,
    brute_maximal_matchings, brute_minimal_eds, brute_well_edge_dominated,
)


def test_matching_predicates():
    G = path_graph(4)
    assert is_matching(G, [(0, 1), (2, 3)])
    assert not is_matching(G, [(0, 1), (1, 2)])
    assert not is_matching(G, [(0, 2)])
    assert is_maximal_matching(G, [(1, 2)])
    assert not is_maximal_matching(G, [(0, 1)])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_maximum_matching_matches_oracle(n):
    for G in all_graphs(n):
        m = maximum_matching(G)
        assert is_matching(G, m)
        assert len(m) == brute_matching_number(G)


def test_maximum_matching_needs_blossoms():
    # two triangles joined by a bridge: greedy augmenting without blossom
    # contraction fails on odd cycles
    G = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3),
                             (3, 4), (4, 5), (3, 5)])
    assert matching_number(G) == 3


def test_petersen_like_blossom_case():
    G = cycle_graph(9)
    assert matching_number(G) == 4
    assert has_near_perfect_matching(G)
    assert is_factor_critical(G)


def test_perfect_matching_flags():
    assert has_perfect_matching(complete_graph(4))
    assert not has_perfect_matching(star_graph(3))
    assert not is_factor_critical(path_graph(4))
    assert is_factor_critical(complete_graph(5))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_maximal_matchings_match_oracle(n):
    for G in all_graphs(n):
        got = list(maximal_matchings(G))
        assert len(got) == len({frozenset(m) for m in got})
        assert {frozenset(m) for m in got} == brute_maximal_matchings(G)


def test_maximal_matchings_6_vertex_sample():
    for G in connected_graphs(6)[::9]:
        got = {frozenset(m) for m in maximal_matchings(G)}
        assert got == brute_maximal_matchings(G)


def test_all_matchings_matches_oracle():
    for G in all_graphs(4):
        assert {frozenset(m) for m in all_matchings(G)} == \
            {frozenset(m) for m in brute_all_matchings(G)}


def test_k4_maximal_matchings():
    got = list(maximal_matchings(complete_graph(4)))
    assert len(got) == 3 and all(len(m) == 2 for m in got)


def test_bull_maximal_matching_sizes():
    sizes = {len(m) for m in maximal_matchings(bull_graph())}
    assert sizes == {1, 2}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_min_maximal_matching_matches_enumeration(n):
    for G in all_graphs(n):
        if not G.edge_count():
            continue
        m = min_maximal_matching(G)
        assert is_maximal_matching(G, m)
        assert len(m) == min(len(x) for x in maximal_matchings(G))


def test_min_maximal_c9():
    assert len(min_maximal_matching(cycle_graph(9))) == 3


@pytest.mark.parametrize("n", [3, 4, 5])
def test_equimatchable_matches_oracle(n):
    for G in all_graphs(n):
        if not G.edge_count():
            continue
        v = is_equimatchable(G)
        assert v.holds == brute_equimatchable(G)
        if not v.holds:
            assert is_maximal_matching(G, v.witness)
            assert is_maximal_matching(G, v.counterexample)
            assert len(v.witness) != len(v.counterexample)


def test_k16_equimatchable_fast():
    import time
    t = time.time()
    assert is_equimatchable(complete_graph(16)).holds
    assert time.time() - t < 10


def test_eds_predicates():
    G = path_graph(4)
    assert is_minimal_eds(G, [(1, 2)])
    assert not is_minimal_eds(G, [(0, 1)])  # misses edge (2,3)
    assert not is_minimal_eds(G, [(0, 1), (1, 2), (2, 3)])  # not minimal


@pytest.mark.parametrize("n", [3, 4, 5])
def test_minimal_eds_matches_oracle(n):
    for G in all_graphs(n):
        if not G.edge_count():
            continue
        got = {frozenset(F) for F in minimal_edge_dominating_sets(G)}
        assert got == brute_minimal_eds(G)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_wed_full_matches_oracle(n):
    for G in all_graphs(n):
        if not G.edge_count():
            continue
        assert is_well_edge_dominated(G).holds == \
            brute_well_edge_dominated(G)


def test_wed_disprove_never_contradicts_full():
    for G in connected_graphs(5):
        full = is_well_edge_dominated(G, "full")
        dis = is_well_edge_dominated(G, "disprove")
        if not dis.inconclusive:
            assert dis.holds == full.holds


def test_k9_wed_certificate_sizes():
    v = is_well_edge_dominated(complete_graph(9), "disprove")
    assert not v.holds
    sizes = {len(v.witness), len(v.counterexample)}
    assert sizes == {4, 7}


def test_k23_equimatchable_not_wed():
    G = complete_bipartite(2, 3)
    assert is_equimatchable(G).holds
    assert not is_well_edge_dominated(G).holds


def test_k2_product_k2_is_wed():
    P = strong_product(complete_graph(2), complete_graph(2))
    assert is_well_edge_dominated(P.graph).holds  # K4


def test_wed_rejects_edgeless():
    with pytest.raises(ValueError):
        is_well_edge_dominated(Graph(3, (0, 0, 0)))
