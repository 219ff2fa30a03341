import pytest

from perconet import (
    ConvergenceError,
    DegenerateGraphError,
    DirectedGraph,
    centrality_scores,
    top_k,
)
from perconet.generators import uniform_random

from builders import bidirected, complete_digraph, directed_path
from oracles import betweenness_by_enumeration, full_sort_ranking


def test_betweenness_on_directed_path():
    scores = centrality_scores(directed_path("abc"), "betweenness").scores
    assert scores == {"a": 0.0, "b": 1.0, "c": 0.0}


def test_closeness_on_directed_path():
    scores = centrality_scores(directed_path("abc"), "closeness").scores
    assert scores["a"] == pytest.approx(0.75)
    assert scores["b"] == pytest.approx(0.5)
    assert scores["c"] == 0.0


def test_eigenvector_symmetric_complete_graph():
    scores = centrality_scores(complete_digraph("abcd"), "eigenvector").scores
    assert scores == {"a": 1.0, "b": 1.0, "c": 1.0, "d": 1.0}


def test_betweenness_matches_enumeration_oracle_exactly():
    g = uniform_random(12, 33, seed=41)
    impl = centrality_scores(g, "betweenness").scores
    oracle = betweenness_by_enumeration(g)
    assert impl == {label: float(value) for label, value in oracle.items()}


def test_betweenness_total_equals_pair_dependency_mass():
    g = uniform_random(11, 28, seed=8)
    impl = centrality_scores(g, "betweenness").scores
    oracle = betweenness_by_enumeration(g)
    assert sum(impl.values()) == float(sum(oracle.values()))


def test_degree_scores_and_sums():
    g = uniform_random(40, 200, seed=5)
    in_s = centrality_scores(g, "in-degree").scores
    out_s = centrality_scores(g, "out-degree").scores
    tot_s = centrality_scores(g, "total-degree").scores
    assert sum(in_s.values()) == g.m
    assert sum(out_s.values()) == g.m
    assert all(tot_s[u] == in_s[u] + out_s[u] for u in g.node_order)
    assert all(isinstance(v, int) and v >= 0 for v in tot_s.values())


def test_degree_scores_follow_relabeling():
    g = uniform_random(15, 50, seed=6)
    rename = {label: f"z{label}" for label in g.node_order}
    relabeled = DirectedGraph([(rename[u], rename[v]) for u, v in g.edges()],
                              nodes=rename.values())
    base = centrality_scores(g, "total-degree").scores
    moved = centrality_scores(relabeled, "total-degree").scores
    assert moved == {rename[u]: d for u, d in base.items()}


def test_paper_hub_degrees_rank_first(paper_scale_hub_graph):
    g = paper_scale_hub_graph
    top = top_k(centrality_scores(g, "total-degree"), 1)[0]
    assert top == ("v0000", 5112)
    assert g.in_degree("v0000") == 2571
    assert g.out_degree("v0000") == 2541


def test_top_k_tie_break_is_lexicographic():
    assert top_k({"A": 5, "B": 5, "C": 1}, 2) == [("A", 5), ("B", 5)]


def test_top_k_with_large_k_returns_full_ranking():
    scores = {"b": 2, "a": 1, "c": 3}
    assert top_k(scores, 10) == [("c", 3), ("b", 2), ("a", 1)]


def test_top_k_matches_full_sort_oracle():
    g = uniform_random(100, 600, seed=77)
    scores = centrality_scores(g, "total-degree").scores
    assert top_k(scores, 10) == full_sort_ranking(scores, 10)


def test_top_k_rejects_non_positive_k():
    with pytest.raises(ValueError):
        top_k({"a": 1}, 0)


def test_ranking_is_deterministic():
    g = uniform_random(60, 240, seed=13)
    first = top_k(centrality_scores(g, "betweenness"), 5)
    second = top_k(centrality_scores(g, "betweenness"), 5)
    assert first == second


def test_eigenvector_ranking_is_scale_invariant():
    g = uniform_random(20, 90, seed=3)
    scores = centrality_scores(g, "eigenvector").scores
    scaled = {u: 7.5 * v for u, v in scores.items()}
    assert [u for u, _ in top_k(scores, 20)] == [u for u, _ in top_k(scaled, 20)]


def test_eigenvector_needs_edges():
    with pytest.raises(DegenerateGraphError):
        centrality_scores(DirectedGraph(nodes=["a"]), "eigenvector")


def test_eigenvector_diverges_on_acyclic_core():
    # nilpotent adjacency has no positive fixed direction reachable in 1000 rounds
    with pytest.raises(ConvergenceError):
        centrality_scores(directed_path("abcdef"), "eigenvector")


def test_eigenvector_bidirected_star_converges():
    scores = centrality_scores(bidirected([("h", leaf) for leaf in "abcd"]), "eigenvector").scores
    assert scores["h"] == 1.0
    assert all(scores[leaf] == pytest.approx(0.5) for leaf in "abcd")


def test_empty_graph_and_bad_measure_rejected():
    with pytest.raises(DegenerateGraphError):
        centrality_scores(DirectedGraph(), "total-degree")
    with pytest.raises(ValueError):
        centrality_scores(complete_digraph("ab"), "pagerank")
