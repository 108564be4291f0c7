from __future__ import annotations

import pytest

from trussanchor import (complete_graph, gnm_random_graph,
                         powerlaw_cluster_graph, subgraph_sample)


def test_vertex_mode():
    g = gnm_random_graph(40, 200, seed=1)
    s = subgraph_sample(g, "vertex", ratio=0.5, seed=9)
    assert s.n <= 20
    assert subgraph_sample(g, "vertex", ratio=0.5, seed=9).m == s.m
    labels = set(s.labels)
    for e in range(s.m):
        a, b = s.label_pair(e)
        assert g.has_edge(g.vertex_id(a), g.vertex_id(b))
        assert a in labels and b in labels
    full = subgraph_sample(g, "vertex", ratio=1.0, seed=0)
    assert full.m == g.m


def test_edge_mode():
    g = gnm_random_graph(40, 200, seed=1)
    s = subgraph_sample(g, "edge", ratio=0.25, seed=4)
    assert s.m == 50
    for e in range(s.m):
        a, b = s.label_pair(e)
        assert g.has_edge(g.vertex_id(a), g.vertex_id(b))


def test_ball_mode_lands_in_window():
    g = powerlaw_cluster_graph(300, 6, 0.5, seed=3)
    for seed in range(5):
        s = subgraph_sample(g, "ball", seed=seed)
        assert 150 <= s.m <= 250
    a = subgraph_sample(g, "ball", seed=12)
    b = subgraph_sample(g, "ball", seed=12)
    assert a.endpoints == b.endpoints


def test_ball_mode_custom_window():
    g = gnm_random_graph(60, 400, seed=2)
    s = subgraph_sample(g, "ball", seed=0, min_edges=40, max_edges=90)
    assert 40 <= s.m <= 90


def test_validation_errors():
    g = gnm_random_graph(30, 100, seed=0)
    with pytest.raises(ValueError, match="ratio"):
        subgraph_sample(g, "vertex")
    with pytest.raises(ValueError, match="ratio"):
        subgraph_sample(g, "edge", ratio=1.5)
    with pytest.raises(ValueError, match="unknown sampling mode"):
        subgraph_sample(g, "bogus", ratio=0.5)
    with pytest.raises(ValueError, match="smaller than the requested window"):
        subgraph_sample(g, "ball")


def test_ball_mode_gives_up_when_window_unreachable():
    # adding any vertex of a clique jumps the edge count straight over a
    # two-wide window, so every try overshoots
    g = complete_graph(30)
    with pytest.raises(RuntimeError, match="no ball sample landed"):
        subgraph_sample(g, "ball", seed=0, min_edges=150, max_edges=152,
                        max_tries=20)
