from __future__ import annotations

import pytest

from trussanchor import (GadgetSpec, Witness, bowtie_graph,
                         canonical_membership, complete_graph, coverage_greedy,
                         find_nonsubmodular_witness, generate_gadget,
                         get_followers, gnm_random_graph, path_graph,
                         planted_clique_graph, powerlaw_cluster_graph,
                         select_base, truss_decompose, trussness_gain)

# (s, t) -> vertex and edge counts of the generated coverage gadget
GADGET_SIZES = {
    (1, 1): (10, 20), (1, 2): (38, 103), (1, 3): (98, 319),
    (2, 1): (11, 21), (2, 2): (39, 104), (2, 3): (99, 320),
    (3, 1): (12, 22), (3, 2): (40, 105), (3, 3): (100, 321),
}


def test_fixed_shapes():
    assert complete_graph(4).m == 6
    assert path_graph(5).m == 4
    assert bowtie_graph().m == 5
    lab = truss_decompose(complete_graph(6))
    assert lab.t == [6] * 15


def test_gnm_determinism_and_bounds():
    a = gnm_random_graph(12, 30, seed=7)
    b = gnm_random_graph(12, 30, seed=7)
    assert a.endpoints == b.endpoints
    assert a.m == 30 and a.n <= 12
    assert gnm_random_graph(12, 30, seed=8).endpoints != a.endpoints
    with pytest.raises(ValueError, match="exceeds"):
        gnm_random_graph(4, 7)


def test_planted_clique_contains_clique():
    g = planted_clique_graph(16, 40, 5, seed=3)
    assert g.m == 40
    lab = truss_decompose(g)
    assert lab.k_max >= 5
    assert planted_clique_graph(16, 40, 5, seed=3).endpoints == g.endpoints
    with pytest.raises(ValueError, match="clique larger"):
        planted_clique_graph(4, 10, 5)
    with pytest.raises(ValueError, match="below clique"):
        planted_clique_graph(10, 5, 5)


def test_powerlaw_cluster_graph():
    g = powerlaw_cluster_graph(40, 3, 0.6, seed=2)
    assert g.n == 40
    # complete seed block on 4 vertices, then 3 links per arriving vertex
    assert g.m == 6 + 36 * 3
    assert powerlaw_cluster_graph(40, 3, 0.6, seed=2).m == g.m
    with pytest.raises(ValueError, match="m_attach"):
        powerlaw_cluster_graph(5, 5, 0.5)
    with pytest.raises(ValueError, match="p must be"):
        powerlaw_cluster_graph(5, 2, 1.5)


def test_canonical_membership():
    assert canonical_membership(2, 3) == (frozenset({0, 2}), frozenset({1}))
    spec = GadgetSpec(3, 5)
    assert spec.membership == canonical_membership(3, 5)


def test_gadget_spec_validation():
    with pytest.raises(ValueError, match="s >= 1"):
        GadgetSpec(0, 1)
    with pytest.raises(ValueError, match="one set per s"):
        GadgetSpec(2, 2, membership=(frozenset({0, 1}),))
    with pytest.raises(ValueError, match="out of range"):
        GadgetSpec(1, 1, membership=(frozenset({5}),))
    with pytest.raises(ValueError, match="covered"):
        GadgetSpec(2, 2, membership=(frozenset({0}), frozenset()))


def test_gadget_trussness_formulas():
    for (s, t), (n, m) in GADGET_SIZES.items():
        res = generate_gadget(GadgetSpec(s, t))
        g = res.graph
        assert (g.n, g.m) == (n, m)
        lab = truss_decompose(g)
        got_sets = tuple(lab.t[e] for e in res.set_edges)
        assert got_sets == res.expected_set_trussness()
        for e in res.element_edges:
            assert lab.t[e] == res.expected_element_trussness()


def test_gadget_followers_are_covered_elements():
    for s, t in GADGET_SIZES:
        res = generate_gadget(GadgetSpec(s, t))
        lab = truss_decompose(res.graph)
        for i, e in enumerate(res.set_edges):
            fs = get_followers(res.graph, lab, e)
            want = {res.element_edges[j] for j in res.spec.membership[i]}
            assert fs.followers == want


def test_greedy_on_gadget_is_greedy_coverage():
    for s, t in GADGET_SIZES:
        spec = GadgetSpec(s, t)
        res = generate_gadget(spec)
        b = min(s, t)
        picks, marginals = coverage_greedy(spec, b)
        sel = select_base(res.graph, b)
        assert sel.anchors == tuple(res.set_edges[i] for i in picks)
        assert sel.per_round_gain == tuple(marginals)


def test_coverage_greedy_behaviour():
    spec = GadgetSpec(2, 3)
    assert coverage_greedy(spec, 2) == ([0, 1], [2, 1])
    assert coverage_greedy(spec, 5) == ([0, 1], [2, 1])
    overlap = GadgetSpec(3, 4, membership=(
        frozenset({0, 1, 2}), frozenset({2, 3}), frozenset({3})))
    assert coverage_greedy(overlap, 3) == ([0, 1, 2], [3, 1, 0])


def test_witness_is_self_checking():
    wit = find_nonsubmodular_witness()
    assert isinstance(wit, Witness)
    assert wit.holds()
    assert (wit.gain_a, wit.gain_b) == (0, 0)
    assert wit.gain_union == 1 and wit.gain_intersection == 0
    assert wit.set_a == frozenset({1}) and wit.set_b == frozenset({2})
    assert (wit.graph.n, wit.graph.m) == (10, 23)
    # the stored gains really are what a plain decomposition reports
    g = wit.graph
    assert trussness_gain(g, wit.set_a) == wit.gain_a
    assert trussness_gain(g, wit.set_b) == wit.gain_b
    assert trussness_gain(g, wit.set_a | wit.set_b) == wit.gain_union
