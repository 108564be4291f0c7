"""Shared fixtures: a worked 14-vertex example with hand-checked labels,
definition-based reference oracles, and random graph corpora."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from trussanchor import Graph, gnm_random_graph, planted_clique_graph

settings.register_profile(
    "suite", max_examples=25, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large,
                           HealthCheck.filter_too_much])
settings.load_profile("suite")

# Worked example: a triangle-free bridge (id 0), a 4-edge ladder over the
# path 5-8, 7-8, 8-9, 9-10 (ids 1-4), two dense blocks on vertex sets
# {1,2,5,7,9} (ids 5-13) and {6,8,10,11,12} (ids 14-22), and a near-clique
# on {3,4,5,6,13} (ids 23-32). Labels below were hand-derived and are
# pinned; several tests cross-check them against the reference oracles.
DEMO_EDGES = [
    (0, 1), (5, 8), (7, 8), (8, 9), (9, 10), (1, 2), (1, 5), (1, 7), (1, 9),
    (2, 5), (2, 7), (2, 9), (5, 7), (7, 9), (6, 8), (6, 11), (6, 12),
    (8, 10), (8, 11), (8, 12), (10, 11), (10, 12), (11, 12), (3, 4), (3, 5),
    (3, 6), (3, 13), (4, 5), (4, 6), (4, 13), (5, 6), (5, 13), (6, 13),
]

DEMO_T = [2, 3, 3, 3, 3,
          4, 4, 4, 4, 4, 4, 4, 4, 4,
          4, 4, 4, 4, 4, 4, 4, 4, 4,
          5, 5, 5, 5, 5, 5, 5, 5, 5, 5]

DEMO_L = [1, 4, 3, 2, 1,
          2, 1, 2, 1, 1, 2, 1, 1, 1,
          1, 1, 1, 1, 2, 2, 1, 1, 2,
          1, 1, 1, 1, 1, 1, 1, 1, 1, 1]

# Follower sets of the only anchors with any effect.
DEMO_FOLLOWERS = {2: {1}, 3: {1, 2}, 4: {1, 2, 3}}

# Distinct edges enqueued by the follower search, per anchor.
DEMO_ROUTES = {0: 0, 1: 7, 2: 3, 3: 4, 4: 4, 5: 0, 6: 2, 7: 0, 8: 2, 9: 2,
               10: 0, 11: 2, 12: 2, 13: 2, 14: 3, 15: 2, 16: 2, 17: 2,
               18: 0, 19: 0, 20: 2, 21: 2, 22: 0, 23: 0, 24: 0, 25: 0,
               26: 0, 27: 0, 28: 0, 29: 0, 30: 0, 31: 0, 32: 0}


@pytest.fixture(scope="session")
def demo_graph() -> Graph:
    return Graph(DEMO_EDGES)


def _adjacency(pairs: dict[int, tuple[int, int]], live) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for e in live:
        u, v = pairs[e]
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def _live_support(pairs, adj, e) -> int:
    u, v = pairs[e]
    return len(adj.get(u, set()) & adj.get(v, set()))


def reference_trussness(g: Graph, anchors: frozenset[int] = frozenset()) -> list[int]:
    """Definition-based oracle: t(e) is the largest k such that e belongs to
    the k-truss, the maximal subgraph keeping every non-anchor edge at
    support >= k-2 (anchors always stay). Recomputes support from scratch
    after every deletion sweep; shares no code with the peel."""
    pairs = {e: g.endpoints[e] for e in range(g.m)}
    t = [2] * g.m
    alive = set(range(g.m))
    k = 3
    while True:
        cur = set(alive)
        while True:
            adj = _adjacency(pairs, cur)
            drop = [e for e in cur
                    if e not in anchors and _live_support(pairs, adj, e) < k - 2]
            if not drop:
                break
            cur -= set(drop)
        kept = [e for e in cur if e not in anchors]
        if not kept:
            return t
        for e in kept:
            t[e] = k
        alive = cur
        k += 1


def reference_labels(g: Graph, anchors: frozenset[int] = frozenset()
                     ) -> tuple[list[int], list[int], dict[int, int]]:
    """Round-by-round oracle: during phase k, round r deletes every
    non-anchor edge whose support (fully recomputed at the round start) is
    at most k-2; deleted edges get t=k, l=r. Anchor placement is the last
    phase whose start still shows support >= k-2, extended by the support
    left in the anchors-only remainder."""
    pairs = {e: g.endpoints[e] for e in range(g.m)}
    live = set(range(g.m))
    t = [0] * g.m
    l = [0] * g.m
    placement = {a: 2 for a in anchors}
    k = 2
    while any(e not in anchors for e in live):
        adj = _adjacency(pairs, live)
        for a in anchors:
            if _live_support(pairs, adj, a) >= k - 2:
                placement[a] = k
        r = 0
        while True:
            adj = _adjacency(pairs, live)
            batch = [e for e in sorted(live)
                     if e not in anchors and _live_support(pairs, adj, e) <= k - 2]
            if not batch:
                break
            r += 1
            for e in batch:
                t[e] = k
                l[e] = r
                live.remove(e)
        k += 1
    adj = _adjacency(pairs, live)
    for a in anchors:
        s_inf = _live_support(pairs, adj, a)
        placement[a] = max(placement[a], s_inf + 2)
        t[a] = placement[a]
        l[a] = 0
    return t, l, placement


def reference_gain(g: Graph, anchors: frozenset[int]) -> int:
    base = reference_trussness(g)
    up = reference_trussness(g, anchors)
    return sum(up[e] - base[e] for e in range(g.m) if e not in anchors)


def small_random_graphs(count: int = 30):
    """Small mixed graphs where the quadratic reference oracles are cheap."""
    out = []
    for i in range(count):
        if i % 3 == 2:
            out.append(planted_clique_graph(11, 28 + (i % 7) * 3, 4 + i % 3,
                                            seed=400 + i))
        else:
            n = 9 + i % 6
            m = min(n * (n - 1) // 2, 14 + (i * 5) % 40)
            out.append(gnm_random_graph(n, m, seed=300 + i))
    return out


def acceptance_corpus():
    """The 200-graph random corpus: 120 uniform G(n,m) plus 80 planted
    clique graphs, n in [12, 40], m capped at 300."""
    graphs = []
    for i in range(120):
        n = 12 + (i * 7) % 29
        cap = n * (n - 1) // 2
        m = min(cap, 20 + (i * 13) % 281)
        graphs.append(gnm_random_graph(n, m, seed=1000 + i))
    for i in range(80):
        n = 14 + (i * 5) % 27
        k = 4 + i % 4
        base = k * (k - 1) // 2
        cap = n * (n - 1) // 2
        m = min(cap, base + 15 + (i * 11) % (300 - base - 15))
        graphs.append(planted_clique_graph(n, m, k, seed=2000 + i))
    return graphs
