"""Truss decomposition with synchronized removal rounds and anchored variants."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass
class TrussLabeling:
    """Per-edge trussness t and removal-round layer l.

    t[e] = phase during which e was removed (>= 2), l[e] = 1-based round
    within that phase. Anchored labelings store an anchor's placement level
    in t and 0 in l. k_max is the highest t among non-anchor edges.
    """

    t: list[int]
    l: list[int]
    k_max: int

    def copy(self) -> TrussLabeling:
        return TrussLabeling(list(self.t), list(self.l), self.k_max)


@dataclass(frozen=True)
class AnchorState:
    anchors: frozenset[int]
    labeling: TrussLabeling
    placement: dict[int, int]


def _peel(g: Graph, anchors: frozenset[int], edge_subset=None,
          reverse_rounds: bool = False):
    """Batch peel: each round removes every edge at or under the phase
    threshold simultaneously, so layers do not depend on scan order.
    reverse_rounds flips within-round processing order (used to check that).

    Returns (t, l, k_max, placement). Edges outside edge_subset keep t=l=0.
    """
    m = g.m
    t = [0] * m
    l = [0] * m
    if edge_subset is None:
        eids = list(range(m))
    else:
        eids = sorted(set(edge_subset))
    # live adjacency restricted to the working edge set
    adj: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for e in eids:
        u, v = g.endpoints[e]
        adj[u][v] = e
        adj[v][u] = e
    sup = [0] * m
    for e in eids:
        u, v = g.endpoints[e]
        du, dv = adj[u], adj[v]
        if len(dv) < len(du):
            du, dv = dv, du
        s = 0
        for w in du:
            if w in dv:
                s += 1
        sup[e] = s
    placement: dict[int, int] = {}
    live: list[int] = []
    for e in eids:
        if e in anchors:
            placement[e] = 2
        else:
            live.append(e)
    alive = bytearray(m)
    for e in eids:
        alive[e] = 1
    queued = bytearray(m)
    k = 2
    k_max = 2
    while live:
        for a in placement:
            if sup[a] >= k - 2:
                placement[a] = k
        thresh = k - 2
        frontier = [e for e in live if sup[e] <= thresh]
        for e in frontier:
            queued[e] = 1
        rnd = 0
        while frontier:
            rnd += 1
            if reverse_rounds:
                frontier.reverse()
            nxt: list[int] = []
            for e in frontier:
                alive[e] = 0
                t[e] = k
                l[e] = rnd
                u, v = g.endpoints[e]
                du, dv = adj[u], adj[v]
                del du[v]
                del dv[u]
                if len(dv) < len(du):
                    du, dv = dv, du
                for w, p in du.items():
                    q = dv.get(w)
                    if q is None:
                        continue
                    sup[p] -= 1
                    sup[q] -= 1
                    for f in (p, q):
                        if not queued[f] and sup[f] <= thresh and f not in anchors:
                            queued[f] = 1
                            nxt.append(f)
            frontier = nxt
        if rnd:
            k_max = k
            live = [e for e in live if alive[e]]
        k += 1
    # only anchors remain; their residual support caps how high they sit
    for a in placement:
        placement[a] = max(placement[a], sup[a] + 2)
        t[a] = placement[a]
        l[a] = 0
    return t, l, k_max, placement


def truss_decompose(g: Graph) -> TrussLabeling:
    t, l, k_max, _ = _peel(g, frozenset())
    return TrussLabeling(t, l, k_max)


def anchored_truss_decompose(g: Graph, anchors, *, edge_subset=None) -> AnchorState:
    """Decompose with the given edges pinned: they are never removed, and
    they are reported at their placement level (the highest phase whose
    entry threshold their support still met)."""
    aset = frozenset(anchors)
    for a in aset:
        if not 0 <= a < g.m:
            raise ValueError(f"anchor id {a} out of range")
    t, l, k_max, placement = _peel(g, aset, edge_subset)
    return AnchorState(aset, TrussLabeling(t, l, k_max), placement)


def trussness_gain(g: Graph, anchors, *, base: TrussLabeling | None = None) -> int:
    """Total trussness lift over non-anchor edges caused by pinning anchors."""
    aset = frozenset(anchors)
    if base is None:
        base = truss_decompose(g)
    state = anchored_truss_decompose(g, aset)
    ta = state.labeling.t
    return sum(ta[e] - base.t[e] for e in range(g.m) if e not in aset)


def hulls(labeling: TrussLabeling) -> dict[int, list[int]]:
    """Edges grouped by trussness value, ascending ids within each group."""
    out: dict[int, list[int]] = {}
    for e, k in enumerate(labeling.t):
        out.setdefault(k, []).append(e)
    return dict(sorted(out.items()))


def layers(labeling: TrussLabeling) -> dict[int, dict[int, list[int]]]:
    """Edges grouped by (trussness, removal round)."""
    out: dict[int, dict[int, list[int]]] = {}
    for e, k in enumerate(labeling.t):
        out.setdefault(k, {}).setdefault(labeling.l[e], []).append(e)
    return {k: dict(sorted(v.items())) for k, v in sorted(out.items())}


def order_key(labeling: TrussLabeling, e: int) -> tuple[int, int, int]:
    """Sort key for the removal order: phase, then round, then id."""
    return (labeling.t[e], labeling.l[e], e)


def precedes(labeling: TrussLabeling, e1: int, e2: int) -> bool:
    """Removal-order comparison; ties on (phase, round) count as preceding."""
    t1, t2 = labeling.t[e1], labeling.t[e2]
    if t1 != t2:
        return t1 < t2
    return labeling.l[e1] <= labeling.l[e2]


def write_labeling_csv(g: Graph, labeling: TrussLabeling, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("edge_id,u,v,trussness,layer\n")
        for e in range(g.m):
            a, b = g.label_pair(e)
            fh.write(f"{e},{a},{b},{labeling.t[e]},{labeling.l[e]}\n")
