"""Upward-route follower search: which edges gain trussness if one edge is pinned."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from enum import IntEnum

from .decomposition import TrussLabeling
from .graph import Graph


class EdgeStatus(IntEnum):
    ELIMINATED = 0
    SURVIVED = 1


@dataclass
class FollowerSearchState:
    """Mutable per-level search state. Edges absent from status are unchecked."""

    level: int
    anchor: int
    anchors: frozenset[int]
    status: dict[int, EdgeStatus] = field(default_factory=dict)


@dataclass(frozen=True)
class FollowerSet:
    anchor: int
    followers: frozenset[int]
    per_node: dict[int, frozenset[int]]
    searched_nodes: frozenset[int]
    enqueued: int


def seed_candidates(g: Graph, labeling: TrussLabeling, x: int,
                    anchors: frozenset[int] = frozenset()) -> dict[int, list[int]]:
    """Triangle partners of x removed strictly after it, grouped by their level."""
    t, l = labeling.t, labeling.l
    tx, lx = t[x], l[x]
    out: dict[int, list[int]] = {}
    for _w, p, q in g.partners(x):
        for e in (p, q):
            if e in anchors:
                continue
            te = t[e]
            if te > tx or (te == tx and l[e] > lx):
                bucket = out.setdefault(te, [])
                if e not in bucket:
                    bucket.append(e)
    return {k: sorted(v) for k, v in sorted(out.items())}


def effective_support(g: Graph, labeling: TrussLabeling,
                      state: FollowerSearchState, e: int) -> int:
    """Triangles of e whose other two edges would both still be present at
    state.level with the anchor pinned.

    Unchecked partners at the same level count only if their removal round
    is not earlier than e's; later rounds are assumed alive optimistically
    (a wrong guess is repaired by retract once the partner is decided).
    """
    t, l = labeling.t, labeling.l
    level = state.level
    le = l[e]
    status = state.status
    x = state.anchor
    anchors = state.anchors
    s = 0
    for _w, p, q in g.partners(e):
        ok = True
        for f in (p, q):
            if f == x or f in anchors:
                continue
            st = status.get(f)
            if st is not None:
                if st == EdgeStatus.ELIMINATED:
                    ok = False
                    break
                continue
            tf = t[f]
            if tf > level:
                continue
            if tf < level or l[f] < le:
                ok = False
                break
        if ok:
            s += 1
    return s


def retract(g: Graph, labeling: TrussLabeling, state: FollowerSearchState,
            e: int, trace: dict | None = None) -> list[int]:
    """Cascade the elimination of e: re-count each surviving partner and
    eliminate any that no longer clears the level threshold."""
    need = state.level - 1
    status = state.status
    fallen: list[int] = []
    stack = [e]
    while stack:
        d = stack.pop()
        for _w, p, q in g.partners(d):
            for f in (p, q):
                if status.get(f) != EdgeStatus.SURVIVED:
                    continue
                if effective_support(g, labeling, state, f) < need:
                    status[f] = EdgeStatus.ELIMINATED
                    fallen.append(f)
                    stack.append(f)
                    if trace is not None:
                        trace.setdefault("retracted", []).append((state.level, f))
    return fallen


def get_followers(g: Graph, labeling: TrussLabeling, x: int, *,
                  anchors: frozenset[int] = frozenset(),
                  tree=None, restrict: frozenset[int] = frozenset(),
                  trace: dict | None = None) -> FollowerSet:
    """Edges whose trussness rises when x is pinned on top of anchors.

    Works level by level over seed candidates, expanding only within each
    level: an edge is examined at its own level, survivors push same-level
    partners with equal-or-later rounds. With a tree, restrict names tree
    nodes to skip (their results come from elsewhere); per_node buckets the
    survivors by node and searched_nodes lists the node ids this call was
    responsible for, restricted ones excluded.
    """
    t, l = labeling.t, labeling.l
    node_of = tree.edge_to_node.get if tree is not None else None
    seeds = seed_candidates(g, labeling, x, anchors)
    if trace is not None:
        trace["seeds"] = seeds
        trace.setdefault("parent", {})
    followers: set[int] = set()
    enqueued = 0
    for level in sorted(seeds):
        state = FollowerSearchState(level=level, anchor=x, anchors=anchors)
        status = state.status
        seen: set[int] = set()
        heap: list[tuple[int, int]] = []
        for e in seeds[level]:
            if node_of is not None and restrict and node_of(e) in restrict:
                continue
            seen.add(e)
            heapq.heappush(heap, (l[e], e))
            if trace is not None:
                trace["parent"][e] = x
        enqueued += len(seen)
        while heap:
            le, e = heapq.heappop(heap)
            if e in status:
                continue
            s = effective_support(g, labeling, state, e)
            survived = s >= level - 1
            if trace is not None:
                trace.setdefault("pops", []).append((level, le, e, s, survived))
            if survived:
                status[e] = EdgeStatus.SURVIVED
                for _w, p, q in g.partners(e):
                    for f in (p, q):
                        if f == x or f in anchors or f in seen:
                            continue
                        if t[f] != level or l[f] < le:
                            continue
                        if node_of is not None and restrict and node_of(f) in restrict:
                            continue
                        seen.add(f)
                        enqueued += 1
                        heapq.heappush(heap, (l[f], f))
                        if trace is not None:
                            trace["parent"][f] = e
                            trace.setdefault("pushes", []).append((level, e, f))
            else:
                status[e] = EdgeStatus.ELIMINATED
                retract(g, labeling, state, e, trace)
        for e, st in status.items():
            if st == EdgeStatus.SURVIVED:
                followers.add(e)
    per_node: dict[int, frozenset[int]] = {}
    searched: frozenset[int] = frozenset()
    if tree is not None:
        buckets: dict[int, set[int]] = {}
        for e in followers:
            nid = node_of(e)
            buckets.setdefault(nid, set()).add(e)
        per_node = {nid: frozenset(v) for nid, v in buckets.items()}
        tx = t[x]
        want: set[int] = set()
        for _w, p, q in g.partners(x):
            for f in (p, q):
                if f in anchors or t[f] >= tx:
                    nid = node_of(f)
                    if nid is not None:
                        want.add(nid)
        searched = frozenset(want - set(restrict))
    return FollowerSet(anchor=x, followers=frozenset(followers),
                       per_node=per_node, searched_nodes=searched,
                       enqueued=enqueued)


def upward_route_size(g: Graph, labeling: TrussLabeling, x: int, *,
                      anchors: frozenset[int] = frozenset()) -> int:
    """Distinct edges enqueued while searching x's followers, x excluded."""
    return get_followers(g, labeling, x, anchors=anchors).enqueued
