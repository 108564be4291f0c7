"""Nested triangle-connected component tree and cross-iteration follower reuse."""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import TrussLabeling, anchored_truss_decompose
from .followers import FollowerSet, get_followers
from .graph import Graph

ROOT_ID = -1


class TreeNode:
    """One component at one level. E holds the edges that live exactly here
    (level == their trussness, or an anchor whose placement lands here)."""

    __slots__ = ("K", "I", "E", "parent", "children", "fingerprint")

    def __init__(self, K: int, E: tuple[int, ...], l_arr) -> None:
        self.K = K
        self.E = E
        self.I = E[0] if E else ROOT_ID
        self.parent: int | None = None
        self.children: list[int] = []
        self.fingerprint = (K, E, tuple(l_arr[e] for e in E))


class TrussComponentTree:
    def __init__(self) -> None:
        self.nodes: dict[int, TreeNode] = {}
        self.edge_to_node: dict[int, int] = {}
        self.sla: dict[int, tuple[int, ...]] = {}

    @property
    def root(self) -> TreeNode:
        return self.nodes[ROOT_ID]

    def node_of(self, e: int) -> int | None:
        return self.edge_to_node.get(e)

    def subtree_ids(self, nid: int) -> list[int]:
        out: list[int] = []
        stack = [nid]
        while stack:
            cur = stack.pop()
            out.append(cur)
            stack.extend(self.nodes[cur].children)
        return out

    def dump(self) -> list[dict]:
        rows = []
        for nid in sorted(self.nodes):
            n = self.nodes[nid]
            rows.append({"I": n.I, "K": n.K, "size": len(n.E),
                         "parent": n.parent})
        return rows

    def signature(self) -> frozenset:
        return frozenset((n.I, n.K, n.E, n.parent)
                         for n in self.nodes.values())


class _DSU:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}
        self.size: dict[int, int] = {}

    def add(self, a: int) -> None:
        if a not in self.parent:
            self.parent[a] = a
            self.size[a] = 1

    def find(self, a: int) -> int:
        p = self.parent
        root = a
        while p[root] != root:
            root = p[root]
        while p[a] != root:
            p[a], a = root, p[a]
        return root

    def union(self, a: int, b: int) -> tuple[int, int] | None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return None
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra, rb


def _build_forest(g: Graph, labeling: TrussLabeling, anchors: frozenset[int],
                  member_edges, min_level: int):
    """Forest of component nodes over member_edges, levels >= min_level.

    Anchors are present at every level for connectivity purposes; only the
    ones listed in member_edges can own a node slot (at their placement).
    Returns (nodes by id, top-level node ids, edge id -> node id).
    """
    t = labeling.t
    members = sorted(set(member_edges))
    dsu = _DSU()
    active = bytearray(g.m)
    tops: dict[int, set[int]] = {}

    def activate(batch) -> None:
        for e in batch:
            active[e] = 1
            dsu.add(e)
        for e in batch:
            for _w, p, q in g.partners(e):
                if active[p] and active[q]:
                    for f in (p, q):
                        merged = dsu.union(e, f)
                        if merged is not None:
                            ra, rb = merged
                            moved = tops.pop(rb, None)
                            if moved:
                                tops.setdefault(ra, set()).update(moved)

    activate([a for a in anchors if a < g.m])
    by_level: dict[int, list[int]] = {}
    for e in members:
        k = t[e]
        if k >= max(3, min_level):
            by_level.setdefault(k, []).append(e)
    nodes: dict[int, TreeNode] = {}
    edge_to_node: dict[int, int] = {}
    for k in sorted(by_level, reverse=True):
        batch = by_level[k]
        activate([e for e in batch if not active[e]])
        groups: dict[int, list[int]] = {}
        for e in batch:
            groups.setdefault(dsu.find(e), []).append(e)
        for root, owned in groups.items():
            node = TreeNode(k, tuple(sorted(owned)), labeling.l)
            nodes[node.I] = node
            for c in sorted(tops.get(root, ())):
                nodes[c].parent = node.I
                node.children.append(c)
            tops[root] = {node.I}
            for e in owned:
                edge_to_node[e] = node.I
    top_ids = sorted(i for s in tops.values() for i in s)
    return nodes, top_ids, edge_to_node


def compute_sla(g: Graph, labeling: TrussLabeling, tree: TrussComponentTree,
                anchors: frozenset[int], edges=None) -> None:
    """Node ids of each edge's not-removed-earlier triangle partners.

    A partner qualifies if it is an anchor or its trussness is at least the
    edge's own; partners without a node slot contribute nothing. Triangle-free
    edges get an empty tuple.
    """
    t = labeling.t
    node_of = tree.edge_to_node.get
    if edges is None:
        edges = range(g.m)
    for e in edges:
        if e in anchors:
            tree.sla.pop(e, None)
            continue
        te = t[e]
        if te <= 2:
            tree.sla[e] = ()
            continue
        ids: set[int] = set()
        for _w, p, q in g.partners(e):
            for f in (p, q):
                if f in anchors or t[f] >= te:
                    nid = node_of(f)
                    if nid is not None:
                        ids.add(nid)
        tree.sla[e] = tuple(sorted(ids))


def build_tree(g: Graph, labeling: TrussLabeling, *,
               anchors: frozenset[int] = frozenset()) -> TrussComponentTree:
    """Full component tree, rooted at a sentinel below every real level."""
    tree = TrussComponentTree()
    members = [e for e in range(g.m) if labeling.t[e] >= 3]
    nodes, top_ids, e2n = _build_forest(g, labeling, anchors, members, 3)
    root = TreeNode(2, (), labeling.l)
    tree.nodes[ROOT_ID] = root
    tree.nodes.update(nodes)
    tree.edge_to_node = e2n
    for tid in top_ids:
        nodes[tid].parent = ROOT_ID
        root.children.append(tid)
    compute_sla(g, labeling, tree, anchors)
    return tree


@dataclass(frozen=True)
class ReuseUpdate:
    """What one anchor commit changed: invalidated node ids, edges whose
    labels moved, and the node churn underneath the rebuilt subtree."""

    es: frozenset[int]
    relabeled: frozenset[int]
    vanished: frozenset[int]
    created: frozenset[int]
    subtree_edges: frozenset[int]


def follower_reuse(g: Graph, tree: TrussComponentTree, labeling: TrussLabeling,
                   x: int, anchors: frozenset[int], *,
                   followers: frozenset[int] = frozenset(),
                   followers_per_node: dict | None = None,
                   es_mode: str = "safe") -> ReuseUpdate:
    """Commit anchor x: relabel the affected subtree in place, splice the
    rebuilt nodes under the old parent, refresh sla locally, and report
    which cached search results a ledger must drop.

    anchors must already contain x. es_mode "safe" invalidates every node
    whose content shifted plus the nodes of x's surviving-level partners;
    "minimal" invalidates only x's old node, the nodes that held followers,
    and the followers' new nodes.
    """
    if x not in anchors:
        raise ValueError("x must be in anchors")
    if es_mode not in ("safe", "minimal"):
        raise ValueError(f"unknown es_mode {es_mode!r}")
    old_nid = tree.edge_to_node.get(x)
    if old_nid is None:
        # triangle-free edge: pinning it moves nothing
        labeling.l[x] = 0
        tree.sla.pop(x, None)
        return ReuseUpdate(frozenset(), frozenset((x,)), frozenset(),
                           frozenset(), frozenset((x,)))
    K = tree.nodes[old_nid].K
    sub_ids = tree.subtree_ids(old_nid)
    old_nodes = {nid: tree.nodes[nid] for nid in sub_ids}
    C: set[int] = set()
    for nid in sub_ids:
        C.update(tree.nodes[nid].E)
    peel_set = C | anchors
    state = anchored_truss_decompose(g, anchors, edge_subset=peel_set)
    relabeled: set[int] = set()
    for e in C:
        if e in anchors:
            nt, nl = state.placement[e], 0
        else:
            nt, nl = state.labeling.t[e], state.labeling.l[e]
        if labeling.t[e] != nt or labeling.l[e] != nl:
            labeling.t[e] = nt
            labeling.l[e] = nl
            relabeled.add(e)
    labeling.k_max = max((labeling.t[e] for e in range(g.m)
                          if e not in anchors), default=2)
    new_nodes, top_ids, e2n_new = _build_forest(g, labeling, anchors, C, K)
    parent_id = old_nodes[old_nid].parent
    for nid in sub_ids:
        del tree.nodes[nid]
    for e in C:
        tree.edge_to_node.pop(e, None)
    tree.nodes.update(new_nodes)
    tree.edge_to_node.update(e2n_new)
    p_node = tree.nodes[parent_id]
    p_node.children.remove(old_nid)
    for tid in top_ids:
        new_nodes[tid].parent = parent_id
        p_node.children.append(tid)
    p_node.children.sort()
    affected = set(C)
    for c in C:
        for _w, p, q in g.partners(c):
            affected.add(p)
            affected.add(q)
    compute_sla(g, labeling, tree, anchors, affected)
    old_ids = set(old_nodes)
    new_ids = set(new_nodes)
    vanished = old_ids - new_ids
    created = new_ids - old_ids
    changed = {nid for nid in old_ids & new_ids
               if old_nodes[nid].fingerprint != new_nodes[nid].fingerprint}
    if es_mode == "safe":
        es = vanished | created | changed
        for _w, p, q in g.partners(x):
            for f in (p, q):
                if f not in anchors and labeling.t[f] >= K:
                    nid = tree.edge_to_node.get(f)
                    if nid is not None:
                        es.add(nid)
    else:
        es = {old_nid}
        if followers_per_node:
            es.update(nid for nid, s in followers_per_node.items() if s)
        for f in followers:
            nid = tree.edge_to_node.get(f)
            if nid is not None:
                es.add(nid)
    return ReuseUpdate(frozenset(es), frozenset(relabeled),
                       frozenset(vanished), frozenset(created), frozenset(C))


class ReuseLedger:
    """Per-candidate cache of per-node follower results with validity stamps.

    An entry written in round r for node id n stays usable until n appears
    in a commit's invalidation set; rn(e) is the subset of e's sla nodes
    whose entries are still usable.
    """

    def __init__(self, tree: TrussComponentTree, *, es_mode: str = "safe") -> None:
        if es_mode not in ("safe", "minimal"):
            raise ValueError(f"unknown es_mode {es_mode!r}")
        self.tree = tree
        self.es_mode = es_mode
        self.follower_cache: dict[int, dict[int, tuple[int, frozenset[int]]]] = {}
        self.invalid_since: dict[int, int] = {}
        self.round = 1
        self.last_update: ReuseUpdate | None = None

    def rn(self, e: int) -> frozenset[int]:
        ent = self.follower_cache.get(e)
        if not ent:
            return frozenset()
        inv = self.invalid_since
        return frozenset(nid for nid in self.tree.sla.get(e, ())
                         if nid in ent and ent[nid][0] > inv.get(nid, 0))

    def record(self, e: int, fs: FollowerSet) -> None:
        ent = self.follower_cache.setdefault(e, {})
        r = self.round
        for nid in fs.searched_nodes:
            ent[nid] = (r, fs.per_node.get(nid, frozenset()))

    def evaluate(self, g: Graph, labeling: TrussLabeling, e: int,
                 anchors: frozenset[int]) -> tuple[frozenset[int], dict[int, frozenset[int]]]:
        """Full follower set of candidate e, cached nodes merged with a
        fresh search over the rest. Never stale: every sla node is covered
        every time."""
        sla = self.tree.sla.get(e, ())
        rn = self.rn(e)
        ent = self.follower_cache.get(e, {})
        per_node: dict[int, frozenset[int]] = {nid: ent[nid][1] for nid in rn}
        if len(rn) < len(sla):
            fs = get_followers(g, labeling, e, anchors=anchors,
                               tree=self.tree, restrict=rn)
            self.record(e, fs)
            per_node.update(fs.per_node)
        followers: set[int] = set()
        for s in per_node.values():
            followers.update(s)
        return frozenset(followers), {n: s for n, s in per_node.items() if s}

    def apply(self, update: ReuseUpdate) -> None:
        for nid in update.es:
            self.invalid_since[nid] = self.round
        if self.es_mode == "safe":
            for e in update.relabeled:
                self.follower_cache.pop(e, None)
        self.round += 1
        self.last_update = update


def classify_reuse(ledger: ReuseLedger, e: int) -> str:
    """FR: every sla node of e has a usable cached result (vacuously when
    sla is empty). NR: none has. PR: some but not all."""
    sla = ledger.tree.sla.get(e, ())
    rn = ledger.rn(e)
    if len(rn) == len(sla):
        return "FR"
    return "PR" if rn else "NR"
