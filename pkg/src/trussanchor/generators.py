"""Graph generators: random families, fixtures, the planted coverage gadget,
and a deterministic superadditivity witness."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .decomposition import truss_decompose, trussness_gain
from .graph import Graph


def gnm_random_graph(n: int, m: int, seed: int = 0) -> Graph:
    """Uniform simple graph with n potential vertices and exactly m edges.
    Vertices that draw no edge do not appear in the result."""
    pairs = list(combinations(range(n), 2))
    if m > len(pairs):
        raise ValueError(f"m={m} exceeds {len(pairs)} possible edges")
    rng = random.Random(seed)
    return Graph(rng.sample(pairs, m))


def planted_clique_graph(n: int, m: int, k: int, seed: int = 0) -> Graph:
    """A k-clique on random vertices padded with random edges up to m total."""
    if k > n:
        raise ValueError("clique larger than vertex set")
    rng = random.Random(seed)
    verts = rng.sample(range(n), k)
    clique = [(a, b) if a < b else (b, a)
              for a, b in combinations(verts, 2)]
    if m < len(clique):
        raise ValueError(f"m={m} below clique size {len(clique)}")
    taken = set(clique)
    rest = [p for p in combinations(range(n), 2) if p not in taken]
    if m - len(clique) > len(rest):
        raise ValueError(f"m={m} exceeds possible edges")
    extra = rng.sample(rest, m - len(clique))
    return Graph(clique + extra)


def powerlaw_cluster_graph(n: int, m_attach: int, p: float, seed: int = 0) -> Graph:
    """Growing graph: each new vertex links to m_attach earlier ones with
    degree-proportional preference; with probability p a link closes a
    triangle with the previous pick instead."""
    if not 1 <= m_attach < n:
        raise ValueError("need 1 <= m_attach < n")
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    rng = random.Random(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    repeated: list[int] = []
    pairs: list[tuple[int, int]] = []

    def link(a: int, b: int) -> None:
        adj[a].add(b)
        adj[b].add(a)
        repeated.append(a)
        repeated.append(b)
        pairs.append((a, b))

    start = m_attach + 1
    for i in range(start):
        for j in range(i + 1, start):
            link(i, j)
    for v in range(start, n):
        chosen: set[int] = set()
        prev: int | None = None
        while len(chosen) < m_attach:
            if prev is not None and rng.random() < p:
                cands = [w for w in sorted(adj[prev])
                         if w != v and w not in chosen]
                w = rng.choice(cands) if cands else repeated[rng.randrange(len(repeated))]
            else:
                w = repeated[rng.randrange(len(repeated))]
            if w == v or w in chosen:
                continue
            chosen.add(w)
            prev = w
        for w in sorted(chosen):
            link(v, w)
    return Graph(pairs)


def bowtie_graph() -> Graph:
    """Two triangles sharing one edge."""
    return Graph([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def complete_graph(n: int) -> Graph:
    return Graph(combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph((i, i + 1) for i in range(n - 1))


def canonical_membership(s: int, t: int) -> tuple[frozenset[int], ...]:
    """Deterministic covering family: element j goes to set j mod s."""
    return tuple(frozenset(j for j in range(t) if j % s == i)
                 for i in range(s))


@dataclass(frozen=True)
class GadgetSpec:
    s: int
    t: int
    membership: tuple[frozenset[int], ...] | None = None

    def __post_init__(self) -> None:
        if self.s < 1 or self.t < 1:
            raise ValueError("need s >= 1 and t >= 1")
        if self.membership is None:
            object.__setattr__(self, "membership",
                               canonical_membership(self.s, self.t))
        memb = tuple(frozenset(x) for x in self.membership)
        object.__setattr__(self, "membership", memb)
        if len(memb) != self.s:
            raise ValueError("membership must list one set per s")
        covered: set[int] = set()
        for grp in memb:
            for j in grp:
                if not 0 <= j < self.t:
                    raise ValueError(f"element {j} out of range")
            covered.update(grp)
        if covered != set(range(self.t)):
            raise ValueError("every element must be covered at least once")


@dataclass(frozen=True)
class GadgetResult:
    graph: Graph
    set_edges: tuple[int, ...]
    element_edges: tuple[int, ...]
    spec: GadgetSpec

    def expected_set_trussness(self) -> tuple[int, ...]:
        return tuple(len(grp) + 2 for grp in self.spec.membership)

    def expected_element_trussness(self) -> int:
        return self.spec.t + 2


def generate_gadget(spec: GadgetSpec) -> GadgetResult:
    """Coverage instance as a graph. Hub spokes: one set edge per set
    (ids 0..s-1), one element edge per element (ids s..s+t-1). Anchoring set
    edge i lifts exactly its covered element edges by one; clique padding
    keeps every other edge unmoved."""
    s, t = spec.s, spec.t
    hub = 0
    alpha = [1 + i for i in range(s)]
    phi = [1 + s + j for j in range(t)]
    pairs: list[tuple[int, int]] = []
    for i in range(s):
        pairs.append((hub, alpha[i]))
    for j in range(t):
        pairs.append((hub, phi[j]))
    counter = [1 + s + t]

    def fresh(k: int) -> list[int]:
        out = list(range(counter[0], counter[0] + k))
        counter[0] += k
        return out

    def clique(verts: list[int]) -> None:
        pairs.extend(combinations(verts, 2))

    for i in range(s):
        for j in sorted(spec.membership[i]):
            clique([alpha[i], phi[j]] + fresh(t + 1))
    for j in range(t):
        for _r in range(t):
            z = fresh(1)[0]
            clique([hub, z] + fresh(t + 1))
            clique([phi[j], z] + fresh(t + 1))
    g = Graph(pairs)
    return GadgetResult(graph=g, set_edges=tuple(range(s)),
                        element_edges=tuple(range(s, s + t)), spec=spec)


def coverage_greedy(spec: GadgetSpec, budget: int) -> tuple[list[int], list[int]]:
    """Greedy max-coverage over the membership family; ties and zero-gain
    rounds go to the smallest set index. Returns (picked indices, marginals)."""
    covered: set[int] = set()
    picked: list[int] = []
    marginals: list[int] = []
    left = set(range(spec.s))
    for _ in range(min(budget, spec.s)):
        best_i = -1
        best_gain = -1
        for i in sorted(left):
            gain = len(spec.membership[i] - covered)
            if gain > best_gain:
                best_gain, best_i = gain, i
        picked.append(best_i)
        marginals.append(best_gain)
        covered |= spec.membership[best_i]
        left.remove(best_i)
    return picked, marginals


@dataclass(frozen=True)
class Witness:
    """Two anchor sets whose union gains strictly more than their parts."""

    graph: Graph
    set_a: frozenset[int]
    set_b: frozenset[int]
    gain_a: int
    gain_b: int
    gain_union: int
    gain_intersection: int

    def holds(self) -> bool:
        return self.gain_a + self.gain_b < self.gain_union + self.gain_intersection


def find_nonsubmodular_witness() -> Witness:
    """Deterministic construction: a two-triangle edge whose wings each need
    pinning before anything moves, so singletons gain 0 but the pair gains 1."""
    u, v, w1, w2 = 0, 1, 2, 3
    pairs = [(u, v), (u, w1), (u, w2)]
    pairs.extend(combinations([v, w1, 4, 5, 6], 2))
    pairs.extend(combinations([v, w2, 7, 8, 9], 2))
    g = Graph(pairs)
    a = frozenset({g.edge_by_labels(u, w1)})
    b = frozenset({g.edge_by_labels(u, w2)})
    base = truss_decompose(g)
    wit = Witness(
        graph=g, set_a=a, set_b=b,
        gain_a=trussness_gain(g, a, base=base),
        gain_b=trussness_gain(g, b, base=base),
        gain_union=trussness_gain(g, a | b, base=base),
        gain_intersection=trussness_gain(g, a & b, base=base),
    )
    if not wit.holds():
        raise AssertionError("witness construction no longer holds")
    return wit
