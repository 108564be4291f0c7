"""Subgraph sampling for scaled-down experiments."""

from __future__ import annotations

import math
import random

from .graph import Graph, subgraph


def _induced(g: Graph, verts: set[int]) -> Graph:
    return Graph(g.label_pair(e) for e, u, v in g.edges()
                 if u in verts and v in verts)


def subgraph_sample(g: Graph, mode: str, *, ratio: float | None = None,
                    seed: int = 0, min_edges: int = 150, max_edges: int = 250,
                    max_tries: int = 500) -> Graph:
    """vertex: induced graph on a ratio-sized vertex sample.
    edge: a ratio-sized edge sample with its endpoints.
    ball: breadth-first vertex growth around a random start until the induced
    edge count lands in [min_edges, max_edges]; overshoots retry elsewhere.
    """
    rng = random.Random(seed)
    if mode in ("vertex", "edge"):
        if ratio is None or not 0 < ratio <= 1:
            raise ValueError("vertex/edge modes need ratio in (0, 1]")
        if mode == "vertex":
            k = math.ceil(ratio * g.n)
            return _induced(g, set(rng.sample(range(g.n), k)))
        k = math.ceil(ratio * g.m)
        return subgraph(g, sorted(rng.sample(range(g.m), k)))
    if mode != "ball":
        raise ValueError(f"unknown sampling mode {mode!r}")
    if g.m < min_edges:
        raise ValueError("graph smaller than the requested window")
    for _try in range(max_tries):
        start = rng.randrange(g.n)
        inset = {start}
        queue = [start]
        qi = 0
        count = 0
        hit = False
        while qi < len(queue) and not hit:
            v = queue[qi]
            qi += 1
            nbrs = list(g.neighbors(v))
            rng.shuffle(nbrs)
            for w in nbrs:
                if w in inset:
                    continue
                count += sum(1 for z in g.neighbors(w) if z in inset)
                inset.add(w)
                queue.append(w)
                if count > max_edges:
                    break
                if count >= min_edges:
                    hit = True
                    break
            if count > max_edges:
                break
        if hit:
            return _induced(g, inset)
    raise RuntimeError(
        f"no ball sample landed in [{min_edges}, {max_edges}] "
        f"after {max_tries} tries")
