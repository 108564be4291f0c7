"""Undirected simple graphs with dense, stable vertex and edge ids."""

from __future__ import annotations

import gzip
from typing import Iterable, Iterator


class EdgeListParseError(ValueError):
    """Raised when an edge-list file has a line that cannot be parsed."""


class Graph:
    """Immutable undirected simple graph.

    Vertices and edges get dense integer ids in first-appearance order.
    Construct from an iterable of label pairs; duplicate edges and
    self-loops are rejected (clean them up first, or use load_edge_list).
    """

    __slots__ = ("n", "m", "labels", "endpoints", "_adj", "_adj_edge",
                 "_label_to_id", "_partners")

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()) -> None:
        self.labels: list[int] = []
        self._label_to_id: dict[int, int] = {}
        self._adj_edge: list[dict[int, int]] = []
        self.endpoints: list[tuple[int, int]] = []
        for a, b in pairs:
            if a == b:
                raise ValueError(f"self-loop at vertex {a!r}")
            u = self._intern(a)
            v = self._intern(b)
            if u > v:
                u, v = v, u
            if v in self._adj_edge[u]:
                raise ValueError(f"duplicate edge {a!r} {b!r}")
            eid = len(self.endpoints)
            self.endpoints.append((u, v))
            self._adj_edge[u][v] = eid
            self._adj_edge[v][u] = eid
        self.n = len(self.labels)
        self.m = len(self.endpoints)
        # sorted neighbor lists enable linear-merge common-neighbor scans
        self._adj: list[list[int]] = [sorted(d) for d in self._adj_edge]
        self._partners: dict[int, tuple[tuple[int, int, int], ...]] = {}

    def _intern(self, label: int) -> int:
        vid = self._label_to_id.get(label)
        if vid is None:
            vid = len(self.labels)
            self._label_to_id[label] = vid
            self.labels.append(label)
            self._adj_edge.append({})
        return vid

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def neighbors(self, u: int) -> list[int]:
        return self._adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_edge[u]

    def edge_id(self, u: int, v: int) -> int:
        return self._adj_edge[u][v]

    def vertex_id(self, label: int) -> int:
        return self._label_to_id[label]

    def edge_by_labels(self, a: int, b: int) -> int:
        return self._adj_edge[self._label_to_id[a]][self._label_to_id[b]]

    def label_pair(self, e: int) -> tuple[int, int]:
        u, v = self.endpoints[e]
        return self.labels[u], self.labels[v]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for e, (u, v) in enumerate(self.endpoints):
            yield e, u, v

    def partners(self, e: int) -> tuple[tuple[int, int, int], ...]:
        """Triangles through e, as (third vertex, edge to it from u, from v)."""
        got = self._partners.get(e)
        if got is None:
            u, v = self.endpoints[e]
            eu, ev = self._adj_edge[u], self._adj_edge[v]
            if len(ev) < len(eu):
                small, big = ev, eu
                swap = True
            else:
                small, big = eu, ev
                swap = False
            out = []
            for w, p in small.items():
                q = big.get(w)
                if q is not None and p != e and q != e:
                    out.append((w, q, p) if swap else (w, p, q))
            out.sort()
            got = tuple(out)
            self._partners[e] = got
        return got

    def label_map_rows(self) -> list[tuple[int, int]]:
        """(vertex id, original label) pairs for export."""
        return list(enumerate(self.labels))


def common_neighbors(g: Graph, e: int) -> list[int]:
    """Sorted vertex ids adjacent to both endpoints of e."""
    u, v = g.endpoints[e]
    a, b = g.neighbors(u), g.neighbors(v)
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return out


def neighbor_edges(g: Graph, e: int) -> list[tuple[int, int, int]]:
    """One (w, e1, e2) entry per triangle containing e."""
    return list(g.partners(e))


def support(g: Graph, e: int) -> int:
    return len(g.partners(e))


def triangle_count(g: Graph) -> int:
    return sum(len(g.partners(e)) for e in range(g.m)) // 3


def subgraph(g: Graph, edge_ids: Iterable[int]) -> Graph:
    """New graph from the given edges, original labels kept, ids renumbered."""
    return Graph(g.label_pair(e) for e in edge_ids)


def load_edge_list(path: str, *, dedupe: bool = True,
                   drop_self_loops: bool = True) -> Graph:
    """Parse a whitespace-separated edge list file into a Graph.

    Lines starting with '#' are comments. Only the first two fields of a
    line are used (extra columns such as timestamps are ignored). Vertex
    labels must be integers. Gzip transparently by '.gz' extension.
    With dedupe, repeated pairs (either orientation) collapse to one edge;
    otherwise they raise. Same contract for self-loops.
    """
    opener = gzip.open if path.endswith(".gz") else open
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    with opener(path, "rt", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            fields = s.split()
            if len(fields) < 2:
                raise EdgeListParseError(
                    f"{path}:{lineno}: expected two vertex fields")
            try:
                a, b = int(fields[0]), int(fields[1])
            except ValueError:
                raise EdgeListParseError(
                    f"{path}:{lineno}: non-integer vertex token") from None
            if a == b:
                if drop_self_loops:
                    continue
                raise EdgeListParseError(f"{path}:{lineno}: self-loop {a}")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                if dedupe:
                    continue
                raise EdgeListParseError(
                    f"{path}:{lineno}: duplicate edge {a} {b}")
            seen.add(key)
            pairs.append((a, b))
    return Graph(pairs)
