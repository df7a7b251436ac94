"""Undirected and oriented graph types with exact integer matrices.

Vertices are the integers ``0..n-1``.  Edges are kept in canonical form:
each pair stored as ``(u, v)`` with ``u < v`` and the list sorted
lexicographically.  An orientation adds one direction bit per edge
(0 means the arc runs ``u -> v`` for the stored pair, 1 means ``v -> u``),
so reversing arcs, switching, and comparing orientations are all bit
operations on a fixed edge order.

All types are immutable after construction and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import (
    DuplicateEdgeError,
    InvalidBipartitionError,
    NotBipartiteError,
    SelfLoopError,
    VertexOutOfRangeError,
)

#: Bipartition side labels.
X, Y = 0, 1


def _normalize_edges(n: int, edges: Iterable) -> tuple[tuple[int, int], ...]:
    seen = set()
    out = []
    for e in edges:
        pair = sorted(int(x) for x in e)
        if len(pair) != 2:
            raise ValueError(f"edge {e!r} is not a pair")
        u, v = pair
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if u < 0 or v >= n:
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if (u, v) in seen:
            raise DuplicateEdgeError(f"edge ({u}, {v}) listed twice")
        seen.add((u, v))
        out.append((u, v))
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph in canonical form."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def _edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_index(self, u: int, v: int) -> int:
        """Position of the edge {u, v} in the canonical edge list."""
        return self._edge_index[(min(u, v), max(u, v))]

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        if self.n == 0:
            return 0
        if len(degs) == 1:
            return degs.pop()
        return None


def build_graph(n: int, edges: Iterable) -> Graph:
    """Construct a canonical :class:`Graph` from unordered vertex pairs.

    Rejects self-loops, duplicate pairs, and out-of-range endpoints.
    """
    return Graph(n, tuple(tuple(e) for e in edges))


@dataclass(frozen=True)
class OrientedGraph:
    """An orientation of a :class:`Graph`: one direction bit per edge."""

    graph: Graph
    direction: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.direction)
        if len(bits) != self.graph.m:
            raise ValueError(
                f"direction vector has length {len(bits)}, expected {self.graph.m}"
            )
        if any(b not in (0, 1) for b in bits):
            raise ValueError("direction bits must be 0 or 1")
        object.__setattr__(self, "direction", bits)

    @property
    def n(self) -> int:
        return self.graph.n

    def arc(self, i: int) -> tuple[int, int]:
        """The i-th edge as a (tail, head) pair."""
        u, v = self.graph.edges[i]
        return (v, u) if self.direction[i] else (u, v)

    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.arc(i) for i in range(self.graph.m))

    def reverse(self) -> "OrientedGraph":
        """Reverse every arc."""
        return OrientedGraph(self.graph, tuple(1 - b for b in self.direction))


def orient(g: Graph, direction: Iterable[int]) -> OrientedGraph:
    return OrientedGraph(g, tuple(direction))


def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> OrientedGraph:
    """Build an oriented graph from explicit (tail, head) pairs."""
    arcs = [(int(t), int(h)) for t, h in arcs]
    g = build_graph(n, arcs)
    bits = [0] * g.m
    for t, h in arcs:
        bits[g.edge_index(t, h)] = 1 if t > h else 0
    return OrientedGraph(g, tuple(bits))


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Symmetric 0/1 adjacency matrix as exact int64."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = 1
        a[v, u] = 1
    return a


def skew_adjacency(og: OrientedGraph) -> np.ndarray:
    """Skew-symmetric matrix S with S[t, h] = 1 for each arc t -> h."""
    s = np.zeros((og.n, og.n), dtype=np.int64)
    for i in range(og.graph.m):
        t, h = og.arc(i)
        s[t, h] = 1
        s[h, t] = -1
    return s


@dataclass(frozen=True)
class Bipartition:
    """A two-coloring, one side label (X or Y) per vertex.

    Canonical form: in each connected component the minimum-index vertex
    carries label X.
    """

    side: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(s) for s in self.side)
        if any(s not in (X, Y) for s in labels):
            raise ValueError("side labels must be X (0) or Y (1)")
        object.__setattr__(self, "side", labels)

    @property
    def x_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == X)

    @property
    def y_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == Y)

    def is_valid_for(self, g: Graph) -> bool:
        if len(self.side) != g.n:
            return False
        return all(self.side[u] != self.side[v] for u, v in g.edges)


def bipartition(g: Graph) -> Bipartition:
    """Canonical two-coloring by breadth-first search per component.

    The minimum-index vertex of each component gets label X, so the result
    is a deterministic function of the graph.  Raises
    :class:`NotBipartiteError` with an odd-cycle witness otherwise.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = X
        queue = [root]
        while queue:
            nxt = []
            for u in queue:
                for w in g.neighbors(u):
                    if side[w] == -1:
                        side[w] = side[u] ^ 1
                        parent[w] = u
                        depth[w] = depth[u] + 1
                        nxt.append(w)
                    elif side[w] == side[u]:
                        cycle = _odd_cycle_witness(u, w, parent, depth)
                        raise NotBipartiteError(
                            f"graph is not bipartite: odd cycle {cycle}",
                            odd_cycle=cycle,
                        )
            queue = nxt
    return Bipartition(tuple(side))


def _odd_cycle_witness(u, w, parent, depth):
    # Walk both endpoints of the conflicting edge up to their lowest
    # common ancestor; the two tree paths plus the edge form an odd cycle.
    pu, pw = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        pu.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        pw.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        pu.append(a)
        pw.append(b)
    # pu ends at the common ancestor; pw's copy of it is dropped.
    return tuple(pu + pw[-2::-1])


def elementary_orientation(g: Graph, b: Bipartition | None = None) -> OrientedGraph:
    """Orient every edge from the X side to the Y side.

    Uses the canonical bipartition when ``b`` is omitted.
    """
    if b is None:
        b = bipartition(g)
    elif not b.is_valid_for(g):
        raise InvalidBipartitionError("two-coloring does not properly color the graph")
    bits = tuple(0 if b.side[u] == X else 1 for u, v in g.edges)
    return OrientedGraph(g, bits)
