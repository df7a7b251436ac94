"""Constructors for the small named graphs used throughout the package."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, build_graph


def path(n: int) -> Graph:
    """Path P_n on n vertices."""
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Complete bipartite graph K_{a,b}; side X is 0..a-1."""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(d: int) -> Graph:
    """The d-dimensional hypercube on 2**d vertices (bit strings)."""
    n = 1 << d
    edges = []
    for v in range(n):
        for k in range(d):
            w = v ^ (1 << k)
            if v < w:
                edges.append((v, w))
    return build_graph(n, edges)
