"""Immutable simple-graph representation and elementary constructions.

Vertex ids are dense 0-based integers. All graphs are undirected and
simple: construction collapses duplicate edges and silently drops
self-loops (sparse-pattern files routinely carry the diagonal).
"""

from __future__ import annotations

import operator
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import InputError


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Instances are immutable after construction and safe to share across
    concurrent readers. ``adjacency`` holds one strictly ascending tuple of
    neighbors per vertex, symmetric by construction, and ``m`` equals half
    the sum of the adjacency lengths.
    """

    n: int
    adjacency: tuple
    m: int

    def degree(self, v):
        """Number of neighbors of ``v``."""
        self.check_vertex(v)
        return len(self.adjacency[v])

    def neighbors(self, v):
        self.check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u, v):
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            return False
        # adjacency lists are short in the sparse regime; scan is fine
        return v in self.adjacency[u]

    def edges(self):
        """Yield every edge once as a pair (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    @cached_property
    def edge_set(self):
        return frozenset(self.edges())

    @cached_property
    def neighbor_masks(self):
        """Per-vertex neighborhoods as integer bitmasks (bit v set iff v adjacent)."""
        return tuple(sum(1 << v for v in nbrs) for nbrs in self.adjacency)

    def max_degree(self):
        return max((len(a) for a in self.adjacency), default=0)

    def check_vertex(self, v):
        try:
            idx = operator.index(v)  # accepts numpy integers too
        except TypeError:
            raise InputError(f"vertex {v!r} is not an integer") from None
        if isinstance(v, bool) or not 0 <= idx < self.n:
            raise InputError(f"vertex {v!r} out of range [0, {self.n})")

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n, edges):
    """Build a Graph from unordered vertex pairs.

    Duplicate edges collapse to one, self-loops are dropped, and any
    endpoint outside [0, n) raises InputError naming the offending pair.
    The result is independent of the input order.
    """
    if n < 0:
        raise InputError(f"vertex count must be nonnegative, got {n}")
    nbrs = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not 0 <= u < n or not 0 <= v < n:
            raise InputError(f"edge {(u, v)} has an endpoint outside [0, {n})")
        if u == v:
            continue
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    m = sum(len(a) for a in adjacency) // 2
    return Graph(n, adjacency, m)


def degree(g, v):
    """Degree of ``v`` in ``g`` (module-level convenience for Graph.degree)."""
    return g.degree(v)


def graph_union(g1, g2):
    """Union of two graphs over the shared id space; n is the larger of the two."""
    n = max(g1.n, g2.n)
    edges = list(g1.edges())
    edges.extend(g2.edges())
    return from_edge_list(n, edges)


def complete_graph(u_set, n):
    """Complete graph on the vertex set ``u_set`` inside an n-vertex id space."""
    verts = sorted(u_set)
    if verts and (verts[0] < 0 or verts[-1] >= n):
        raise InputError(f"clique vertices must lie in [0, {n})")
    return from_edge_list(n, combinations(verts, 2))


def gnp_random_graph(n, p, seed):
    """Erdos-Renyi G(n, p) with a deterministic seed."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def gnm_random_graph(n, m, seed):
    """Uniform random graph with exactly min(m, C(n,2)) edges."""
    total = n * (n - 1) // 2
    m = min(m, total)
    rng = random.Random(seed)
    chosen = set()
    while len(chosen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            chosen.add((u, v) if u < v else (v, u))
    return from_edge_list(n, chosen)


def grid_graph(rows, cols):
    """4-neighbor grid on rows x cols vertices, row-major ids."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return from_edge_list(rows * cols, edges)
