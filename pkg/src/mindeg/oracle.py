"""Brute-force reference implementations straight from the definitions.

Everything here favors obviousness over speed: the fill graph after
eliminating a vertex set is computed from connected components of the
eliminated-induced subgraph, and elimination orderings are checked by
simulating the whole process on an explicit dense adjacency matrix. The
dense simulator refuses graphs above ``max_n`` (default 2000) unless the
caller lifts the cap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .engine import EliminationResult, choose_tied
from .errors import ConfigError, InputError, StateError
from .graph import from_edge_list

DEFAULT_ORACLE_LIMIT = 2000


def _check_eliminated(g, eliminated):
    elim = set(eliminated)
    for v in elim:
        g.check_vertex(v)
    return elim


def _eliminated_components(g, elim):
    """Connected components of the eliminated-induced subgraph.

    Returns (component, boundary) pairs where boundary is the sorted list
    of surviving vertices adjacent to the component.
    """
    comps = []
    seen = set()
    for s in sorted(elim):
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        component = [s]
        boundary = set()
        while stack:
            x = stack.pop()
            for nb in g.adjacency[x]:
                if nb in elim:
                    if nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
                        component.append(nb)
                else:
                    boundary.add(nb)
        comps.append((component, sorted(boundary)))
    return comps


def fill_graph(g, eliminated):
    """Graph left on the survivors after eliminating ``eliminated``.

    Two survivors are adjacent iff some path joins them in ``g`` whose
    internal vertices are all eliminated; equivalently, original edges
    between survivors plus a clique on the boundary of every connected
    component of the eliminated set. Eliminated vertices remain in the id
    space as isolated vertices.
    """
    elim = _check_eliminated(g, eliminated)
    edges = [e for e in g.edges() if e[0] not in elim and e[1] not in elim]
    for _, boundary in _eliminated_components(g, elim):
        edges.extend(combinations(boundary, 2))
    return from_edge_list(g.n, edges)


def fill_degrees(g, eliminated):
    """Fill degree of every survivor; -1 marks eliminated slots.

    Same definition as fill_graph but returns only degrees, via bitmask
    unions of component boundaries, so subset checkers can afford it.
    """
    elim = _check_eliminated(g, eliminated)
    n = g.n
    masks = g.neighbor_masks
    surviving = (1 << n) - 1
    for v in elim:
        surviving &= ~(1 << v)
    acc = {}
    for _, boundary in _eliminated_components(g, elim):
        bmask = 0
        for b in boundary:
            bmask |= 1 << b
        for b in boundary:
            acc[b] = acc.get(b, 0) | bmask
    out = np.full(n, -1, dtype=np.int64)
    for v in range(n):
        if v in elim:
            continue
        mask = ((masks[v] & surviving) | acc.get(v, 0)) & ~(1 << v)
        out[v] = mask.bit_count()
    return out


class FillSimulator:
    """Explicit dense fill-graph simulator used by every oracle check.

    Keeps the adjacency matrix of the current fill graph, incremental
    degrees (cross-checked against row sums in tests), and optionally the
    "ever present" matrix that yields m_plus.
    """

    def __init__(self, g, max_n=DEFAULT_ORACLE_LIMIT, track_ever=True):
        if max_n is not None and g.n > max_n:
            raise ConfigError(
                f"dense oracle capped at n <= {max_n} (got {g.n}); pass max_n=None to lift")
        n = g.n
        self.n = n
        self.adj = np.zeros((n, n), dtype=bool)
        for v, nbrs in enumerate(g.adjacency):
            if nbrs:
                self.adj[v, list(nbrs)] = True
        self.active = np.ones(n, dtype=bool)
        self.degrees = np.fromiter((len(a) for a in g.adjacency), dtype=np.int64, count=n)
        self.ever = self.adj.copy() if track_ever else None

    def eliminate(self, v):
        """Clique the neighborhood of ``v``, then drop ``v``; returns N+(v)."""
        if not self.active[v]:
            raise StateError(f"vertex {v} already eliminated")
        nb = np.nonzero(self.adj[v])[0]
        if nb.size:
            block = np.ix_(nb, nb)
            missing = ~self.adj[block]
            np.fill_diagonal(missing, False)
            if missing.any():
                self.adj[block] |= missing
                if self.ever is not None:
                    self.ever[block] |= missing
                self.degrees[nb] += missing.sum(axis=1)
            self.adj[v, nb] = False
            self.adj[nb, v] = False
            self.degrees[nb] -= 1
        self.degrees[v] = 0
        self.active[v] = False
        return nb

    def min_active_degree(self):
        return int(self.degrees[self.active].min())

    def min_degree_vertices(self):
        d = self.min_active_degree()
        return np.nonzero(self.active & (self.degrees == d))[0].tolist()

    def ever_edge_count(self):
        return int(np.count_nonzero(self.ever)) // 2

    def ever_edges(self):
        iu, iv = np.nonzero(np.triu(self.ever, 1))
        return frozenset(zip(iu.tolist(), iv.tolist()))


def _check_permutation(g, ordering):
    order = [int(v) for v in ordering]
    if sorted(order) != list(range(g.n)):
        raise InputError(f"ordering is not a permutation of [0, {g.n})")
    return order


def naive_minimum_degree(g, tie_break="smallest", seed=None, max_n=DEFAULT_ORACLE_LIMIT):
    """Reference cubic-time minimum degree ordering on the explicit fill graph.

    At each step picks an argmin fill-degree vertex under ``tie_break``,
    inserts the full clique on its neighborhood, and deletes it. The
    insertion_attempts counter tallies every clique pair examined.
    """
    if tie_break == "random" and seed is None:
        raise ConfigError("tie_break='random' requires an explicit seed")
    rng = random.Random(seed) if tie_break == "random" else None
    sim = FillSimulator(g, max_n=max_n, track_ever=True)
    ordering = []
    eliminated_degrees = []
    attempts = 0
    for _ in range(g.n):
        v = choose_tied(sim.min_degree_vertices(), tie_break, rng)
        eliminated_degrees.append(int(sim.degrees[v]))
        nb = sim.eliminate(v)
        attempts += nb.size * (nb.size - 1) // 2
        ordering.append(int(v))
    return EliminationResult(
        ordering=tuple(ordering),
        eliminated_degrees=tuple(eliminated_degrees),
        fill_edges=sim.ever_edges() if g.n else frozenset(),
        m_plus=sim.ever_edge_count() if g.n else 0,
        insertion_attempts=attempts,
        backend_used="naive",
    )


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of an ordering check; falsy when a violation was found.

    ``violation_step`` is the 0-based first step whose eliminated vertex
    did not have minimum fill degree, and ``witness`` is an active vertex
    of strictly smaller degree at that step.
    """

    ok: bool
    violation_step: int | None = None
    witness: int | None = None

    def __bool__(self):
        return self.ok


def verify_min_degree_ordering(g, ordering, max_n=DEFAULT_ORACLE_LIMIT):
    """Check that ``ordering`` eliminates a minimum-degree vertex at every step."""
    order = _check_permutation(g, ordering)
    sim = FillSimulator(g, max_n=max_n, track_ever=False)
    for i, v in enumerate(order):
        best = sim.min_active_degree()
        if int(sim.degrees[v]) != best:
            witness = int(np.nonzero(sim.active & (sim.degrees == best))[0][0])
            return VerifyResult(False, violation_step=i, witness=witness)
        sim.eliminate(v)
    return VerifyResult(True)


def fill_count_of_ordering(g, ordering, max_n=DEFAULT_ORACLE_LIMIT):
    """m_plus of an arbitrary (not necessarily min-degree) elimination ordering."""
    order = _check_permutation(g, ordering)
    sim = FillSimulator(g, max_n=max_n, track_ever=True)
    for v in order:
        sim.eliminate(v)
    return sim.ever_edge_count()


@dataclass(frozen=True)
class Orientation:
    """Direction assignment over a graph's edges, one (tail, head) per edge."""

    n: int
    edges: tuple

    def out_degrees(self):
        out = [0] * self.n
        for tail, _ in self.edges:
            out[tail] += 1
        return out


def orient_bounded_outdegree(g):
    """Orient every edge from its lower-degree endpoint (ties toward smaller id).

    The resulting out-degrees d all satisfy d*d <= 2m.
    """
    deg = [len(a) for a in g.adjacency]
    directed = []
    for u, v in g.edges():
        # u < v here, so equal degrees orient from the smaller id
        if deg[u] <= deg[v]:
            directed.append((u, v))
        else:
            directed.append((v, u))
    return Orientation(g.n, tuple(directed))
