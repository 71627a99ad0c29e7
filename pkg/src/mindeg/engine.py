"""Exact minimum degree ordering engine.

The engine maintains two synchronized views of the evolving fill graph:

* a collection of hyperedges (vertex sets) whose clique union equals the
  current fill graph, used to skip edge insertions that are already
  guaranteed present, and
* an explicit adjacency structure (dense matrix or per-vertex ordered
  sets) holding the fill graph itself, used for presence queries and for
  selecting the next minimum-degree vertex through a bucket queue.

Eliminating a vertex merges the hyperedges containing it into its fill
neighborhood W. While merging, only pairs spanning the symmetric
difference of the merged-so-far set and the next hyperedge can be missing
from the adjacency, so only those pairs are attempted. Every attempted
pair increments an instrumentation counter, exposed on the result record
together with the elimination ordering, the per-step degrees, and the
full set of edges ever present.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from sortedcontainers import SortedSet

from .errors import ConfigError, StateError

BACKENDS = ("dense", "ordered-set", "auto")
TIE_BREAKS = ("smallest", "largest", "random")

# Auto backend switches off the dense matrix beyond this vertex count.
DEFAULT_DENSE_LIMIT = 8192

_EMPTY_PAIR = (np.empty(0, dtype=np.intp), np.empty(0, dtype=np.intp))


@dataclass(frozen=True)
class OrderingConfig:
    """Knobs for a single ordering run.

    ``backend`` picks the fill-graph adjacency ("dense", "ordered-set", or
    "auto" which uses the dense matrix up to ``dense_limit`` vertices).
    ``tie_break`` decides among equal minimum degrees; "random" requires an
    explicit ``seed`` so identical inputs always give identical results.
    """

    backend: str = "auto"
    tie_break: str = "smallest"
    seed: int | None = None
    dense_limit: int = DEFAULT_DENSE_LIMIT

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ConfigError(f"unknown backend {self.backend!r}, expected one of {BACKENDS}")
        if self.tie_break not in TIE_BREAKS:
            raise ConfigError(f"unknown tie_break {self.tie_break!r}, expected one of {TIE_BREAKS}")
        if self.tie_break == "random" and self.seed is None:
            raise ConfigError("tie_break='random' requires an explicit seed")
        if self.dense_limit < 1:
            raise ConfigError("dense_limit must be positive")


@dataclass(frozen=True)
class EliminationResult:
    """Outcome of one complete elimination run.

    ``fill_edges`` is the set of all edges ever present in any intermediate
    fill graph (original plus inserted), so ``m_plus`` equals the number of
    nonzeros a symbolic Cholesky factorization would produce under
    ``ordering``. ``insertion_attempts`` counts every examined vertex pair,
    whether or not the edge was already present.
    """

    ordering: tuple
    eliminated_degrees: tuple
    fill_edges: frozenset
    m_plus: int
    insertion_attempts: int
    backend_used: str

    def __post_init__(self):
        n = len(self.ordering)
        if sorted(self.ordering) != list(range(n)):
            raise ValueError("ordering is not a permutation of [0, n)")
        if len(self.eliminated_degrees) != n:
            raise ValueError("eliminated_degrees length differs from ordering length")
        if self.m_plus != len(self.fill_edges):
            raise ValueError("m_plus does not match fill_edges")
        if self.m_plus > n * (n - 1) // 2:
            raise ValueError("m_plus exceeds the simple-graph maximum")

    @property
    def n(self):
        return len(self.ordering)


class StepStats:
    """Per-elimination statistics: attempts made, fill edges added, |W|."""

    __slots__ = ("attempts", "fill_edges_added", "w_size")

    def __init__(self, attempts, fill_edges_added, w_size):
        self.attempts = attempts
        self.fill_edges_added = fill_edges_added
        self.w_size = w_size

    def __repr__(self):
        return (f"StepStats(attempts={self.attempts}, "
                f"fill_edges_added={self.fill_edges_added}, w_size={self.w_size})")


class EpochArray:
    """Set of vertices with O(1) reset by epoch increment.

    Membership means the per-vertex stamp equals the current epoch;
    bumping the epoch empties the set without touching the array.
    Python integers never overflow, so epochs are unbounded.
    """

    __slots__ = ("stamp", "epoch")

    def __init__(self, n):
        self.stamp = [0] * n
        self.epoch = 1  # stamps start at 0, so the set starts empty

    def clear(self):
        self.epoch += 1

    def add(self, v):
        self.stamp[v] = self.epoch

    def contains(self, v):
        return self.stamp[v] == self.epoch


class BucketQueue:
    """Degree-indexed intrusive doubly-linked lists with a cached minimum.

    Each vertex sits in the bucket of its current degree; moves are O(1).
    The cached minimum only decreases when something is inserted below it
    and scans upward on extraction, so total scan work is bounded by the
    number of degree drops plus extractions.
    """

    def __init__(self, degrees):
        n = len(degrees)
        self.n = n
        self._head = [-1] * n  # grows on demand if a degree exceeds n - 1
        self._next = [-1] * n
        self._prev = [-1] * n
        self._bucket = [-1] * n
        self.size = 0
        self.cached_min = 0
        for v, d in enumerate(degrees):
            self.insert(v, int(d))

    def __contains__(self, v):
        return self._bucket[v] != -1

    def insert(self, v, d):
        if d < 0:
            raise StateError(f"negative degree {d}")
        if d >= len(self._head):
            self._head.extend([-1] * (d + 1 - len(self._head)))
        if self._bucket[v] != -1:
            raise StateError(f"vertex {v} already queued")
        head = self._head[d]
        self._prev[v] = -1
        self._next[v] = head
        if head != -1:
            self._prev[head] = v
        self._head[d] = v
        self._bucket[v] = d
        self.size += 1
        if d < self.cached_min:
            self.cached_min = d

    def remove(self, v):
        d = self._bucket[v]
        if d == -1:
            raise StateError(f"vertex {v} is not queued")
        p, nx = self._prev[v], self._next[v]
        if p != -1:
            self._next[p] = nx
        else:
            self._head[d] = nx
        if nx != -1:
            self._prev[nx] = p
        self._prev[v] = self._next[v] = -1
        self._bucket[v] = -1
        self.size -= 1

    def move(self, v, d):
        if self._bucket[v] == d:
            return
        self.remove(v)
        self.insert(v, d)

    def degree_of(self, v):
        return self._bucket[v]

    def bucket_members(self, d):
        out = []
        v = self._head[d]
        while v != -1:
            out.append(v)
            v = self._next[v]
        return out

    def select_min(self, tie_break="smallest", rng=None):
        """Return (without removing) an active vertex of minimum degree."""
        if self.size == 0:
            raise StateError("bucket queue is empty")
        d = self.cached_min
        while self._head[d] == -1:
            d += 1
        self.cached_min = d
        members = self.bucket_members(d)
        return choose_tied(members, tie_break, rng)


def choose_tied(candidates, tie_break, rng=None):
    """Pick one vertex from a nonempty candidate set under a tie-break rule."""
    if tie_break == "smallest":
        return min(candidates)
    if tie_break == "largest":
        return max(candidates)
    if tie_break == "random":
        if rng is None:
            raise ConfigError("random tie-break requires a seeded rng")
        ordered = sorted(candidates)
        return ordered[rng.randrange(len(ordered))]
    raise ConfigError(f"unknown tie_break {tie_break!r}")


class HyperedgeStore:
    """Append-only hyperedge list with validity markers and incidence lists.

    Hyperedges are never compacted: invalidated ones stay in the per-vertex
    incidence lists and are skipped lazily during traversal, which keeps
    every operation O(size touched).
    """

    def __init__(self, n):
        self.members = []
        self.valid = []
        self.incidence = [[] for _ in range(n)]

    def add(self, vertices):
        handle = len(self.members)
        vs = list(vertices)
        self.members.append(vs)
        self.valid.append(True)
        for v in vs:
            self.incidence[v].append(handle)
        return handle

    def invalidate(self, handle):
        self.valid[handle] = False

    def valid_handles_of(self, v):
        return [h for h in self.incidence[v] if self.valid[h]]

    def valid_clique_edges(self):
        """Union of cliques over valid hyperedges (debug-scale only)."""
        edges = set()
        for vs, ok in zip(self.members, self.valid):
            if ok:
                edges.update(combinations(sorted(vs), 2))
        return edges


class FillAdjacency:
    """Mutable fill-graph adjacency shared by both backends.

    Tracks symmetric edges, per-vertex fill degrees, per-vertex active
    flags, and the global insertion-attempt counter. ``attempt_insert``
    bumps the counter unconditionally and inserts only if absent.
    """

    backend = "abstract"

    def __init__(self, graph):
        n = graph.n
        self.n = n
        self.attempts = 0
        self.fill_degree = np.fromiter(
            (len(a) for a in graph.adjacency), dtype=np.int64, count=n)
        self.active = np.ones(n, dtype=bool)

    def has_edge(self, u, v):
        raise NotImplementedError

    def attempt_insert(self, u, v):
        raise NotImplementedError

    def remove_edge(self, u, v):
        raise NotImplementedError

    def attempt_insert_block(self, xs, ys):
        """Attempt every pair in xs x ys; returns the new pairs as two arrays.

        Equivalent to nested attempt_insert calls in row-major order.
        """
        nx, ny = [], []
        for x in xs:
            for y in ys:
                if self.attempt_insert(x, y):
                    nx.append(x)
                    ny.append(y)
        if not nx:
            return _EMPTY_PAIR
        return (np.fromiter(nx, dtype=np.intp, count=len(nx)),
                np.fromiter(ny, dtype=np.intp, count=len(ny)))

    def remove_incident(self, a, bs):
        """Remove every edge {a, b} for b in bs; all must be present."""
        for b in bs:
            self.remove_edge(a, b)

    def deactivate(self, v):
        self.active[v] = False

    def current_edges(self):
        raise NotImplementedError


class DenseFillAdjacency(FillAdjacency):
    """Adjacency-matrix backend: O(1) queries, O(n^2) bytes, vectorized blocks."""

    backend = "dense"

    def __init__(self, graph):
        super().__init__(graph)
        self.matrix = np.zeros((self.n, self.n), dtype=bool)
        for v, nbrs in enumerate(graph.adjacency):
            if nbrs:
                self.matrix[v, list(nbrs)] = True

    def has_edge(self, u, v):
        return bool(self.matrix[u, v])

    def attempt_insert(self, u, v):
        self.attempts += 1
        if self.matrix[u, v]:
            return False
        self.matrix[u, v] = True
        self.matrix[v, u] = True
        self.fill_degree[u] += 1
        self.fill_degree[v] += 1
        return True

    def attempt_insert_block(self, xs, ys):
        self.attempts += len(xs) * len(ys)
        xa = np.fromiter(xs, dtype=np.intp, count=len(xs))
        ya = np.fromiter(ys, dtype=np.intp, count=len(ys))
        sub = self.matrix[np.ix_(xa, ya)]
        missing = ~sub
        if not missing.any():
            return _EMPTY_PAIR
        self.matrix[np.ix_(xa, ya)] = True
        self.matrix[np.ix_(ya, xa)] = True
        xi, yi = np.nonzero(missing)  # row-major, matching the scalar loop
        nx, ny = xa[xi], ya[yi]
        np.add.at(self.fill_degree, nx, 1)
        np.add.at(self.fill_degree, ny, 1)
        return nx, ny

    def remove_edge(self, u, v):
        if self.matrix[u, v]:
            self.matrix[u, v] = False
            self.matrix[v, u] = False
            self.fill_degree[u] -= 1
            self.fill_degree[v] -= 1

    def remove_incident(self, a, bs):
        ba = np.fromiter(bs, dtype=np.intp, count=len(bs))
        self.matrix[a, ba] = False
        self.matrix[ba, a] = False
        self.fill_degree[ba] -= 1
        self.fill_degree[a] -= len(bs)

    def current_edges(self):
        iu, iv = np.nonzero(np.triu(self.matrix, 1))
        return set(zip(iu.tolist(), iv.tolist()))


class OrderedSetFillAdjacency(FillAdjacency):
    """Per-vertex balanced ordered neighbor sets: O(log n) queries, O(m+) space."""

    backend = "ordered-set"

    def __init__(self, graph):
        super().__init__(graph)
        self.sets = [SortedSet(nbrs) for nbrs in graph.adjacency]

    def has_edge(self, u, v):
        return v in self.sets[u]

    def attempt_insert(self, u, v):
        self.attempts += 1
        if v in self.sets[u]:
            return False
        self.sets[u].add(v)
        self.sets[v].add(u)
        self.fill_degree[u] += 1
        self.fill_degree[v] += 1
        return True

    def remove_edge(self, u, v):
        if v in self.sets[u]:
            self.sets[u].remove(v)
            self.sets[v].remove(u)
            self.fill_degree[u] -= 1
            self.fill_degree[v] -= 1

    def current_edges(self):
        return {(u, v) for u in range(self.n) for v in self.sets[u] if u < v}


def _make_adjacency(graph, config):
    backend = config.backend
    if backend == "auto":
        backend = "dense" if graph.n <= config.dense_limit else "ordered-set"
    elif backend == "dense" and graph.n > config.dense_limit:
        raise ConfigError(
            f"dense backend limited to n <= {config.dense_limit}, got n = {graph.n}")
    if backend == "dense":
        return DenseFillAdjacency(graph)
    return OrderedSetFillAdjacency(graph)


class MinDegreeEngine:
    """Stateful elimination engine; one instance drives one run.

    Construct, then either call ``run()`` or alternate
    ``select_minimum_degree()`` / ``eliminate_vertex()`` manually. Debug
    accessors expose the current fill edges and the valid-hyperedge clique
    union so invariants can be checked after every iteration.
    """

    def __init__(self, graph, config=None):
        self.graph = graph
        self.config = config if config is not None else OrderingConfig()
        self.fill = _make_adjacency(graph, self.config)
        self.backend = self.fill.backend
        self.queue = BucketQueue([len(a) for a in graph.adjacency])
        self.store = HyperedgeStore(graph.n)
        for u, v in graph.edges():
            self.store.add((u, v))
        self._w_members = EpochArray(graph.n)
        self._scratch = EpochArray(graph.n)
        self._rng = random.Random(self.config.seed) if self.config.tie_break == "random" else None
        self.ordering = []
        self.eliminated_degrees = []
        self._new_edges = []

    @property
    def n(self):
        return self.graph.n

    @property
    def steps_done(self):
        return len(self.ordering)

    def is_done(self):
        return self.steps_done == self.n

    def select_minimum_degree(self):
        """Active vertex of minimum fill degree under the configured tie-break."""
        return self.queue.select_min(self.config.tie_break, self._rng)

    def eliminate_vertex(self, a):
        """Eliminate ``a``: merge its hyperedges into W, patch the fill graph.

        Invalidates every valid hyperedge containing ``a``, attempts
        insertion only across the symmetric-difference pairs, removes the
        edges {a, b} for b in W, appends the hyperedge W (if nonempty), and
        updates degrees and bucket positions of the affected vertices.
        """
        if not 0 <= a < self.n or not self.fill.active[a]:
            raise StateError(f"vertex {a} is not active")
        fill = self.fill
        start_attempts = fill.attempts
        degree_at_elimination = int(fill.fill_degree[a])
        self.queue.remove(a)

        handles = self.store.valid_handles_of(a)
        self._w_members.clear()
        w_list = []
        added = 0
        touched = []
        for h in handles:
            self.store.invalidate(h)
            members = self.store.members[h]
            fresh = [u for u in members if u != a and not self._w_members.contains(u)]
            if not fresh:
                # everything here is already in W; nothing new can be missing
                continue
            if w_list:
                self._scratch.clear()
                for u in members:
                    self._scratch.add(u)
                older = [w for w in w_list if not self._scratch.contains(w)]
                if older:
                    nx, ny = fill.attempt_insert_block(older, fresh)
                    if nx.size:
                        added += nx.size
                        self._new_edges.append((nx, ny))
                        touched.append(nx)
                        touched.append(ny)
            fill.remove_incident(a, fresh)
            for b in fresh:
                self._w_members.add(b)
                w_list.append(b)

        assert len(w_list) == degree_at_elimination, "merged W must equal N+(a)"
        if w_list:
            self.store.add(w_list)
            touched.append(np.fromiter(w_list, dtype=np.intp, count=len(w_list)))
        if touched:
            affected = np.unique(np.concatenate(touched))
            degrees = fill.fill_degree[affected].tolist()
            move = self.queue.move
            for v, d in zip(affected.tolist(), degrees):
                move(v, d)
        fill.deactivate(a)
        self.ordering.append(a)
        self.eliminated_degrees.append(degree_at_elimination)
        return StepStats(fill.attempts - start_attempts, int(added), len(w_list))

    def step(self):
        a = self.select_minimum_degree()
        return a, self.eliminate_vertex(a)

    def run(self, on_iteration=None):
        """Eliminate until empty; ``on_iteration(engine, i)`` fires after step i."""
        for i in range(self.n - self.steps_done):
            self.step()
            if on_iteration is not None:
                on_iteration(self, self.steps_done - 1)
        return self.result()

    def result(self):
        if not self.is_done():
            raise StateError(f"run incomplete: {self.steps_done} of {self.n} steps")
        total_new = 0
        inserted = set()
        if self._new_edges:
            allx = np.concatenate([nx for nx, _ in self._new_edges])
            ally = np.concatenate([ny for _, ny in self._new_edges])
            total_new = int(allx.size)
            lo = np.minimum(allx, ally).tolist()
            hi = np.maximum(allx, ally).tolist()
            inserted = set(zip(lo, hi))
        fill_edges = frozenset(self.graph.edge_set | inserted)
        m_plus = self.graph.m + total_new
        return EliminationResult(
            ordering=tuple(self.ordering),
            eliminated_degrees=tuple(self.eliminated_degrees),
            fill_edges=fill_edges,
            m_plus=m_plus,
            insertion_attempts=int(self.fill.attempts),
            backend_used=self.backend,
        )

    # -- debug accessors (small instances only) --

    def eliminated_set(self):
        return set(self.ordering)

    def current_fill_edges(self):
        return self.fill.current_edges()

    def hyperedge_clique_union(self):
        return self.store.valid_clique_edges()


def fast_minimum_degree(g, config=None, on_iteration=None):
    """Compute an exact minimum degree elimination ordering of ``g``.

    Returns an EliminationResult whose ordering eliminates, at every step,
    a vertex of minimum degree in the current fill graph. Identical
    (graph, config) pairs produce identical results, counters included.
    """
    return MinDegreeEngine(g, config).run(on_iteration=on_iteration)


@dataclass(frozen=True)
class AttemptBounds:
    """The three a-priori bounds on the insertion-attempt counter.

    ``sum_min_degree``: sum over ever-present edges of the smaller original
    endpoint degree. ``max_degree_times_m_plus``: input max degree times
    m_plus. ``edge_sqrt``: 2m * sqrt(2 m_plus), compared exactly in integer
    arithmetic via its square.
    """

    sum_min_degree: int
    max_degree_times_m_plus: int
    edge_sqrt_squared: int

    @property
    def edge_sqrt(self):
        return math.sqrt(self.edge_sqrt_squared)

    def satisfied_by(self, attempts):
        return (attempts <= self.sum_min_degree
                and attempts <= self.max_degree_times_m_plus
                and attempts * attempts <= self.edge_sqrt_squared)


def attempt_bounds(g, result):
    """Evaluate the insertion-attempt bounds for ``result`` on input ``g``."""
    deg = [len(a) for a in g.adjacency]
    sum_min = sum(min(deg[u], deg[v]) for u, v in result.fill_edges)
    delta = max(deg, default=0)
    # (2m * sqrt(2 m+))^2 = 8 m^2 m+, exact in integers
    return AttemptBounds(
        sum_min_degree=sum_min,
        max_degree_times_m_plus=delta * result.m_plus,
        edge_sqrt_squared=8 * g.m * g.m * result.m_plus,
    )
