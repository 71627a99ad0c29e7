"""Adversarial filler graphs and the clique-union decision procedure.

A filler for a target vertex set is a graph on targets plus disjoint
"extra" vertices such that eliminating all extras leaves exactly the
complete graph on the targets. The constructions here keep the extras
low-degree at every intermediate state, and the recursive variant
additionally guarantees that greedy minimum-degree elimination always
prefers extras, which forces quadratic fill on an input of near-linear
size. Checkers validate these properties against the brute-force oracle,
exhaustively when the extra set is small and by seeded sampling plus
greedy-elimination prefixes otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .engine import fast_minimum_degree
from .errors import InputError
from .graph import complete_graph, from_edge_list
from .oracle import FillSimulator, fill_degrees, fill_graph

MINDEG_BASE_SIZE = 7  # below this the complete graph itself is the filler


@dataclass(frozen=True)
class LabeledGraph:
    """A graph whose vertices are partitioned into targets and extras.

    Extras are the auxiliary vertices a filler construction adds; targets
    are the set the construction completes into a clique. The two sets are
    disjoint and together cover every non-isolated vertex (ids outside
    both sets may exist but must be isolated).
    """

    graph: object
    targets: frozenset
    extras: frozenset

    def __post_init__(self):
        object.__setattr__(self, "targets", frozenset(self.targets))
        object.__setattr__(self, "extras", frozenset(self.extras))
        if self.targets & self.extras:
            raise InputError("targets and extras must be disjoint")
        labeled = self.targets | self.extras
        for v in labeled:
            self.graph.check_vertex(v)
        for v in range(self.graph.n):
            if self.graph.adjacency[v] and v not in labeled:
                raise InputError(f"non-isolated vertex {v} is neither target nor extra")


def _target_list(targets):
    us = sorted(set(targets))
    if not us:
        raise InputError("target set must be nonempty")
    if us[0] < 0:
        raise InputError("target ids must be nonnegative")
    return us


def _resolve_fresh(us, fresh_start):
    if fresh_start is None:
        return us[-1] + 1
    if fresh_start <= us[-1]:
        raise InputError("fresh_start must exceed every target id")
    return fresh_start


def _comb_edges(us, start):
    """Path of len(us) fresh extras matched one-to-one onto the sorted targets."""
    k = len(us)
    extras = list(range(start, start + k))
    edges = [(extras[i], extras[i + 1]) for i in range(k - 1)]
    edges.extend((us[i], extras[i]) for i in range(k))
    return edges, extras, start + k


def _bounded_edges(us, d, start):
    if d < 2:
        raise InputError(f"degree bound must be at least 2, got {d}")
    half = d // 2
    parts = [us[i:i + half] for i in range(0, len(us), half)]
    if len(parts) == 1:
        return _comb_edges(us, start)
    edges = []
    extras = []
    for i, j in combinations(range(len(parts)), 2):
        pair_targets = sorted(parts[i] + parts[j])
        e, x, start = _comb_edges(pair_targets, start)
        edges.extend(e)
        extras.extend(x)
    return edges, extras, start


def _min_degree_edges(us, start):
    if len(us) <= MINDEG_BASE_SIZE:
        return list(combinations(us, 2)), [], start
    half = len(us) // 2
    e1, w1, start = _min_degree_edges(us[:half], start)
    e2, w2, start = _min_degree_edges(us[half:], start)
    e3, w3, start = _bounded_edges(us, half - 2, start)
    return e1 + e2 + e3, w1 + w2 + w3, start


def comb_filler(targets, fresh_start=None):
    """Comb over ``targets``: an extras path matched one-to-one onto them.

    Eliminating all extras completes the targets into a clique, and no
    surviving extra ever exceeds degree len(targets).
    """
    us = _target_list(targets)
    start = _resolve_fresh(us, fresh_start)
    edges, extras, end = _comb_edges(us, start)
    return LabeledGraph(from_edge_list(end, edges), frozenset(us), frozenset(extras))


def bounded_filler(targets, d, fresh_start=None):
    """Filler whose extras stay below degree ``d`` at every intermediate state.

    Partitions the sorted targets into chunks of size at most d//2 and
    unions one comb per unordered chunk pair (one comb total if a single
    chunk suffices). Requires d >= 2.
    """
    us = _target_list(targets)
    start = _resolve_fresh(us, fresh_start)
    edges, extras, end = _bounded_edges(us, d, start)
    return LabeledGraph(from_edge_list(end, edges), frozenset(us), frozenset(extras))


def min_degree_filler(targets, fresh_start=None):
    """Filler that every greedy minimum-degree run must consume extras-first.

    Built by divide and conquer: complete graph for at most 7 targets,
    otherwise recursive fillers on the two halves joined by a bounded
    filler on the whole set. The result has O(k log k) vertices and edges
    and maximum degree O(log k) for k targets, yet forces quadratic fill.
    """
    us = _target_list(targets)
    start = _resolve_fresh(us, fresh_start)
    edges, extras, end = _min_degree_edges(us, start)
    n = end if extras else us[-1] + 1
    return LabeledGraph(from_edge_list(n, edges), frozenset(us), frozenset(extras))


def is_filler(lg):
    """True iff eliminating all extras yields exactly the clique on the targets."""
    fg = fill_graph(lg.graph, lg.extras)
    return fg.edge_set == complete_graph(lg.targets, lg.graph.n).edge_set


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a subset-family property check; falsy when violated.

    ``witness`` is (eliminated_extras, vertex) for the first violation
    found, and ``exhaustive`` records whether every subset was enumerated
    (sampled passes mean "no counterexample found", not proof).
    """

    ok: bool
    witness: tuple | None = None
    exhaustive: bool = False

    def __bool__(self):
        return self.ok


def _subset_masks(k):
    return range(1 << k)


def _subset_from_mask(w_sorted, mask):
    return [w_sorted[i] for i in range(len(w_sorted)) if mask >> i & 1]


def _min_degree_violation(lg, eliminated):
    degs = fill_degrees(lg.graph, eliminated)
    elim = set(eliminated)
    survivors = [v for v in (lg.targets | lg.extras) if v not in elim]
    best = min(int(degs[v]) for v in survivors)
    for v in sorted(lg.targets):
        if degs[v] == best:
            return (tuple(sorted(elim)), v)
    return None


def _bounded_violation(lg, eliminated, bound):
    degs = fill_degrees(lg.graph, eliminated)
    elim = set(eliminated)
    for v in sorted(lg.extras):
        if v not in elim and degs[v] > bound:
            return (tuple(sorted(elim)), v)
    return None


def _greedy_prefix_violation(lg, state_check, include_full):
    """Walk a greedy min-degree elimination while it consumes extras.

    ``state_check(sim, eliminated, relevant, extra_mask)`` is evaluated at
    each visited state (prefix of eliminated extras); the walk extends by
    the smallest minimum-degree extra and stops when none exists.
    """
    g = lg.graph
    sim = FillSimulator(g, max_n=None, track_ever=False)
    relevant = np.zeros(g.n, dtype=bool)
    relevant[list(lg.targets | lg.extras)] = True
    extra_mask = np.zeros(g.n, dtype=bool)
    if lg.extras:
        extra_mask[list(lg.extras)] = True
    eliminated = []
    total = len(lg.extras)
    while True:
        if len(eliminated) < total or include_full:
            witness = state_check(sim, eliminated, relevant, extra_mask)
            if witness is not None:
                return witness
        if len(eliminated) == total:
            return None
        act = sim.active & relevant
        best = int(sim.degrees[act].min())
        at_min = act & (sim.degrees == best)
        extra_candidates = np.nonzero(at_min & extra_mask)[0]
        if extra_candidates.size == 0:
            return None  # greedy would leave the extras; prefix family ends
        v = int(extra_candidates[0])
        sim.eliminate(v)
        eliminated.append(v)


def _check_subset_property(lg, subset_budget, seed, proper_only, violation):
    w_sorted = sorted(lg.extras)
    k = len(w_sorted)
    if 2 ** k <= subset_budget:
        for mask in _subset_masks(k):
            if proper_only and mask == (1 << k) - 1:
                continue
            found = violation(_subset_from_mask(w_sorted, mask))
            if found is not None:
                return CheckResult(False, witness=found, exhaustive=True)
        return CheckResult(True, exhaustive=True)
    rng = random.Random(seed)
    limit = k - 1 if proper_only else k
    for _ in range(subset_budget):
        size = rng.randint(0, limit)
        found = violation(rng.sample(w_sorted, size))
        if found is not None:
            return CheckResult(False, witness=found)
    return CheckResult(True)


def check_min_degree_property(lg, subset_budget=500, seed=0):
    """Check that every proper extras subset leaves only extras at minimum degree.

    Exhaustive when 2^|extras| fits the budget; otherwise checks all
    greedy-elimination prefixes plus ``subset_budget`` seeded random proper
    subsets. Returns a CheckResult with a (subset, vertex) witness on
    failure.
    """
    if not lg.extras:
        return CheckResult(True, exhaustive=True)  # vacuous

    def violation(eliminated):
        return _min_degree_violation(lg, eliminated)

    result = _check_subset_property(lg, subset_budget, seed, True, violation)
    if result.exhaustive or not result.ok:
        return result

    def state_check(sim, eliminated, relevant, extra_mask):
        act = sim.active & relevant
        best = int(sim.degrees[act].min())
        at_min = act & (sim.degrees == best) & ~extra_mask
        if at_min.any():
            return (tuple(eliminated), int(np.nonzero(at_min)[0][0]))
        return None

    witness = _greedy_prefix_violation(lg, state_check, include_full=False)
    if witness is not None:
        return CheckResult(False, witness=witness)
    return result


def check_degree_bounded(lg, bound, subset_budget=500, seed=0):
    """Check that surviving extras never exceed ``bound`` after any extras subset.

    Subset policy mirrors check_min_degree_property, except the full extras
    set is included (vacuously fine: no extras survive it).
    """
    if not lg.extras:
        return CheckResult(True, exhaustive=True)

    def violation(eliminated):
        return _bounded_violation(lg, eliminated, bound)

    result = _check_subset_property(lg, subset_budget, seed, False, violation)
    if result.exhaustive or not result.ok:
        return result

    def state_check(sim, eliminated, relevant, extra_mask):
        over = sim.active & extra_mask & (sim.degrees > bound)
        if over.any():
            return (tuple(eliminated), int(np.nonzero(over)[0][0]))
        return None

    witness = _greedy_prefix_violation(lg, state_check, include_full=True)
    if witness is not None:
        return CheckResult(False, witness=witness)
    return result


@dataclass(frozen=True)
class CliqueUnionInstance:
    """Instance of the clique union problem: do the subset cliques cover K_V?"""

    n: int
    subsets: tuple

    def __post_init__(self):
        object.__setattr__(self, "subsets", tuple(frozenset(s) for s in self.subsets))
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        if len(self.subsets) < 1:
            raise InputError("at least one subset is required")
        for s in self.subsets:
            for v in s:
                if not 0 <= v < self.n:
                    raise InputError(f"subset vertex {v} out of range [0, {self.n})")


def clique_union(instance, engine=None):
    """Decide the clique union problem via one minimum degree ordering.

    Builds the union of min-degree fillers (one per nonempty subset, with
    globally fresh extras), orders it with ``engine`` (a callable mapping a
    Graph to an elimination ordering; defaults to the fast engine), and
    reads the answer off the ordering: reject as soon as a non-extra is
    eliminated while extras remain, otherwise count the vertices reachable
    from the first non-extra through extras-internal paths.
    """
    if engine is None:
        engine = lambda g: fast_minimum_degree(g).ordering
    n = instance.n
    if n == 0:
        return True
    fresh = n
    edges = []
    extras = set()
    for s in instance.subsets:
        if not s:
            continue  # empty clique contributes nothing
        lg = min_degree_filler(s, fresh_start=fresh)
        edges.extend(lg.graph.edges())
        extras |= lg.extras
        fresh = max(fresh, lg.graph.n)
    g = from_edge_list(fresh, edges)
    ordering = [int(v) for v in engine(g)]
    if sorted(ordering) != list(range(g.n)):
        raise InputError("engine did not return a permutation of the filler graph")
    for i in range(len(extras)):
        if ordering[i] not in extras:
            return False
    v = ordering[len(extras)]
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        if x != v and x not in extras:
            continue  # reachable endpoint, but not allowed as an internal vertex
        for nb in g.adjacency[x]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    reached = sum(1 for u in seen if u < n)
    return reached == n


def clique_union_bruteforce(instance):
    """Materialize the clique union and compare its size against C(n, 2)."""
    pairs = set()
    for s in instance.subsets:
        pairs.update(combinations(sorted(s), 2))
    return len(pairs) == instance.n * (instance.n - 1) // 2
