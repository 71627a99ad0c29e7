"""Shared helpers for the test suite: tiny named graphs and bound checks."""

from itertools import combinations

from mindeg import attempt_bounds, from_edge_list


def path_graph(k):
    return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k):
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def star_graph(leaves):
    # center gets the last id so leaves are 0..leaves-1
    return from_edge_list(leaves + 1, [(i, leaves) for i in range(leaves)])


def clique_graph(k):
    return from_edge_list(k, combinations(range(k), 2))


def assert_attempt_bounds(g, result):
    """Exact instrumented inequalities every engine run must satisfy."""
    bounds = attempt_bounds(g, result)
    k = result.insertion_attempts
    assert k <= bounds.sum_min_degree, (k, bounds)
    assert k <= bounds.max_degree_times_m_plus, (k, bounds)
    assert k * k <= bounds.edge_sqrt_squared, (k, bounds)
