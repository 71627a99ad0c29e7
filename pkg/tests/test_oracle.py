import random

import pytest

from conftest import clique_graph, cycle_graph, path_graph, star_graph
from mindeg import (InputError, fill_count_of_ordering, fill_degrees,
                    fill_graph, gnp_random_graph, naive_minimum_degree,
                    orient_bounded_outdegree, verify_min_degree_ordering)
from mindeg.errors import ConfigError
from mindeg.oracle import FillSimulator


def reachable_fill_edges(g, eliminated):
    """Definition-level reference: an edge joins two survivors iff one can
    walk from one to the other using only eliminated internal vertices.
    Kept independent of the component-based implementation (n <= 10)."""
    elim = set(eliminated)
    survivors = [v for v in range(g.n) if v not in elim]
    edges = set()
    for u in survivors:
        seen = set(g.neighbors(u))
        frontier = [x for x in seen if x in elim]
        while frontier:
            x = frontier.pop()
            for y in g.neighbors(x):
                if y != u and y not in seen:
                    seen.add(y)
                    if y in elim:
                        frontier.append(y)
        for v in seen:
            if v not in elim and u < v:
                edges.add((u, v))
    return edges


def test_fill_graph_path_middle():
    assert fill_graph(path_graph(3), {1}).edge_set == {(0, 2)}


def test_fill_graph_nothing_eliminated():
    g = gnp_random_graph(12, 0.3, seed=1)
    assert fill_graph(g, set()) == g


def test_fill_graph_c5_pinned():
    # eliminating the adjacent pair {0, 1} of a 5-cycle leaves a triangle
    g = cycle_graph(5)
    expected = reachable_fill_edges(g, {0, 1})
    assert expected == {(2, 3), (3, 4), (2, 4)}
    assert fill_graph(g, {0, 1}).edge_set == expected


def test_fill_graph_matches_reachability_reference():
    rng = random.Random(23)
    for seed in range(40):
        g = gnp_random_graph(9, 0.35, seed=seed)
        eliminated = {v for v in range(g.n) if rng.random() < 0.4}
        assert fill_graph(g, eliminated).edge_set == reachable_fill_edges(g, eliminated)


def test_fill_graph_rejects_bad_vertex():
    with pytest.raises(InputError):
        fill_graph(path_graph(3), {7})


def test_fill_graph_order_independent():
    rng = random.Random(5)
    for seed in range(15):
        g = gnp_random_graph(12, 0.3, seed=100 + seed)
        subset = [v for v in range(g.n) if rng.random() < 0.4]
        final = fill_graph(g, set(subset))
        for _ in range(2):
            order = subset[:]
            rng.shuffle(order)
            h = g
            done = set()
            for v in order:
                done.add(v)
                h = fill_graph(g, done)
            assert h == final


def test_fill_graph_composition():
    rng = random.Random(6)
    for seed in range(15):
        g = gnp_random_graph(11, 0.3, seed=200 + seed)
        vs = list(range(g.n))
        rng.shuffle(vs)
        v, subset = vs[0], set(vs[1:4])
        lhs = fill_graph(fill_graph(g, {v}), subset)
        rhs = fill_graph(g, subset | {v})
        # the intermediate graph keeps v as an isolated vertex; compare edges
        assert lhs.edge_set == rhs.edge_set


def test_fill_degrees_match_fill_graph():
    rng = random.Random(7)
    for seed in range(25):
        g = gnp_random_graph(14, 0.3, seed=300 + seed)
        eliminated = {v for v in range(g.n) if rng.random() < 0.35}
        fg = fill_graph(g, eliminated)
        degs = fill_degrees(g, eliminated)
        for v in range(g.n):
            if v in eliminated:
                assert degs[v] == -1
            else:
                assert degs[v] == fg.degree(v)


def test_naive_path():
    r = naive_minimum_degree(path_graph(3))
    assert r.ordering == (0, 1, 2)
    assert r.m_plus == 2


def test_naive_c4_pinned():
    r = naive_minimum_degree(cycle_graph(4))
    assert r.ordering == (0, 1, 2, 3)
    assert r.eliminated_degrees == (2, 2, 1, 0)
    assert r.m_plus == 5
    assert r.fill_edges == {(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)}
    # clique pairs examined: {1,3} at step 0, {2,3} at step 1
    assert r.insertion_attempts == 2


def test_naive_k4():
    r = naive_minimum_degree(clique_graph(4))
    assert r.ordering == (0, 1, 2, 3)
    assert r.eliminated_degrees == (3, 2, 1, 0)
    assert r.m_plus == 6


def test_naive_always_verifies():
    for seed in range(30):
        g = gnp_random_graph(18, 0.25, seed=400 + seed)
        for tie_break in ("smallest", "largest", "random"):
            r = naive_minimum_degree(g, tie_break=tie_break, seed=seed)
            assert verify_min_degree_ordering(g, r.ordering)
            assert r.m_plus == fill_count_of_ordering(g, r.ordering)


def test_naive_respects_size_cap():
    g = gnp_random_graph(30, 0.1, seed=1)
    with pytest.raises(ConfigError):
        naive_minimum_degree(g, max_n=20)
    naive_minimum_degree(g, max_n=None)  # lifting the cap works


def test_verify_accepts_and_rejects():
    g = path_graph(3)
    assert verify_min_degree_ordering(g, (0, 1, 2)).ok
    bad = verify_min_degree_ordering(g, (1, 0, 2))
    assert not bad
    assert bad.violation_step == 0
    assert bad.witness in (0, 2)


def test_verify_requires_permutation():
    with pytest.raises(InputError):
        verify_min_degree_ordering(path_graph(3), (0, 0, 2))


def test_fill_count_examples():
    g = path_graph(6)
    assert fill_count_of_ordering(g, range(6)) == g.m
    assert fill_count_of_ordering(cycle_graph(4), (0, 1, 2, 3)) == 5
    # eliminating a 4-leaf star's center first forms K4
    assert fill_count_of_ordering(star_graph(4), (4, 0, 1, 2, 3)) == 4 + 6


def test_fill_count_requires_permutation():
    with pytest.raises(InputError):
        fill_count_of_ordering(path_graph(3), (0, 1))


def test_orientation_star():
    g = star_graph(4)
    orient = orient_bounded_outdegree(g)
    assert all(head == 4 for _, head in orient.edges)
    assert max(orient.out_degrees()) == 1


def test_orientation_k4():
    orient = orient_bounded_outdegree(clique_graph(4))
    assert sorted(orient.out_degrees()) == [0, 1, 2, 3]
    assert max(d * d for d in orient.out_degrees()) <= 2 * 6


def test_orientation_bound_random():
    for seed in range(25):
        g = gnp_random_graph(20, 0.3, seed=500 + seed)
        orient = orient_bounded_outdegree(g)
        assert len(orient.edges) == g.m
        assert {tuple(sorted(e)) for e in orient.edges} == g.edge_set
        for d in orient.out_degrees():
            assert d * d <= 2 * g.m


def test_simulator_incremental_degrees_consistent():
    rng = random.Random(3)
    for seed in range(10):
        g = gnp_random_graph(15, 0.3, seed=600 + seed)
        sim = FillSimulator(g)
        order = list(range(g.n))
        rng.shuffle(order)
        for v in order:
            assert (sim.degrees == sim.adj.sum(axis=1)).all()
            sim.eliminate(v)
        assert sim.ever_edge_count() == fill_count_of_ordering(g, order)
