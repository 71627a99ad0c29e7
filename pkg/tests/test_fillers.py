import math
import random

import pytest

from conftest import clique_graph, star_graph
from mindeg import (CliqueUnionInstance, InputError, LabeledGraph,
                    bounded_filler, check_degree_bounded,
                    check_min_degree_property, clique_union,
                    clique_union_bruteforce, comb_filler, fast_minimum_degree,
                    fill_graph, from_edge_list, is_filler, min_degree_filler,
                    naive_minimum_degree)


# -- combs --

def test_comb_structure():
    lg = comb_filler({0, 1, 2})
    assert lg.extras == {3, 4, 5}
    assert lg.graph.edge_set == {(3, 4), (4, 5), (0, 3), (1, 4), (2, 5)}
    assert fill_graph(lg.graph, lg.extras).edge_set == {(0, 1), (0, 2), (1, 2)}
    assert is_filler(lg)


def test_comb_single_target():
    lg = comb_filler({0})
    assert lg.graph.edge_set == {(0, 1)}
    assert is_filler(lg)  # eliminating the extra leaves the empty clique on {0}


def test_comb_pair_is_p4():
    lg = comb_filler({0, 1})
    assert lg.graph.n == 4 and lg.graph.m == 3
    assert check_degree_bounded(lg, 2).exhaustive
    assert check_degree_bounded(lg, 2)
    assert not check_degree_bounded(lg, 1)


def test_comb_is_size_bounded():
    lg = comb_filler(range(4))
    assert check_degree_bounded(lg, 4)
    bad = check_degree_bounded(lg, 1)
    assert not bad and bad.witness is not None


def test_comb_rejects_empty():
    with pytest.raises(InputError):
        comb_filler(set())


def test_comb_fresh_start_must_clear_targets():
    with pytest.raises(InputError):
        comb_filler({0, 5}, fresh_start=3)


def test_comb_is_not_min_degree():
    check = check_min_degree_property(comb_filler({0, 1, 2}))
    assert check.exhaustive
    assert not check
    assert check.witness == ((), 0)  # initially all targets are degree-1 minima


def test_broken_comb_is_not_filler():
    lg = comb_filler({0, 1, 2})
    edges = lg.graph.edge_set - {(0, 3)}
    broken = LabeledGraph(from_edge_list(lg.graph.n, edges), lg.targets, lg.extras)
    assert not is_filler(broken)


def test_star_and_clique_are_fillers():
    star = LabeledGraph(star_graph(4), frozenset(range(4)), frozenset({4}))
    assert is_filler(star)
    clique = LabeledGraph(clique_graph(5), frozenset(range(5)), frozenset())
    assert is_filler(clique)
    assert check_min_degree_property(clique)  # vacuous: no extras


# -- bounded fillers --

def test_bounded_two_parts_single_comb():
    lg = bounded_filler(range(4), 4)
    # parts {0,1} and {2,3} give exactly one comb over all four targets
    assert lg.graph == comb_filler(range(4)).graph
    assert is_filler(lg)
    assert check_degree_bounded(lg, 4)


def test_bounded_singleton_parts():
    lg = bounded_filler(range(6), 2)
    assert len(lg.extras) == 30  # 15 pair combs, two extras each
    assert lg.graph.m == 45
    assert is_filler(lg)
    # extras set is far beyond the exhaustive budget, so this samples
    check = check_degree_bounded(lg, 2, subset_budget=200, seed=1)
    assert check and not check.exhaustive


def test_bounded_degenerate_single_vertex():
    lg = bounded_filler({0}, 2)
    assert lg.graph.edge_set == {(0, 1)}
    assert is_filler(lg)


def test_bounded_requires_d_at_least_two():
    with pytest.raises(InputError):
        bounded_filler(range(4), 1)


def test_bounded_edge_count_scales_with_ratio():
    # edges <= C * k * ceil(k / d) with the constant fitted here
    fitted = None
    for k, d in ((8, 4), (16, 4), (32, 8), (64, 8)):
        lg = bounded_filler(range(k), d)
        ratio = lg.graph.m / (k * math.ceil(k / d))
        if fitted is None:
            fitted = ratio
        assert ratio <= 2 * fitted
        assert is_filler(lg)


# -- min-degree fillers --

def test_min_degree_filler_base_case_is_clique():
    for k in (1, 4, 7):
        lg = min_degree_filler(range(k))
        assert lg.extras == frozenset()
        assert lg.graph.m == k * (k - 1) // 2
        assert is_filler(lg)


def test_min_degree_filler_eight_structure():
    lg = min_degree_filler(range(8))
    assert lg.graph.n == 64
    assert lg.graph.m == 96  # two K4 halves plus 28 pair combs of 3 edges
    assert len(lg.extras) == 56
    half_edges = {e for e in lg.graph.edge_set if e[0] < 4 and e[1] < 4}
    assert half_edges == clique_graph(4).edge_set
    assert is_filler(lg)


def test_min_degree_filler_properties_small():
    for k in (8, 12, 16):
        lg = min_degree_filler(range(k))
        assert is_filler(lg)
        assert check_min_degree_property(lg, subset_budget=150, seed=2)
        assert check_degree_bounded(lg, k - 3, subset_budget=150, seed=2)


def test_min_degree_filler_forces_extras_first():
    lg = min_degree_filler(range(16))
    for result in (fast_minimum_degree(lg.graph), naive_minimum_degree(lg.graph)):
        head = set(result.ordering[:len(lg.extras)])
        assert head == lg.extras
        assert result.m_plus >= 16 * 15 // 2


def test_min_degree_filler_sparsity_growth():
    base = min_degree_filler(range(8))
    fit_edges = base.graph.m / (8 * (1 + math.log2(8)))
    fit_deg = base.graph.max_degree() / (1 + math.log2(8))
    for k in (16, 32, 64):
        lg = min_degree_filler(range(k))
        scale = k * (1 + math.log2(k))
        assert lg.graph.m / scale <= 2 * fit_edges
        assert lg.graph.max_degree() / (1 + math.log2(k)) <= 2 * fit_deg


def test_labeled_graph_validation():
    g = from_edge_list(3, [(0, 1)])
    with pytest.raises(InputError, match="disjoint"):
        LabeledGraph(g, {0, 1}, {1})
    with pytest.raises(InputError, match="neither"):
        LabeledGraph(g, {0}, set())  # vertex 1 has an edge but no label
    LabeledGraph(g, {0, 1}, set())  # isolated vertex 2 needs no label


# -- clique union --

def test_clique_union_missing_pair():
    inst = CliqueUnionInstance(3, [{0, 1}, {1, 2}])
    assert clique_union(inst) is False
    assert clique_union_bruteforce(inst) is False


def test_clique_union_single_full_subset():
    inst = CliqueUnionInstance(3, [{0, 1, 2}])
    assert clique_union(inst) is True
    assert clique_union_bruteforce(inst) is True


def test_clique_union_three_subsets_cover():
    inst = CliqueUnionInstance(4, [{0, 1, 2}, {0, 2, 3}, {1, 3}])
    assert clique_union_bruteforce(inst) is True
    assert clique_union(inst) is True


def test_clique_union_bruteforce_examples():
    assert clique_union_bruteforce(CliqueUnionInstance(3, [{0, 1}, {1, 2}])) is False
    assert clique_union_bruteforce(
        CliqueUnionInstance(4, [{v} for v in range(4)])) is False
    all_pairs = [{u, v} for u in range(4) for v in range(u + 1, 4)]
    assert clique_union_bruteforce(CliqueUnionInstance(4, all_pairs)) is True


def test_clique_union_validates_instance():
    with pytest.raises(InputError):
        CliqueUnionInstance(3, [{0, 5}])
    with pytest.raises(InputError):
        CliqueUnionInstance(3, [])


def test_clique_union_edge_cases():
    assert clique_union(CliqueUnionInstance(0, [set()])) is True
    assert clique_union(CliqueUnionInstance(1, [set()])) is True
    assert clique_union(CliqueUnionInstance(2, [set()])) is False
    # an uncovered vertex forces a 'false' through the early extra check
    inst = CliqueUnionInstance(5, [{0, 1, 2, 3}])
    assert clique_union(inst) is False
    assert clique_union_bruteforce(inst) is False


def test_clique_union_agrees_with_bruteforce_sample():
    rng = random.Random(77)
    fast = lambda g: fast_minimum_degree(g).ordering
    naive = lambda g: naive_minimum_degree(g, max_n=None).ordering
    for case in range(40):
        n = rng.randint(2, 16)
        d = rng.randint(1, 5)
        density = rng.uniform(0.2, 0.9)
        subsets = [frozenset(v for v in range(n) if rng.random() < density)
                   for _ in range(d)]
        inst = CliqueUnionInstance(n, subsets)
        expected = clique_union_bruteforce(inst)
        assert clique_union(inst, fast) == expected, (n, subsets)
        assert clique_union(inst, naive) == expected, (n, subsets)
