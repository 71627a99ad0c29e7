#!/usr/bin/env python3
"""Deciding clique coverage with a single minimum degree ordering.

Given subsets U_1..U_d of V, do the cliques K_{U_i} together cover the
complete graph K_V? Building one min-degree filler per subset and ordering
the union answers this: if the ordering ever prefers a non-extra vertex
while extras remain the union is incomplete, and otherwise one reachability
sweep from the first non-extra counts the missing vertices.
"""

import random

from mindeg import (CliqueUnionInstance, clique_union, clique_union_bruteforce,
                    fast_minimum_degree, naive_minimum_degree)

examples = [
    CliqueUnionInstance(3, [{0, 1}, {1, 2}]),
    CliqueUnionInstance(3, [{0, 1, 2}]),
    CliqueUnionInstance(4, [{0, 1, 2}, {0, 2, 3}, {1, 3}]),
    CliqueUnionInstance(6, [{0, 1, 2, 3}, {2, 3, 4, 5}, {0, 4}, {1, 5}]),
]
for inst in examples:
    got = clique_union(inst)
    want = clique_union_bruteforce(inst)
    subsets = [sorted(s) for s in inst.subsets]
    print(f"n={inst.n} subsets={subsets}: reduction={got} brute force={want}")
print()

rng = random.Random(2024)
fast = lambda g: fast_minimum_degree(g).ordering
naive = lambda g: naive_minimum_degree(g, max_n=None).ordering
agreements = 0
trials = 60
for _ in range(trials):
    n = rng.randint(2, 20)
    d = rng.randint(1, 6)
    p = rng.uniform(0.3, 0.9)
    inst = CliqueUnionInstance(
        n, [frozenset(v for v in range(n) if rng.random() < p) for _ in range(d)])
    expected = clique_union_bruteforce(inst)
    if clique_union(inst, fast) == expected and clique_union(inst, naive) == expected:
        agreements += 1
print(f"random instances, both engines agree with brute force: "
      f"{agreements}/{trials}")
