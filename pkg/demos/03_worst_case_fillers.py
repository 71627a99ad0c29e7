#!/usr/bin/env python3
"""Adversarial filler graphs: near-linear inputs that force quadratic fill.

A filler on k targets eliminates down to the complete graph K_k. The
recursive min-degree construction keeps every intermediate extra vertex at
low degree, so greedy minimum-degree elimination has no choice but to
consume all extras and produce the full clique: Omega(k^2) fill from an
O(k log k) input.
"""

import math

from mindeg import (check_degree_bounded, check_min_degree_property,
                    comb_filler, fast_minimum_degree, is_filler,
                    min_degree_filler)

# the building block: a comb (extras path matched onto the targets)
comb = comb_filler(range(4))
print(f"comb on 4 targets: n={comb.graph.n}, m={comb.graph.m}, "
      f"extras={sorted(comb.extras)}")
print(f"  is a filler: {is_filler(comb)}")
print(f"  min-degree property: {check_min_degree_property(comb)!r}")
print("  (combs fill, but greedy may still prefer targets, hence the witness)")
print()

print("recursive min-degree fillers:")
print("   k      n      m  maxdeg   m/(k lg k)   |W|")
for k in (8, 16, 32, 64, 128, 256):
    lg = min_degree_filler(range(k))
    scale = k * (1 + math.log2(k))
    print(f"{k:4d}  {lg.graph.n:5d}  {lg.graph.m:5d}  {lg.graph.max_degree():6d}"
          f"   {lg.graph.m / scale:9.2f}  {len(lg.extras):5d}")
print()

k = 64
lg = min_degree_filler(range(k))
print(f"checking k={k}: filler={is_filler(lg)}, "
      f"min-degree={bool(check_min_degree_property(lg, subset_budget=300))}, "
      f"{k - 3}-bounded={bool(check_degree_bounded(lg, k - 3, subset_budget=300))}")

result = fast_minimum_degree(lg.graph)
head = set(result.ordering[:len(lg.extras)])
print(f"engine eliminates all {len(lg.extras)} extras first: {head == lg.extras}")
print(f"fill count m_plus={result.m_plus} >= k(k-1)/2 = {k * (k - 1) // 2}: "
      f"{result.m_plus >= k * (k - 1) // 2}")
