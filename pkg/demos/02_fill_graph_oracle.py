#!/usr/bin/env python3
"""The fill-graph oracle from first principles.

Eliminating a vertex set U connects any two survivors joined by a path
through U. The oracle computes this independently of any elimination
ordering, which is what makes it usable as ground truth.
"""

import random

from mindeg import fill_degrees, fill_graph, from_edge_list, gnp_random_graph

# a 5-cycle: eliminating two adjacent vertices leaves a triangle
c5 = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
fg = fill_graph(c5, {0, 1})
print("C5 with {0, 1} eliminated:")
print(f"  surviving edges: {sorted(fg.edge_set)}")
print(f"  fill degrees   : {fill_degrees(c5, {0, 1}).tolist()}  (-1 = eliminated)")
print()

# order independence: the final fill graph only depends on the SET eliminated
g = gnp_random_graph(12, 0.3, seed=4)
subset = [1, 4, 7, 9]
final = fill_graph(g, set(subset))
rng = random.Random(0)
for trial in range(3):
    order = subset[:]
    rng.shuffle(order)
    h, done = g, set()
    for v in order:
        done.add(v)
        h = fill_graph(g, done)
    print(f"incremental elimination in order {order}: "
          f"same fill graph = {h == final}")
print()

# composition: eliminating v first, then U, equals eliminating U + {v}
lhs = fill_graph(fill_graph(g, {3}), {5, 8})
rhs = fill_graph(g, {3, 5, 8})
print(f"composition fill(fill(g, {{3}}), {{5,8}}) == fill(g, {{3,5,8}}): "
      f"{lhs.edge_set == rhs.edge_set}")
