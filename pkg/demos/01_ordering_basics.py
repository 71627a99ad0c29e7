#!/usr/bin/env python3
"""Walk through a minimum degree ordering on a small mesh.

Shows the per-step engine state (selected vertex, its fill degree, the
merged neighborhood, insertion attempts), then compares the two fill-graph
backends and checks the ordering against the brute-force oracle.
"""

from mindeg import (MinDegreeEngine, OrderingConfig, fast_minimum_degree,
                    fill_count_of_ordering, grid_graph,
                    verify_min_degree_ordering)

g = grid_graph(3, 4)
print(f"3x4 grid: n={g.n}, m={g.m}")
print()

engine = MinDegreeEngine(g)
print("step  vertex  degree  |W|  attempts  fill-added")
while not engine.is_done():
    v, stats = engine.step()
    i = engine.steps_done - 1
    print(f"{i:4d}  {v:6d}  {engine.eliminated_degrees[i]:6d}  {stats.w_size:3d}"
          f"  {stats.attempts:8d}  {stats.fill_edges_added:10d}")
result = engine.result()
print()
print(f"ordering          : {result.ordering}")
print(f"eliminated degrees: {result.eliminated_degrees}")
print(f"m_plus            : {result.m_plus} ({result.m_plus - g.m} fill edges)")
print(f"insertion attempts: {result.insertion_attempts}")
print()

check = verify_min_degree_ordering(g, result.ordering)
print(f"oracle verification: {'VALID' if check else check}")
print(f"oracle fill count  : {fill_count_of_ordering(g, result.ordering)}")

sparse = fast_minimum_degree(g, OrderingConfig(backend="ordered-set"))
same = (sparse.ordering == result.ordering
        and sparse.insertion_attempts == result.insertion_attempts
        and sparse.fill_edges == result.fill_edges)
print(f"ordered-set backend matches dense: {same}")
