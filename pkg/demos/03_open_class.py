"""The (3t+1, 3r+1) class: only 2 <= b <= 5 is known in general; compute small members."""

import time

from gridbondage import bondage_number, grid_graph, max_disjoint_gamma_sets

for n, m in [(4, 4), (4, 7)]:
    g = grid_graph("strong", n, m)
    t0 = time.perf_counter()
    r = bondage_number(g, k_max=5)
    t = max_disjoint_gamma_sets(g)
    print(f"P{n} x P{m}: b = {r} after {r.evaluated_subsets} edge subsets"
          f" in {time.perf_counter() - t0:.1f}s; {t} disjoint gamma-sets")
    print("  witness:", [g.grid.edge_coords(e) for e in r.witness])

# P7 x P7 has 156 edges; a time budget turns the search into an honest lower bound.
r = bondage_number(grid_graph("strong", 7, 7), time_budget=10)
print("P7 x P7: b", r)
