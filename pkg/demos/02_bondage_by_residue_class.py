"""Bondage numbers of strong grids, sorted by (n mod 3, m mod 3)."""

from gridbondage import (
    ResidueClass, bondage_number, grid_graph, is_bondage_set, predict_bondage_strong,
    witness_bondage_set_strong,
)

# %% Solver value next to the predicted value for every 2 <= n <= m <= 6
for n in range(2, 7):
    for m in range(n, 7):
        g = grid_graph("strong", n, m)
        r = bondage_number(g)
        p = predict_bondage_strong(n, m)
        claim = p.value if p.is_exact else f"[{p.low},{p.high}]"
        print(f"P{n} x P{m}  class {ResidueClass.of(n, m)}  b = {r}  predicted {claim}"
              f"  ({r.evaluated_subsets} subsets, {r.solver_calls} solver calls)")

# %% The constructive edge sets, in 1-based grid coordinates
for n, m in [(3, 5), (6, 6), (3, 7), (4, 5), (5, 8)]:
    g = grid_graph("strong", n, m)
    w = witness_bondage_set_strong(n, m)
    print(f"P{n} x P{m}:", [g.grid.edge_coords(e) for e in w], "raises gamma:", is_bondage_set(g, w))
