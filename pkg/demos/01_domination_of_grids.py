"""Domination numbers of strong grids, and what their minimum dominating sets look like."""

from gridbondage import (
    canonical_gamma_set_strong, domination_number, enumerate_gamma_sets, grid_graph,
    path_graph, property_P_gamma_sets,
)

# %% gamma(P_n strong P_m) against ceil(n/3) * ceil(m/3)
print("   " + "".join(f"{m:4d}" for m in range(2, 9)))
for n in range(2, 9):
    row = [domination_number(grid_graph("strong", n, m)) for m in range(2, 9)]
    print(f"{n:3d}" + "".join(f"{v:4d}" for v in row))

# %% Paths: the residue of n mod 3 decides how many "spread out" gamma-sets exist
for n in (6, 7, 8):
    fam = enumerate_gamma_sets(path_graph(n))
    spread = property_P_gamma_sets(path_graph(n))
    print(f"P{n}: {len(fam)} gamma-sets, {len(spread)} with disjoint closed neighbourhoods:",
          [sorted(v + 1 for v in s) for s in spread])

# %% The product of the path sets dominates the grid
n, m = 7, 8
g = grid_graph("strong", n, m)
s = canonical_gamma_set_strong(n, m)
for i in range(1, n + 1):
    print(" ".join("X" if g.grid.index(i, j) in s else "." for j in range(1, m + 1)))
