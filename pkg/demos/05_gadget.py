"""The gadget H: two strips glued along a 2x2 block, and its domination numbers."""

from gridbondage import domination_number, grid_graph, remove_edges
from gridbondage.verify import build_gadget_H, gadget_block_diagonals

for n, m in [(5, 5), (5, 8), (8, 8), (11, 5)]:
    t, r = (n - 2) // 3, (m - 2) // 3
    h = build_gadget_H(n, m)
    cut = remove_edges(h, gadget_block_diagonals(n, m))
    print(f"n={n} m={m}: |H|={h.order}  gamma(H)={domination_number(h)} (t+r+1={t + r + 1})"
          f"  gamma(H-ef)={domination_number(cut)}  "
          f"gamma(grid)={domination_number(grid_graph('strong', n, m))}"
          f" = {domination_number(grid_graph('strong', n - 2, m - 2))} + {domination_number(h)}")
