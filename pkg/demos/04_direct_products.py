"""Direct products of paths split into two components; their bondage numbers."""

from gridbondage import (
    bondage_number, connected_components, domination_number, grid_graph, predict_bondage_direct,
)

g = grid_graph("direct", 6, 5)
parts = connected_components(g)
print("P6 x P5 components:", [len(p) for p in parts],
      "gamma per component:", [domination_number(g.induced(p)) for p in parts])

# %% Small factors: the prediction is b = 1, but a factor of order 2 or 4 can give 2
for n in range(2, 8):
    row = []
    for m in range(2, 8):
        r = bondage_number(grid_graph("direct", n, m))
        p = predict_bondage_direct(n, m)
        mark = "" if p.contains(r.value) else "!"
        row.append(f"{r}{mark}")
    print(f"n={n}: " + " ".join(f"{x:>3}" for x in row))
print("'!' marks a value outside the predicted range")
