"""
Higher states and their ordering
================================

Even and odd families are solved separately; ranking real eigenvalues by
size within each family and merging gives the interleaved ladder
E1 < E2 < E3 < ...
"""

# %%
from cauchy_well import solve_state
from cauchy_well.solver import eigenvalue_ladder

# %%
for n in (7, 20, 100):
    ladder, ordered = eigenvalue_ladder(n)
    values = "  ".join(f"E{k}={E:.6f}" for k, _, _, E in ladder)
    print(f"n={n:3d}  {values}  interleaved={ordered}")

# %% The first odd state at degree 21 and its coefficient vector.
odd = solve_state("odd", 21)
print(odd.E, odd.alphas[:4])
