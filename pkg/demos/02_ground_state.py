"""
Ground state by truncated expansion
===================================

Solve the eigenvalue problem for the lowest even state at increasing
polynomial degree and watch E and the first coefficients settle.
"""

# %%
from cauchy_well import compare, solve_state

# %% Degree 2 is solvable by hand: E = 6/5 and alpha_2 = -2/5.
sol = solve_state("even", 2)
print(sol.E, sol.alphas, sol.norm_c)

# %% Convergence with degree, against the published rows.
for degree in (4, 10, 20, 50, 100, 200, 500):
    sol = solve_state("even", degree)
    rec = compare(sol)
    dev = max(r.deviation for r in rec.rows if r.field != "C")
    print(f"degree {degree:3d}  E={sol.E:.8f}  C={sol.norm_c:.6f}  alpha_2={sol.alphas[1]:+.7f}  max dev={dev:.1e}")

# %% Extended precision gives the same answer here; it is available for checks.
hi = solve_state("even", 100, precision_bits=128)
print("binary64 vs 128 bits:", abs(hi.E - solve_state("even", 100).E))
