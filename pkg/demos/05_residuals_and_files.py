"""
Residuals, regression and file output
=====================================

The residual of a solved state is computed from the closed-form image on a
Chebyshev grid, which samples the edges densely. Solutions are written as
JSON and residual grids as CSV.
"""

# %%
import tempfile
from pathlib import Path

from cauchy_well import emit, load_solution, solution_residual, solve_state
from cauchy_well.analysis import compare_degree_500

# %% The residual peak sits very close to the boundary.
for degree in (20, 100, 500):
    rep = solution_residual(solve_state("even", degree), 4001)
    print(f"degree {degree}: sup={rep.sup:.5f} at x={rep.argsup:+.5f}")

# %% The degree-500 coefficients against the printed list (first 50).
sol = solve_state("even", 500)
rec = compare_degree_500(sol)
print("coefficients within tolerance:", rec.passed, max(r.deviation for r in rec.rows))

# %% Round trip through the file formats.
out = Path(tempfile.mkdtemp())
emit(sol, "json", out / "ground_500.json")
emit(solution_residual(sol, 200), "csv", out / "ground_500.csv")
back = load_solution(out / "ground_500.json")
print("JSON round trip exact:", back.E == sol.E and (back.alphas == sol.alphas).all())
print((out / "ground_500.csv").read_text().splitlines()[:3])
