"""
The Cauchy operator on weighted polynomials
===========================================

Functions of the form sqrt(1 - x^2) * P(x) are mapped by the operator to
plain polynomials of the same degree and parity. This script shows the
image of a few basis elements and checks one against direct principal-value
quadrature.
"""

# %%
import numpy as np

from cauchy_well import WeightedPolynomial, apply_AD_closed, apply_AD_numeric, basis_image, w_polynomial

# %% The weight itself maps to the constant 1, and x*sqrt(1-x^2) to 2x.
for parity in ("even", "odd"):
    for m in range(3):
        print(parity, m, basis_image(parity, m).coeffs)

# %% w-polynomials carry the classic sign convention for the even family.
print("w_2 =", w_polynomial("even", 1).coeffs)
print("w_3 =", w_polynomial("odd", 1).coeffs)

# %% A random combination, compared with quadrature at a few points.
rng = np.random.default_rng(0)
psi = WeightedPolynomial("even", rng.uniform(-1, 1, 6))
image = apply_AD_closed(psi)
for x in (-0.95, -0.3, 0.0, 0.6, 0.99):
    closed, numeric = image(x), apply_AD_numeric(psi, x)
    print(f"x={x:+.2f}  closed={closed:+.12f}  quadrature={numeric:+.12f}  diff={closed - numeric:.1e}")
