"""
Closed-form trial states
========================

psi(x) = C sqrt((1 - x^2) cos(theta x)) is a good ground-state guess; an
odd companion multiplies by -sin(theta x). Expanding the shape factor in a
power series lets the operator act term by term, so the residual
|A_D psi - E psi| is available on a fine grid and at the boundary.
"""

# %%
from cauchy_well import eigenvalue_from_series
from cauchy_well.operators import boundary_value
from cauchy_well.trial import apply_AD_trial, expand_trial, make_trial, sweep, trial_residual

# %% Normalization and Taylor coefficients of the ground-state guess.
g = make_trial("ground", 1443)
print("C =", g.norm_c)
print("c_0..c_6 =", expand_trial(g, 4))
print("series eigenvalue from 10 terms:", eigenvalue_from_series(expand_trial(g, 10), "even").value)

# %% The boundary value of the image depends on how many series terms are kept.
for terms in (5, 8, 11, 15, 25):
    print(terms, boundary_value(apply_AD_trial(make_trial("ground", 1443, terms))))

# %% Residual at E = 1.156 and a scan over theta.
print("sup residual at 1443:", trial_residual(g, 1.156, 2001).sup)
scan = sweep("ground", 1480, 1520, 1.156, 1001)
print("best theta numerator:", scan.argmin, "sup =", scan.minimum)

# %% Same for the odd state.
x = make_trial("excited", 1760)
print("C =", x.norm_c, " series E =", eigenvalue_from_series(expand_trial(x, 10), "odd").value)
print("sweep:", sweep("excited", 1740, 1790, 2.75, 1001)[1:])
