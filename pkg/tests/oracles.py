"""Independent reference computations used by the tests.

Nothing here imports the package; each oracle uses a different route from
the production code (exact rationals, mpmath quadrature, mpmath Taylor).
"""

from fractions import Fraction
from math import factorial

import mpmath as mp


def sqrt_coeff(k: int) -> Fraction:
    """Coefficient of u^k in (1 - u)^(1/2) from the generalized binomial."""
    num = Fraction(1)
    for j in range(k):
        num *= Fraction(1, 2) - j
    return num / factorial(k) * (-1) ** k


def image_exact(alphas, odd: bool):
    """Parity-indexed image coefficients of sqrt(1-x^2) sum a_m x^(2m+p), exactly."""
    p = 1 if odd else 0
    n = len(alphas) - 1
    out = [Fraction(0)] * (n + 1)
    for m, a in enumerate(alphas):
        for j in range(m + 1):
            out[j] += Fraction(a) * (2 * j + 1 + p) * sqrt_coeff(m - j)
    return out


def ad_pointwise(f, df, x, dps=30):
    """A_D f(x) for f vanishing at +-1, by tangent subtraction and tanh-sinh.

    PV int (f(x) - f(t))/(t - x)^2 dt
      = -int [f(t) - f(x) - f'(x)(t - x)]/(t - x)^2 dt - f'(x) log((1 - x)/(1 + x)).
    """
    with mp.workdps(dps):
        x = mp.mpf(x)
        fx, dfx = f(x), df(x)
        half_d2 = mp.diff(df, x) / 2
        cutoff = mp.mpf(10) ** (-dps // 3)

        def g(t):
            h = t - x
            if abs(h) < cutoff:
                return half_d2
            return (f(t) - fx - dfx * h) / h**2

        regular = mp.quad(g, [-1, x, 1])
        pv = -regular - dfx * mp.log((1 - x) / (1 + x))
        return float(2 / mp.pi * fx / (1 - x**2) + pv / mp.pi)


def weighted(alphas, odd: bool):
    """mpmath callables (f, f') for sqrt(1-x^2) P(x)."""
    p = 1 if odd else 0

    def poly(t):
        return sum(mp.mpf(a) * t ** (2 * m + p) for m, a in enumerate(alphas))

    def dpoly(t):
        return sum(mp.mpf(a) * (2 * m + p) * t ** (2 * m + p - 1) for m, a in enumerate(alphas) if 2 * m + p)

    def f(t):
        return mp.sqrt(1 - t**2) * poly(t)

    def df(t):
        return -t / mp.sqrt(1 - t**2) * poly(t) + mp.sqrt(1 - t**2) * dpoly(t)

    return f, df


def taylor(func, count, dps=40):
    """First ``count`` Taylor coefficients of func about 0."""
    with mp.workdps(dps):
        return [float(c) for c in mp.taylor(func, 0, count - 1)]


def ground_norm_integral(theta: float) -> float:
    """int_{-1}^{1} (1 - x^2) cos(theta x) dx in closed form."""
    if theta == 0:
        return 4.0 / 3.0
    return float(4 * (mp.sin(theta) - theta * mp.cos(theta)) / theta**3)
