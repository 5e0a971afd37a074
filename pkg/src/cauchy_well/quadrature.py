"""Independent principal-value quadrature of A_D, used to validate closed forms.

The PV integral is taken symmetrically about t = x. With d = 1 - |x| the
symmetric part is paired,

    int_{eps}^{d} [2 psi(x) - psi(x + s) - psi(x - s)] / s^2 ds,

which removes the 1/s singularity, and the leftover one-sided stretch
[-1, 2x - 1] (or [2x + 1, 1]) is regular. Both pieces are mapped so that the
square-root behaviour at the endpoint of D becomes smooth. The excision radius is then driven to zero by polynomial
extrapolation; the excised piece is odd in eps, so only odd powers are
eliminated.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, QuadratureError, UsageError


@dataclass(frozen=True)
class PVQuadratureSettings:
    epsilon_schedule: tuple = (2.0**-4, 2.0**-5, 2.0**-6, 2.0**-7, 2.0**-8)
    """Excision radii as fractions of the distance from x to the boundary."""
    tolerance: float = 1e-12
    """Relative tolerance for each Gauss-Legendre panel and for the extrapolation."""
    max_depth: int = 8
    """Maximum number of node doublings, starting from 16 nodes."""

    def __post_init__(self):
        eps = tuple(float(e) for e in self.epsilon_schedule)
        if len(eps) < 2 or any(e <= 0 for e in eps) or any(b >= a for a, b in zip(eps, eps[1:])):
            raise UsageError("epsilon_schedule must be a strictly decreasing positive sequence")
        if self.tolerance <= 0:
            raise UsageError("tolerance must be positive")
        if self.max_depth < 1:
            raise UsageError("max_depth must be >= 1")
        object.__setattr__(self, "epsilon_schedule", eps)


@functools.lru_cache(maxsize=32)
def _gauss(npts: int):
    return np.polynomial.legendre.leggauss(npts)


def _vectorized(psi: Callable) -> Callable:
    def f(t):
        try:
            return np.asarray(psi(t), dtype=float)
        except (TypeError, ValueError):
            return np.array([float(psi(v)) for v in np.ravel(t)]).reshape(np.shape(t))

    return f


def _integrate(f, a, b, settings: PVQuadratureSettings):
    """Gauss-Legendre on [a, b] with node doubling until two rules agree."""
    npts = 16
    prev = None
    for _ in range(settings.max_depth + 1):
        nodes, weights = _gauss(npts)
        half = 0.5 * (b - a)
        val = half * np.dot(weights, f(a + half * (nodes + 1.0)))
        if prev is not None and abs(val - prev) <= settings.tolerance * max(1.0, abs(val)):
            return val
        prev = val
        npts *= 2
    raise QuadratureError(f"panel [{a}, {b}] did not converge", (prev, val))


def _extrapolate(values, eps):
    """Zero-radius limits fitted through the smallest radii.

    Entry j fits I(eps) = I0 + a1 eps + a3 eps^3 + ... + a_{2j+1} eps^(2j+1)
    to the last j + 2 samples and returns I0.
    """
    values = np.asarray(values, dtype=float)
    eps = np.asarray(eps, dtype=float) / eps[0]
    limits = []
    for terms in range(1, len(values)):
        e = eps[-(terms + 1):]
        powers = np.column_stack([np.ones_like(e)] + [e ** (2 * i - 1) for i in range(1, terms + 1)])
        limits.append(np.linalg.solve(powers, values[-(terms + 1):])[0])
    return limits


def apply_AD_numeric(psi: Callable, x: float, settings: PVQuadratureSettings | None = None) -> float:
    """A_D psi(x) by principal-value quadrature, for |x| < 1.

    ``psi`` must be continuous on [-1, 1] and vanish at +-1; it is called on
    numpy arrays when possible.
    """
    settings = settings or PVQuadratureSettings()
    x = float(x)
    if not abs(x) < 1.0:
        raise DomainError(f"quadrature oracle needs |x| < 1, got {x}")
    f = _vectorized(psi)
    psi_x = float(f(np.array([x]))[0])
    d = 1.0 - abs(x)

    def near(eps):
        span = d - eps

        def g(phi):
            s = eps + span * np.sin(phi)
            return (2.0 * psi_x - f(x + s) - f(x - s)) / (s * s) * span * np.cos(phi)

        return _integrate(g, 0.0, 0.5 * math.pi, settings)

    # far side: distance r from x runs over [d, 1 + |x|]; r = d exp(u) spreads
    # the 1/r^2 peak, u = u_max sin(phi) absorbs the square root at the edge
    far = 0.0
    u_max = math.log((1.0 + abs(x)) / d)
    if u_max > 0.0:
        away = -1.0 if x >= 0 else 1.0

        def h(phi):
            r = d * np.exp(u_max * np.sin(phi))
            t = np.clip(x + away * r, -1.0, 1.0)
            return (psi_x - f(t)) / r * u_max * np.cos(phi)

        far = _integrate(h, 0.0, 0.5 * math.pi, settings)

    eps = np.array(settings.epsilon_schedule) * d
    values = [near(e) for e in eps]
    diag = _extrapolate(values, eps)
    best, runner_up = diag[-1], diag[-2]
    scale = max(1.0, abs(best), abs(far))
    if abs(best - runner_up) > max(1e3 * settings.tolerance, 1e-10) * scale:
        raise QuadratureError(f"epsilon extrapolation at x={x} did not settle", (runner_up, best))
    return 2.0 / math.pi * psi_x / (1.0 - x * x) + (best + far) / math.pi
