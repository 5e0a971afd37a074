from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import UsageError


@dataclass(frozen=True)
class ResidualReport:
    """Samples of |A_D psi - E psi| on a Chebyshev grid plus the boundary limit.

    ``boundary_limit`` is |A_D psi(+-1)|, the residual at the edge since
    psi(+-1) = 0.
    """

    x: np.ndarray
    psi: np.ndarray
    ad_psi: np.ndarray
    residual: np.ndarray
    sup: float
    argsup: float
    boundary_limit: float
    E_used: float

    @property
    def grid_points(self) -> int:
        return self.x.size


def chebyshev_grid(points: int) -> np.ndarray:
    """Interior Chebyshev nodes cos((2j+1) pi / (2N)), ascending; dense near +-1."""
    j = np.arange(points)
    return np.sort(np.cos((2 * j + 1) * np.pi / (2 * points)))


def residual_report(psi_eval: Callable, ad_eval: Callable, E: float, grid_points: int,
                    boundary_limit: float | None = None) -> ResidualReport:
    """Residual |ad_eval - E psi_eval| over the grid and at the boundary.

    When ``boundary_limit`` is not given it is taken as max |ad_eval(+-1)|,
    which is exact when ``ad_eval`` is the polynomial image.
    """
    if grid_points < 0:
        raise UsageError(f"grid_points must be non-negative, got {grid_points}")
    if E < 0:
        raise UsageError(f"E must be non-negative, got {E}")
    x = chebyshev_grid(grid_points)
    psi = np.asarray(psi_eval(x), dtype=float) if x.size else np.zeros(0)
    ad = np.asarray(ad_eval(x), dtype=float) if x.size else np.zeros(0)
    residual = np.abs(ad - E * psi)
    if boundary_limit is None:
        boundary_limit = max(abs(float(ad_eval(1.0))), abs(float(ad_eval(-1.0))))
    boundary_limit = abs(float(boundary_limit))
    if residual.size and residual.max() > boundary_limit:
        i = int(np.argmax(residual))
        sup, argsup = float(residual[i]), float(x[i])
    else:
        sup, argsup = boundary_limit, 1.0
    return ResidualReport(x, psi, ad, residual, sup, argsup, boundary_limit, float(E))
