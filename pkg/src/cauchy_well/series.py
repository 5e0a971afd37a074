"""Scalar coefficient families and series eigenvalue estimators.

All coefficient tables are generated exactly in rational arithmetic and
rounded once, so degree-500 systems (half-degree 250) are covered without
factorial overflow.

``c[k]`` always denotes the Taylor coefficient of x**(2k) in sqrt(1 - x**2):

    c[k] = (2k)! / ((1 - 2k) (k!)**2 4**k),   c[k] = c[k-1] * (2k - 3) / (2k).
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DegenerateInputError, UsageError
from .parity import Parity


@functools.lru_cache(maxsize=None)
def sqrt_series_exact(k_max: int) -> tuple[Fraction, ...]:
    """Exact c[0..k_max] by the ratio recurrence."""
    if k_max < 0:
        raise UsageError(f"k_max must be >= 0, got {k_max}")
    coeffs = [Fraction(1)]
    for k in range(1, k_max + 1):
        coeffs.append(coeffs[-1] * Fraction(2 * k - 3, 2 * k))
    return tuple(coeffs)


def sqrt_series(k_max: int) -> np.ndarray:
    """Taylor coefficients c[0..k_max] of sqrt(1 - x**2) in binary64.

    Entry k holds the coefficient of x**(2k).

    >>> sqrt_series(3)
    array([ 1.    , -0.5   , -0.125 , -0.0625])
    """
    return np.array([float(c) for c in sqrt_series_exact(k_max)])


@functools.lru_cache(maxsize=None)
def inverse_sqrt_series_exact(k_max: int) -> tuple[Fraction, ...]:
    """Exact Taylor coefficients of 1/sqrt(1 - x**2): binom(2k, k) / 4**k."""
    if k_max < 0:
        raise UsageError(f"k_max must be >= 0, got {k_max}")
    return tuple(Fraction(math.comb(2 * k, k), 4**k) for k in range(k_max + 1))


def _coupling_factor(parity: Parity, k: int, m: int) -> int:
    if k < 0 or k > m:
        raise UsageError(f"coupling index requires 0 <= k <= m, got k={k}, m={m}")
    return 2 * m + 1 + parity.offset - 2 * k


def coupling_exact(parity, k: int, m: int) -> Fraction:
    parity = Parity.coerce(parity)
    return _coupling_factor(parity, k, m) * sqrt_series_exact(k)[k]


def coupling(parity, k: int, m: int) -> float:
    """Coefficient of x**(p_m - 2k) in the image of x**p_m sqrt(1 - x**2).

    Here p_m = 2m (even) or 2m + 1 (odd); the value is (2m+1-2k) c[k] for
    even parity and (2m+2-2k) c[k] for odd parity.

    >>> coupling("even", 0, 1), coupling("even", 1, 1), coupling("odd", 0, 0)
    (3.0, -0.5, 2.0)
    """
    return float(coupling_exact(parity, k, m))


def coupling_table(parity, n: int) -> np.ndarray:
    """(n+1, n+1) array with entry [k, m] = coupling(parity, k, m) for k <= m, else 0."""
    parity = Parity.coerce(parity)
    c = sqrt_series(n)
    k = np.arange(n + 1)[:, None]
    m = np.arange(n + 1)[None, :]
    table = (2 * m + 1 + parity.offset - 2 * k) * c[:, None]
    return np.where(k <= m, table, 0.0)


class SeriesEstimate(NamedTuple):
    value: float
    last_increment: float
    """Contribution of the final retained term, a crude convergence indicator."""


def eigenvalue_from_series(coeffs: Sequence[float], parity) -> SeriesEstimate:
    """Eigenvalue estimate from the Taylor coefficients of an eigenfunction.

    ``coeffs`` are (c0, c2, c4, ...) for even parity or (c1, c3, c5, ...)
    for odd parity. The estimate is

        even:  (2/pi) [1 - (c2/1 + c4/3 + c6/5 + ...) / c0]
        odd:   (4/pi) [1 - (c3/1 + c5/3 + c7/5 + ...) / c1]

    summed over the supplied terms only. The series converges slowly.
    """
    parity = Parity.coerce(parity)
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.size == 0 or coeffs[0] == 0.0:
        raise DegenerateInputError("leading series coefficient must be nonzero")
    prefactor = 2.0 / math.pi if parity is Parity.EVEN else 4.0 / math.pi
    terms = coeffs[1:] / (2.0 * np.arange(1, coeffs.size) - 1.0) / coeffs[0]
    value = prefactor * (1.0 - terms.sum())
    last = -prefactor * terms[-1] if terms.size else 0.0
    return SeriesEstimate(float(value), float(last))
