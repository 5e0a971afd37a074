"""Weighted polynomials and the closed-form action of the Cauchy operator.

For functions vanishing outside D = (-1, 1) the operator reads

    A_D psi(x) = (2/pi) psi(x) / (1 - x^2)
                 + (1/pi) PV int_{-1}^{1} (psi(x) - psi(t)) / (t - x)^2 dt.

On the weighted monomials x**p sqrt(1 - x**2) the singular part of the
regional integral cancels the exterior term exactly, and what is left is a
plain polynomial of the same degree and parity:

    A_D [x**p sqrt(1 - x**2)] = sum_k coupling(k, m) x**(p - 2k),  p = 2m (+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import DegenerateInputError
from .parity import Parity
from .series import sqrt_series


@dataclass(frozen=True)
class PlainPolynomial:
    """Polynomial in the monomial basis, ``coeffs[j]`` multiplying x**j."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else np.zeros(1)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1 if np.any(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def __call__(self, x):
        return P.polyval(x, self.coeffs)

    def __add__(self, other: "PlainPolynomial") -> "PlainPolynomial":
        return PlainPolynomial(P.polyadd(self.coeffs, other.coeffs))

    def __sub__(self, other: "PlainPolynomial") -> "PlainPolynomial":
        return PlainPolynomial(P.polysub(self.coeffs, other.coeffs))

    def __mul__(self, scalar: float) -> "PlainPolynomial":
        return PlainPolynomial(self.coeffs * float(scalar))

    __rmul__ = __mul__

    def __repr__(self):
        return f"PlainPolynomial({self.coeffs.tolist()})"


@dataclass(frozen=True)
class WeightedPolynomial:
    """psi(x) = C sqrt(1 - x**2) sum_m alphas[m] x**(2m + parity offset) on [-1, 1].

    ``norm_c`` is the L2(D) normalization C; ``None`` means C = 1
    (pre-normalized form).
    """

    parity: Parity
    alphas: np.ndarray
    norm_c: Optional[float] = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "parity", Parity.coerce(self.parity))
        a = np.atleast_1d(np.asarray(self.alphas, dtype=float))
        if a.ndim != 1:
            raise DegenerateInputError("alphas must be a 1-d coefficient vector")
        a.setflags(write=False)
        object.__setattr__(self, "alphas", a)

    @property
    def scale(self) -> float:
        return 1.0 if self.norm_c is None else float(self.norm_c)

    @property
    def degree(self) -> int:
        return self.parity.exponent(self.alphas.size - 1)

    def polynomial_part(self) -> PlainPolynomial:
        """The polynomial factor sum_m alphas[m] x**p_m, without C."""
        return PlainPolynomial(_spread(self.alphas, self.parity))

    def __call__(self, x):
        return evaluate(self, x)

    def with_norm(self, norm_c: Optional[float]) -> "WeightedPolynomial":
        return WeightedPolynomial(self.parity, self.alphas, norm_c)


def _spread(half, parity: Parity) -> np.ndarray:
    """Dense monomial coefficients from a parity-indexed vector."""
    half = np.asarray(half, dtype=float)
    dense = np.zeros(2 * half.size + parity.offset)
    dense[parity.offset :: 2] = half
    return dense


def image_matrix(parity, n: int) -> np.ndarray:
    """(n+1, n+1) map from alphas to the parity-indexed image coefficients.

    Entry [j, m] is coupling(parity, m - j, m) = (2j + 1 + offset) c[m - j]
    for j <= m.
    """
    parity = Parity.coerce(parity)
    c = sqrt_series(n)
    j = np.arange(n + 1)[:, None]
    m = np.arange(n + 1)[None, :]
    diff = m - j
    return np.where(diff >= 0, (2 * j + 1 + parity.offset) * c[np.clip(diff, 0, n)], 0.0)


def apply_AD_closed(psi: WeightedPolynomial) -> PlainPolynomial:
    """Exact image A_D psi / C as a plain polynomial.

    The normalization constant is not applied; multiply by ``psi.scale``
    to get A_D psi itself.

    >>> apply_AD_closed(WeightedPolynomial("even", [1.0, -0.4]))
    PlainPolynomial([1.2, 0.0, -1.2000000000000002])
    """
    if psi.alphas.size == 0:
        raise DegenerateInputError("empty coefficient vector")
    n = psi.alphas.size - 1
    half = image_matrix(psi.parity, n) @ psi.alphas
    return PlainPolynomial(_spread(half, psi.parity))


def basis_image(parity, m: int) -> PlainPolynomial:
    """A_D of the single basis element x**p_m sqrt(1 - x**2)."""
    alphas = np.zeros(m + 1)
    alphas[m] = 1.0
    return apply_AD_closed(WeightedPolynomial(parity, alphas))


def w_polynomial(parity, n: int) -> PlainPolynomial:
    """Classic w-polynomials w_{2n} (even) and w_{2n+1} (odd).

    These are the basis images with the historical sign convention: the
    even ones for n >= 1 are tabulated with the opposite sign, matching a
    weight factor written as 1 - g2 x^2 - g4 x^4 - ...

    >>> w_polynomial("even", 1)
    PlainPolynomial([0.5, 0.0, -3.0])
    >>> w_polynomial("odd", 1)
    PlainPolynomial([0.0, -1.0, 0.0, 4.0])
    """
    parity = Parity.coerce(parity)
    image = basis_image(parity, n)
    if parity is Parity.EVEN and n >= 1:
        return -1.0 * image
    return image


def boundary_value(p: PlainPolynomial) -> float:
    """p(1); for polynomials of definite parity |p(-1)| equals this."""
    return float(np.sum(p.coeffs))


def evaluate(psi: WeightedPolynomial, x):
    """C sqrt(1 - x**2) P(x), and exactly 0 for |x| >= 1."""
    x = np.asarray(x, dtype=float)
    inside = np.abs(x) < 1.0
    xs = np.where(inside, x, 0.0)
    poly = P.polyval(xs, _spread(psi.alphas, psi.parity))
    val = np.where(inside, psi.scale * np.sqrt(1.0 - xs * xs) * poly, 0.0)
    return val if val.ndim else float(val)
