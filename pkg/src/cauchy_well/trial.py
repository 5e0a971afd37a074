"""Closed-form trial states and their analysis.

Two analytic shapes are available, with theta = theta_num * pi / 4096:

    ground   psi(x) =  C sqrt((1 - x^2) cos(theta x))              (even)
    excited  psi(x) = -C sin(theta x) sqrt((1 - x^2) cos(theta x))  (odd)

Writing the non-weight factor as a power series g(x) = sum_k g_k x^(2k+p),
the trial is a weighted polynomial with coefficients g_k, so A_D acts on it
term by term in closed form. ``gamma`` holds plain Taylor coefficients of
sqrt(cos) or sin * sqrt(cos), i.e. g_1 = -theta^2/4 for the ground state.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .errors import DomainError, UsageError
from .operators import PlainPolynomial, WeightedPolynomial, apply_AD_closed, w_polynomial
from .parity import Parity
from .quadrature import PVQuadratureSettings, _integrate
from .residual import ResidualReport, residual_report
from .series import sqrt_series

THETA_UNIT = math.pi / 4096
DEFAULT_GAMMA_TERMS = 15


class TrialKind(enum.Enum):
    GROUND = "ground"
    EXCITED = "excited"

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if self is TrialKind.GROUND else Parity.ODD

    @classmethod
    def coerce(cls, value) -> "TrialKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise UsageError(f"trial kind must be 'ground' or 'excited', got {value!r}") from None


def _sqrt_power_series(f: np.ndarray) -> np.ndarray:
    """Power series square root of f with f[0] > 0."""
    s = np.zeros_like(f)
    s[0] = math.sqrt(f[0])
    for k in range(1, f.size):
        s[k] = (f[k] - np.dot(s[1:k], s[k - 1 : 0 : -1])) / (2.0 * s[0])
    return s


def gamma_series(kind, theta: float, terms: int) -> np.ndarray:
    """First ``terms`` Taylor coefficients of sqrt(cos(theta x)) in powers of x^2,
    or of sin(theta x) sqrt(cos(theta x)) in powers x^(2k+1)."""
    kind = TrialKind.coerce(kind)
    k = np.arange(terms)
    fact_even = np.array([math.factorial(2 * i) for i in k], dtype=float)
    cos_series = (-(theta**2)) ** k / fact_even
    root = _sqrt_power_series(cos_series)
    if kind is TrialKind.GROUND:
        return root
    fact_odd = np.array([math.factorial(2 * i + 1) for i in k], dtype=float)
    sin_series = theta * (-(theta**2)) ** k / fact_odd
    return np.convolve(sin_series, root)[:terms]


@dataclass(frozen=True)
class TrialFunction:
    kind: TrialKind
    theta_num: int
    gamma_terms: int
    norm_c: float

    @property
    def theta(self) -> float:
        return self.theta_num * THETA_UNIT

    @property
    def parity(self) -> Parity:
        return self.kind.parity

    @property
    def sign(self) -> float:
        return 1.0 if self.kind is TrialKind.GROUND else -1.0

    @cached_property
    def gamma(self) -> np.ndarray:
        return gamma_series(self.kind, self.theta, self.gamma_terms)

    def __call__(self, x):
        """Closed form of psi on [-1, 1]; 0 outside."""
        x = np.asarray(x, dtype=float)
        inside = np.abs(x) < 1.0
        xs = np.where(inside, x, 0.0)
        val = self.norm_c * np.sqrt((1.0 - xs * xs) * np.cos(self.theta * xs))
        if self.kind is TrialKind.EXCITED:
            val = -val * np.sin(self.theta * xs)
        val = np.where(inside, val, 0.0)
        return val if val.ndim else float(val)

    def truncated(self) -> WeightedPolynomial:
        """psi with the shape factor replaced by its first gamma_terms Taylor terms."""
        return WeightedPolynomial(self.parity, self.sign * self.gamma, self.norm_c)


def _shape_squared(kind: TrialKind, theta: float):
    if kind is TrialKind.GROUND:
        return lambda x: (1.0 - x * x) * np.cos(theta * x)
    return lambda x: (1.0 - x * x) * np.cos(theta * x) * np.sin(theta * x) ** 2


def make_trial(kind, theta_num: int, gamma_terms: int = DEFAULT_GAMMA_TERMS) -> TrialFunction:
    """Trial state with its L2(D) normalization.

    The norm integral uses Gauss-Legendre after x = sin(u).
    """
    kind = TrialKind.coerce(kind)
    theta_num = int(theta_num)
    if not 0 <= theta_num < 2048 or (kind is TrialKind.EXCITED and theta_num == 0):
        raise DomainError(f"theta numerator must lie in (0, 2048), got {theta_num}")
    if gamma_terms < 1:
        raise UsageError("gamma_terms must be >= 1")
    f = _shape_squared(kind, theta_num * THETA_UNIT)
    norm = _integrate(lambda u: f(np.sin(u)) * np.cos(u), -0.5 * math.pi, 0.5 * math.pi,
                      PVQuadratureSettings(tolerance=1e-14))
    return TrialFunction(kind, theta_num, int(gamma_terms), 1.0 / math.sqrt(norm))


def expand_trial(trial: TrialFunction, count: int | None = None) -> np.ndarray:
    """Parity-indexed Taylor coefficients of psi itself (C and sign included)."""
    count = trial.gamma_terms if count is None else count
    if count > trial.gamma_terms:
        raise UsageError(f"only {trial.gamma_terms} gamma terms available, {count} requested")
    product = np.convolve(sqrt_series(count - 1), trial.gamma[:count])[:count]
    return trial.sign * trial.norm_c * product


def apply_AD_trial(trial: TrialFunction) -> PlainPolynomial:
    """Polynomial A_D psi for the truncated shape series."""
    return trial.norm_c * apply_AD_closed(trial.truncated())


def apply_AD_trial_w(trial: TrialFunction) -> PlainPolynomial:
    """Same image written as C sum gamma_n w_n with the classic gamma signs.

    The even classic coefficients are 1, -g_1, -g_2, ...; the odd ones equal g.
    """
    gamma = trial.gamma.copy()
    if trial.parity is Parity.EVEN:
        gamma[1:] = -gamma[1:]
    total = PlainPolynomial(np.zeros(1))
    for n, g in enumerate(gamma):
        total = total + g * w_polynomial(trial.parity, n)
    return trial.sign * trial.norm_c * total


def trial_residual(trial: TrialFunction, E: float, grid_points: int) -> ResidualReport:
    """|A_D psi - E psi| with the exact trial psi and the truncated image."""
    image = apply_AD_trial(trial)
    return residual_report(trial, image, E, grid_points)


class SweepResult(NamedTuple):
    points: list
    argmin: int
    minimum: float


def sweep(kind, theta_from: int, theta_to: int, E: float, grid_points: int,
          gamma_terms: int = DEFAULT_GAMMA_TERMS, workers: int = 1) -> SweepResult:
    """Residual supremum for each integer theta numerator in [theta_from, theta_to]."""
    if theta_to < theta_from:
        raise UsageError(f"empty theta range [{theta_from}, {theta_to}]")
    thetas = range(int(theta_from), int(theta_to) + 1)

    def one(t):
        return t, trial_residual(make_trial(kind, t, gamma_terms), E, grid_points).sup

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(one, thetas))
    else:
        points = [one(t) for t in thetas]
    best = min(points, key=lambda p: p[1])
    return SweepResult(points, best[0], best[1])
