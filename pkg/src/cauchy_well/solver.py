"""Truncated eigen-systems for A_D psi = E psi with the boundary demand.

With psi = C sqrt(1 - x^2) sum_m alpha_m x^(p_m) the image A_D psi is a
polynomial, so matching Taylor coefficients of x^(p_i), i < n, together with
the boundary demand A_D psi(+-1) = 0 gives n + 1 equations

    M0 v = E M1 v,      v = (alpha_0, ..., alpha_n),

whose last M1 row is zero. The unknown E enters linearly, so the system is a
generalized eigenproblem. It is reduced to a standard one by solving the
boundary row for alpha_n and inverting the unit lower-triangular block of
M1 (a convolution with the series of sqrt(1 - x^2)).

Binary64 is the default. ``precision_bits > 0`` switches to arbitrary
precision through python-flint: the reduced matrix is formed exactly over the
rationals and only then rounded.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterator, Optional

import flint
import numpy as np
import scipy.linalg

from .errors import DegenerateInputError, NumericalFailure, RankUnavailableError, UsageError
from .operators import WeightedPolynomial
from .parity import Parity
from .series import coupling_exact, inverse_sqrt_series_exact, sqrt_series, sqrt_series_exact

log = logging.getLogger(__name__)

DEFAULT_IMAG_TOL = 1e-8


def degree_to_n(parity, degree: int) -> int:
    """Half-degree n of a polynomial of the given degree and parity."""
    parity = Parity.coerce(parity)
    if degree % 2 != parity.offset:
        raise UsageError(f"degree {degree} does not match {parity} parity")
    n = (degree - parity.offset) // 2
    if n < 1:
        raise UsageError(f"degree {degree} is too small; need n >= 1")
    return n


@dataclass(frozen=True)
class GeneralizedSystem:
    parity: Parity
    n: int
    M0: np.ndarray
    M1: np.ndarray

    @property
    def degree(self) -> int:
        return self.parity.exponent(self.n)

    @property
    def constraint(self) -> np.ndarray:
        return self.M0[self.n]

    @cached_property
    def reduced(self) -> np.ndarray:
        """Standard-form n x n matrix acting on (alpha_0, ..., alpha_{n-1})."""
        n = self.n
        r = self.constraint
        k = self.M0[:n, :n] - np.outer(self.M0[:n, n], r[:n] / r[n])
        return scipy.linalg.solve_triangular(self.M1[:n, :n], k, lower=True, unit_diagonal=True)

    def reduced_exact(self) -> flint.fmpq_mat:
        return _reduced_exact(self.parity, self.n)

    def complete(self, head):
        """Append alpha_n fixed by the boundary row to (alpha_0, ..., alpha_{n-1})."""
        head = np.asarray(head)
        r = self.constraint
        return np.append(head, -np.dot(r[:-1], head) / r[-1])


def assemble(parity, n: int) -> GeneralizedSystem:
    """Matrices (M0, M1) of the truncated system with half-degree n."""
    parity = Parity.coerce(parity)
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    c = sqrt_series(n)
    i = np.arange(n + 1)[:, None]
    k = np.arange(n + 1)[None, :]
    # row i, column k: coupling(k - i, k) = (2i + 1 + offset) c[k - i]
    m0 = np.where(k >= i, (2 * i + 1 + parity.offset) * c[np.clip(k - i, 0, n)], 0.0)
    m1 = np.where(k <= i, c[np.clip(i - k, 0, n)], 0.0)
    m1[n] = 0.0
    m0[n] = [float(_boundary_sum(parity, m)) for m in range(n + 1)]
    if m0[n, n] == 0.0:
        raise DegenerateInputError(f"boundary row has zero top coefficient at n={n}")
    for a in (m0, m1):
        a.setflags(write=False)
    return GeneralizedSystem(parity, n, m0, m1)


def _boundary_sum(parity: Parity, m: int):
    return sum(coupling_exact(parity, k, m) for k in range(m + 1))


def _reduced_exact(parity: Parity, n: int) -> flint.fmpq_mat:
    c = [flint.fmpq(q.numerator, q.denominator) for q in sqrt_series_exact(n)]
    d = [flint.fmpq(q.numerator, q.denominator) for q in inverse_sqrt_series_exact(n)]
    r = [flint.fmpq(q.numerator, q.denominator) for q in (_boundary_sum(parity, m) for m in range(n + 1))]
    top = [(2 * i + 1 + parity.offset) * c[n - i] for i in range(n)]
    k = flint.fmpq_mat(n, n)
    for i in range(n):
        for j in range(n):
            entry = (2 * i + 1 + parity.offset) * c[j - i] if j >= i else flint.fmpq(0)
            k[i, j] = entry - top[i] * r[j] / r[n]
    linv = flint.fmpq_mat(n, n)
    for i in range(n):
        for j in range(i + 1):
            linv[i, j] = d[i - j]
    return linv * k


@dataclass(frozen=True)
class Eigenpair:
    E: complex
    alphas: np.ndarray


@dataclass
class Spectrum:
    """Finite generalized spectrum of one system; the infinite eigenvalue is dropped."""

    parity: Parity
    n: int
    precision_bits: int
    pairs: list = field(default_factory=list)
    unscalable: int = 0

    def __iter__(self) -> Iterator[Eigenpair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def solve_all(system: GeneralizedSystem, precision_bits: int = 0) -> Spectrum:
    """All finite eigenpairs, eigenvectors scaled to alpha_0 = 1."""
    if precision_bits:
        values, vectors = _eig_flint(system, precision_bits)
    else:
        try:
            values, vectors = scipy.linalg.eig(system.reduced)
        except (np.linalg.LinAlgError, ValueError) as exc:
            raise NumericalFailure(
                f"eigensolver failed at degree {system.degree} in binary64: {exc}"
            ) from exc
    spectrum = Spectrum(system.parity, system.n, precision_bits)
    col_scale = np.max(np.abs(vectors), axis=0)
    for j, E in enumerate(values):
        lead = vectors[0, j]
        if abs(lead) <= 1e-13 * col_scale[j]:
            spectrum.unscalable += 1
            continue
        head = vectors[:, j] / lead
        spectrum.pairs.append(Eigenpair(complex(E), system.complete(head)))
    if spectrum.unscalable:
        log.info("%d eigenvector(s) with vanishing leading entry excluded at degree %d",
                    spectrum.unscalable, system.degree)
    return spectrum


def _eig_flint(system: GeneralizedSystem, bits: int):
    old = flint.ctx.prec
    flint.ctx.prec = bits
    try:
        a = flint.acb_mat(flint.arb_mat(system.reduced_exact()))
        values, right = a.eig(right=True, algorithm="approx")
        n = system.n
        vals = np.array([complex(v.real.mid(), v.imag.mid()) for v in values])
        vecs = np.empty((n, n), dtype=complex)
        for j in range(n):
            # normalize in high precision before rounding to avoid underflow
            lead = right[0, j]
            big = max(range(n), key=lambda i: abs(right[i, j]).mid())
            ref = lead if abs(lead).mid() > 0 else right[big, j]
            for i in range(n):
                z = right[i, j] / ref
                vecs[i, j] = complex(z.real.mid(), z.imag.mid())
        return vals, vecs
    except (ValueError, ZeroDivisionError) as exc:
        raise NumericalFailure(f"eigensolver failed at degree {system.degree} with {bits} bits: {exc}") from exc
    finally:
        flint.ctx.prec = old


def polish_eigenvalue(system: GeneralizedSystem, E: float, precision_bits: int, steps: int = 3) -> float:
    """Newton iteration on det(A - E I) for the reduced matrix A.

    det(M0 - E M1) is a nonzero multiple of det(A - E I), so both share roots.
    Uses d/dE log det(A - E I) = -trace((A - E I)^-1) with dense LU solves.
    """
    old = flint.ctx.prec
    flint.ctx.prec = precision_bits
    try:
        a = flint.arb_mat(system.reduced_exact())
        n = system.n
        ident = flint.arb_mat(n, n)
        for i in range(n):
            ident[i, i] = 1
        e = flint.arb(E)
        for _ in range(steps):
            shifted = (a - ident * e).mid()
            inv = shifted.solve(ident, algorithm="approx")
            trace = sum((inv[i, i] for i in range(n)), flint.arb(0)).mid()
            e = (e + 1 / trace).mid()
        return float(e)
    except (ValueError, ZeroDivisionError) as exc:
        raise NumericalFailure(f"Newton polish failed at degree {system.degree}: {exc}") from exc
    finally:
        flint.ctx.prec = old


@dataclass(frozen=True)
class SpectralSolution:
    parity: Parity
    rank: int
    degree: int
    E: float
    alphas: np.ndarray
    norm_c: Optional[float] = None
    imag_residue: float = 0.0
    precision_bits: int = 0

    @property
    def psi(self) -> WeightedPolynomial:
        return WeightedPolynomial(self.parity, self.alphas, self.norm_c)


def real_solutions(spectrum: Spectrum, imag_tol: float = DEFAULT_IMAG_TOL) -> list:
    """Real eigenpairs sorted by E, as (E, alphas, imag_residue) tuples."""
    out = []
    for pair in spectrum:
        E = pair.E
        vec_scale = 1.0 + np.max(np.abs(pair.alphas.real))
        e_res = abs(E.imag)
        v_res = np.max(np.abs(pair.alphas.imag))
        if e_res <= imag_tol * (1.0 + abs(E.real)) and v_res <= imag_tol * vec_scale and E.real > 0:
            out.append((E.real, pair.alphas.real.copy(), max(e_res, v_res)))
    out.sort(key=lambda item: item[0])
    return out


def select(spectrum: Spectrum, rank: int, imag_tol: float = DEFAULT_IMAG_TOL) -> SpectralSolution:
    """The rank-th real solution (rank 1 = lowest E of this parity)."""
    if rank < 1:
        raise UsageError(f"rank must be >= 1, got {rank}")
    real = real_solutions(spectrum, imag_tol)
    if rank > len(real):
        raise RankUnavailableError(
            f"rank {rank} requested but only {len(real)} real {spectrum.parity} solution(s) "
            f"at degree {spectrum.parity.exponent(spectrum.n)}",
            found=len(real),
        )
    E, alphas, residue = real[rank - 1]
    return SpectralSolution(
        parity=spectrum.parity,
        rank=rank,
        degree=spectrum.parity.exponent(spectrum.n),
        E=float(E),
        alphas=alphas,
        imag_residue=float(residue),
        precision_bits=spectrum.precision_bits,
    )


def norm_squared(parity, alphas) -> float:
    """int_{-1}^{1} (1 - x^2) P(x)^2 dx from exact monomial moments.

    int x^(2q) (1 - x^2) dx = 4 / ((2q + 1)(2q + 3)), with q = j + k + offset.
    """
    parity = Parity.coerce(parity)
    alphas = np.asarray(alphas, dtype=float)
    idx = np.arange(alphas.size)
    q = idx[:, None] + idx[None, :] + parity.offset
    moments = 4.0 / ((2 * q + 1.0) * (2 * q + 3.0))
    return float(alphas @ moments @ alphas)


def normalize(solution: SpectralSolution) -> SpectralSolution:
    """Set C so that int psi^2 = 1, with psi(0) > 0 (even) or psi'(0) > 0 (odd)."""
    alphas = np.asarray(solution.alphas, dtype=float)
    if alphas[0] < 0:
        alphas = -alphas
    c = 1.0 / math.sqrt(norm_squared(solution.parity, alphas))
    return replace(solution, alphas=alphas, norm_c=c)


def solve_state(parity, degree: int, rank: int = 1, precision_bits: int = 0,
                imag_tol: float = DEFAULT_IMAG_TOL) -> SpectralSolution:
    """assemble -> solve_all -> select -> (polish) -> normalize."""
    parity = Parity.coerce(parity)
    system = assemble(parity, degree_to_n(parity, degree))
    solution = select(solve_all(system, precision_bits), rank, imag_tol)
    if precision_bits:
        solution = replace(solution, E=polish_eigenvalue(system, solution.E, precision_bits))
    return normalize(solution)


def eigenvalue_ladder(n: int, count: int = 5, precision_bits: int = 0,
                      imag_tol: float = DEFAULT_IMAG_TOL):
    """Lowest ``count`` eigenvalues interleaving both parities at half-degree n.

    Global label k = 1, 3, 5, ... is even rank (k + 1) / 2 (degree 2n) and
    k = 2, 4, ... is odd rank k / 2 (degree 2n + 1). Returns a list of
    (k, parity, rank, E) and whether E_1 < E_2 < ... holds.
    """
    real = {}
    for parity in Parity:
        spectrum = solve_all(assemble(parity, n), precision_bits)
        real[parity] = [E for E, _, _ in real_solutions(spectrum, imag_tol)]
    ladder = []
    for k in range(1, count + 1):
        parity = Parity.EVEN if k % 2 else Parity.ODD
        rank = (k + 1) // 2 if parity is Parity.EVEN else k // 2
        values = real[parity]
        if rank > len(values):
            raise RankUnavailableError(
                f"E_{k} needs {parity} rank {rank}; only {len(values)} found at n={n}",
                found=len(values),
            )
        ladder.append((k, parity, rank, values[rank - 1]))
    ordered = all(a[3] < b[3] for a, b in zip(ladder, ladder[1:]))
    return ladder, ordered
