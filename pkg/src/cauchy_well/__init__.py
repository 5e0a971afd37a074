"""Eigenpairs of the Cauchy operator (-Laplacian)^(1/2) on (-1, 1).

Eigenfunctions are expanded as sqrt(1 - x^2) times an even or odd
polynomial. The operator maps such functions to plain polynomials in closed
form, which turns the eigenvalue problem into a small dense matrix problem.
"""

__version__ = "0.1.0"

from .analysis import (
    ComparisonRecord,
    Deviation,
    Tolerances,
    compare,
    compare_degree_500,
    emit,
    load_solution,
    solution_residual,
)
from .errors import (
    CauchyWellError,
    DegenerateInputError,
    DomainError,
    NumericalFailure,
    QuadratureError,
    RankUnavailableError,
    ReferenceLookupError,
    UsageError,
)
from .operators import (
    PlainPolynomial,
    WeightedPolynomial,
    apply_AD_closed,
    basis_image,
    boundary_value,
    evaluate,
    w_polynomial,
)
from .parity import Parity
from .quadrature import PVQuadratureSettings, apply_AD_numeric
from .reference import ReferenceEntry, ReferenceTable, reference_table
from .residual import ResidualReport, residual_report
from .series import coupling, eigenvalue_from_series, sqrt_series
from .solver import (
    SpectralSolution,
    assemble,
    eigenvalue_ladder,
    normalize,
    select,
    solve_all,
    solve_state,
)
from .trial import (
    TrialFunction,
    TrialKind,
    apply_AD_trial,
    expand_trial,
    make_trial,
    sweep,
    trial_residual,
)
