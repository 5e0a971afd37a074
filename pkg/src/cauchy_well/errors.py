"""Exception hierarchy shared by all modules."""


class CauchyWellError(Exception):
    """Base class for errors raised by this package."""


class UsageError(CauchyWellError, ValueError):
    """Contract violation by the caller (bad index, bad parity/degree pair, ...)."""


class DomainError(UsageError):
    """Argument outside the domain of the operation."""


class DegenerateInputError(UsageError):
    """Input has no meaningful value, e.g. a zero leading coefficient."""


class NumericalFailure(CauchyWellError):
    """A numerical routine did not deliver a usable result."""


class QuadratureError(NumericalFailure):
    """Principal-value quadrature failed to converge.

    ``estimates`` holds the last two extrapolated values.
    """

    def __init__(self, message, estimates=()):
        super().__init__(message)
        self.estimates = tuple(estimates)


class RankUnavailableError(NumericalFailure):
    """Fewer real solutions than the requested rank."""

    def __init__(self, message, found):
        super().__init__(message)
        self.found = found


class ReferenceLookupError(CauchyWellError, KeyError):
    """No reference-table entry for the requested key."""

    def __init__(self, message, available=()):
        super().__init__(message)
        self.available = tuple(available)

    def __str__(self):
        return self.args[0]
