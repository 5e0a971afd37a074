import enum


class Parity(enum.Enum):
    """Parity of a function on (-1, 1); fixes which monomial exponents occur."""

    EVEN = "even"
    ODD = "odd"

    @property
    def offset(self) -> int:
        """Exponent of the lowest monomial: 0 for even, 1 for odd."""
        return 0 if self is Parity.EVEN else 1

    def exponent(self, index: int) -> int:
        return 2 * index + self.offset

    @classmethod
    def coerce(cls, value) -> "Parity":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"parity must be 'even' or 'odd', got {value!r}") from None

    def __str__(self) -> str:
        return self.value
