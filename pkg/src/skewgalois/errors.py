class Inconclusive(Exception):
    """A decision procedure ran out of its supported class or search budget."""


class NotInvertible(ArithmeticError):
    """Raised for zero divisors and other non-units."""


class PresentationError(ValueError):
    """An extension presentation failed verification."""
