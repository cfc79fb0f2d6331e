"""Exception hierarchy."""


class OreError(Exception):
    """Base class for all errors raised by this package."""


class OreDomainError(OreError, ValueError):
    """An argument lies outside the domain of the operation (zero divisor, n <= 0, ...)."""


class InvalidAlgebraError(OreError, ValueError):
    """Inconsistent algebra description (missing q, constant sigma image, ...)."""


class ConversionError(OreError, TypeError):
    """An operator cannot be viewed in the requested algebra."""


class UnsupportedError(OreError, NotImplementedError):
    """The operation is not available for this kind of algebra or argument."""


class InsufficientDataError(OreDomainError):
    """Not enough terms or initial values."""


class SingularIndexError(OreError, ArithmeticError):
    """The leading coefficient of a recurrence vanishes at index ``n``."""

    def __init__(self, n, message=None):
        self.n = n
        super().__init__(message or "leading coefficient vanishes at index n = %d" % n)


class ParseError(OreError, ValueError):
    """Syntax error in operator text; ``pos`` is the 0-based character offset."""

    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = "%s at position %d" % (message, pos)
        super().__init__(message)


class NoRelationError(OreError):
    """Guessing found no operator.

    ``reason`` is ``"no-admissible-point"`` when the options left nothing to
    test, and ``"no-relation"`` when every tested point failed.
    """

    def __init__(self, reason, message):
        self.reason = reason
        super().__init__(message)
