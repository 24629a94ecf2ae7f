"""Exception types shared across the package."""


class PlethystError(Exception):
    """Base class for every error raised by this package."""


class PartitionParseError(PlethystError, ValueError):
    """Input could not be read as a partition."""


class SizeMismatchError(PlethystError, ValueError):
    """Operands index partitions of different sizes or degrees."""


class ShapeMismatchError(PlethystError, ValueError):
    """Tableaux of different shapes were compared."""


class BasisMismatchError(PlethystError, ValueError):
    """Symmetric functions in incompatible bases were combined."""


class UnsupportedConversionError(PlethystError, ValueError):
    """The requested basis conversion is not provided."""


class BoundExceededError(PlethystError, ValueError):
    """Input exceeds a configured size bound."""


class EmptyPartitionError(PlethystError, ValueError):
    """The operation requires a non-empty partition."""


class IntegralityError(PlethystError, ArithmeticError):
    """Coefficients that must be integers came out fractional."""
