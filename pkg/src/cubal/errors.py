"""Exception types shared across the package."""


class CubalError(Exception):
    """Base class for all package-specific errors."""


class CapacityError(CubalError):
    """A requested computation exceeds its enumeration budget."""


class FormatError(CubalError):
    """Malformed table, matrix, or serialized document."""


class NotAssociativeError(FormatError):
    """A Cayley table failed the associativity check."""
