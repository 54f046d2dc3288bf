"""Exception types shared across the toolkit."""


class AchromError(Exception):
    """Base class for all toolkit errors."""


class MatrixStructureError(AchromError):
    """Raised when an object is not a well-formed colour matrix.

    Structural defects (entry ids out of palette range, unused palette
    colours, ragged rows) are rejected at construction time and are distinct
    from a verification failure of a well-formed matrix.
    """


class MatrixFormatError(MatrixStructureError):
    """Raised when text input cannot be parsed as a colour matrix."""


class ConstructionRangeError(AchromError, ValueError):
    """Raised when a construction is requested outside its supported range."""
