"""Exception hierarchy shared by every fuzzyrel module."""


class FuzzyRelError(Exception):
    """Base class for all errors raised by fuzzyrel."""


class RangeError(FuzzyRelError, ValueError):
    """A membership degree is NaN or lies outside [0, 1]."""

    def __init__(self, message, row=None, column=None):
        super().__init__(message)
        self.row = row
        self.column = column


class ShapeError(FuzzyRelError, ValueError):
    """Operands have incompatible dimensions."""


class OperatorMisuseError(FuzzyRelError, TypeError):
    """An operator was used outside its family or without required parameters."""


class ParseError(FuzzyRelError, ValueError):
    """An input file or operator name could not be parsed."""


class GenerationError(FuzzyRelError, ValueError):
    """A random instance profile cannot be satisfied with the given parameters."""
