"""Exception hierarchy shared by every module in the package."""


class ExactProbError(Exception):
    """Base class for all library errors."""


class ZeroDenominator(ExactProbError, ZeroDivisionError):
    pass


class EmptySimplex(ExactProbError, ValueError):
    pass


class UndefinedRatio(ExactProbError, ValueError):
    pass


class NotAProportion(ExactProbError, ValueError):
    pass


class ShapeError(ExactProbError, ValueError):
    pass


class SpaceMismatch(ExactProbError, ValueError):
    pass


class NegativeWeight(ExactProbError, ValueError):
    pass


class MassNotOne(ExactProbError, ValueError):
    pass


class MapDomainError(ExactProbError, ValueError):
    pass


class ArityError(ExactProbError, ValueError):
    pass


class EmptyMixture(ExactProbError, ValueError):
    pass


class NotIndicator(ExactProbError, ValueError):
    pass


class NotSatisfiable(ExactProbError, ValueError):
    pass


class NotPointwiseOrdered(ExactProbError, ValueError):
    pass


class EmptyUrn(ExactProbError, ValueError):
    pass


class BadUrn(ExactProbError, ValueError):
    pass


class ParseError(ExactProbError, SyntaxError):
    """Syntax error in a CLI query, with 1-based line/column and expected tokens."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f" (expected {', '.join(self.expected)})"
        super().__init__(detail)


class UnknownName(ExactProbError, LookupError):
    """A CLI query referenced a constructor, reshaper, kernel or RV that does not exist."""
