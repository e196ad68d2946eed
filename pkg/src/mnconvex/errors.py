"""Exception hierarchy shared by every module."""


class MNConvexError(Exception):
    """Base class for library errors."""


class UndefinedSymbol(MNConvexError, ValueError):
    """Raised for the undefined Pochhammer symbol (0, 0)."""


class InvalidParameters(MNConvexError, ValueError):
    pass


class OutOfDomain(MNConvexError, ValueError):
    pass


class NoConvergenceDetected(MNConvexError, ArithmeticError):
    pass


class NonPositiveInput(MNConvexError, ValueError):
    pass


class NonPositiveDenominator(MNConvexError, ValueError):
    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"denominator coefficient at n={index} is not positive")


class NonPositiveCoefficient(MNConvexError, ValueError):
    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"coefficient a_{index} is not positive")


class Inapplicable(MNConvexError, ValueError):
    """A parameter precondition of a closed-form result does not hold."""


class EvaluationFailure(MNConvexError, RuntimeError):
    """A subject could not be evaluated during a numeric scan."""
