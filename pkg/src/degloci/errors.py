"""Exception types shared across the package."""


class SpaceMismatchError(ValueError):
    """Operands live on different ambient product spaces."""


class NonUnitError(ValueError):
    """Series inversion was asked of an element whose degree-0 part is not 1."""


class RankError(ValueError):
    """A bundle operation received ranks it cannot support."""


class SlopeUndefinedError(ZeroDivisionError):
    """A slope was requested for a family whose Hodge degree lambda is zero."""


class ExpressionError(ValueError):
    """A bundle expression string could not be parsed or resolved."""


class ScenarioError(ValueError):
    """A scenario configuration is missing, malformed, or inconsistent."""


class InternalCheckError(AssertionError):
    """An internal consistency assertion failed; this indicates a bug."""
