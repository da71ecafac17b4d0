"""Exception types shared across the package."""


class EngineError(ValueError):
    """Base class for all errors raised by this package."""


class BindingError(EngineError):
    """Parameter bindings are inconsistent, duplicated, or forbidden (m = 0)."""


class ZeroDenominatorError(EngineError):
    """A substitution or inversion produced a vanishing denominator."""


class OddInversionError(EngineError):
    """Attempt to invert a scalar with a nonzero odd part."""


class ZeroDivisorError(EngineError):
    """A pivot was a zero divisor of the odd-extended coefficient ring.

    Only reachable when m/2 is bound to a rational square; rebinding m
    (e.g. m = 1) restores a field.
    """


class UnknownAlgebraError(EngineError):
    """Requested algebra name is not in the catalog."""


class InadmissibleParametersError(EngineError):
    """Closed-form singular vector requested at parameters outside its range."""


class AmbiguousClosedFormError(EngineError):
    """The closed-form expression for this algebra is only defined piecewise.

    Carries a ``report`` attribute describing the defect; the kernel scan
    remains available at every admissible parameter value.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ParametricBudgetError(EngineError):
    """Symbolic elimination exceeded the configured size budget."""
