"""Exception hierarchy.

Parameter-validation failures raise plain ``ValueError``. Anything that goes
wrong while *evaluating* a well-formed request derives from
:class:`EvaluationError`, so callers (the CLI in particular) can tell the two
apart.
"""


class EvaluationError(ArithmeticError):
    """Base class for failures during numerical evaluation."""


class DomainError(EvaluationError, ValueError):
    """Argument outside the domain where the quantity is defined."""


class PoleError(DomainError):
    """Argument at (or numerically indistinguishable from) a gamma pole."""


class KGammaOverflowError(EvaluationError, OverflowError):
    """Result magnitude not representable as a double."""


class ConvergenceConditionError(EvaluationError, ValueError):
    """Fox-Wright parameters violate sum(beta) - sum(alpha) > -1."""


class NonconvergenceError(EvaluationError):
    """Series did not reach the requested tolerance within its term cap."""


class QuadratureError(NonconvergenceError):
    """Adaptive quadrature could not meet the tolerance."""


class IntegrandError(EvaluationError):
    """Integrand returned a non-finite value.

    ``t`` holds the offending abscissa (in the original variable).
    """

    def __init__(self, message, t=None):
        super().__init__(message)
        self.t = t
