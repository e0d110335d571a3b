"""k-Struve function, Fox-Wright function and pathway fractional integrals."""

from .errors import (
    ConvergenceConditionError,
    DomainError,
    EvaluationError,
    IntegrandError,
    KGammaOverflowError,
    NonconvergenceError,
    PoleError,
    QuadratureError,
)
from .foxwright import FoxWrightSpec, delta, eval_fox_wright
from .identities import (
    CaseId,
    Status,
    TheoremCase,
    VerificationReport,
    lhs_quadrature,
    rhs_as_printed,
    rhs_corrected,
    verify,
)
from .kgamma import KGammaArg, k_gamma, log_k_gamma
from .kstruve import (
    KStruveParams,
    Trig,
    TrigKind,
    eval_k_struve,
    k_struve_array,
    struve_via_trig,
    trig_closed_form,
)
from .pathway import PathwayParams, pathway_integral, pathway_power_closed, power_integrand
from .result import EvalResult

__version__ = "0.1.0"
