"""Pathway fractional integral operator P^(eta, alpha)_{0+}.

    (P f)(x) = x^eta * int_0^U (1 - t/U)^mu f(t) dt,   U = x / (a(1 - alpha)),
                                                         mu = eta / (1 - alpha)

The substitution t = U (1 - s^(1/(mu+1))) absorbs the weight exactly:

    int_0^U (1 - t/U)^mu f(t) dt = U / (mu + 1) * int_0^1 f(t(s)) ds.

The s-integral is then mapped to the real line with s = expit(pi sinh(tau)),
which clusters nodes double-exponentially at both ends, so algebraic
singularities of f at t = 0 cost little. Adaptive G10/K21 works on tau.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import IntegrandError, KGammaOverflowError
from .quadrature import integrate
from .result import EvalResult

TAU_MAX = 6.0
_LOG_MAX = math.log(1.7976931348623157e308)


@dataclass(frozen=True)
class PathwayParams:
    eta: float
    alpha: float
    a: float

    def __post_init__(self):
        for name in ("eta", "alpha", "a"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not self.alpha < 1:
            raise ValueError(f"pathway parameter alpha must be < 1, got {self.alpha!r}")
        if not self.a > 0:
            raise ValueError(f"a must be positive, got {self.a!r}")
        if not self.eta > 0:
            raise ValueError(f"eta must be positive, got {self.eta!r}")
        if not self.mu > -1:
            raise ValueError(f"eta/(1-alpha) must exceed -1, got {self.mu!r}")

    @property
    def mu(self) -> float:
        """Weight exponent eta / (1 - alpha)."""
        return self.eta / (1.0 - self.alpha)

    @property
    def scale(self) -> float:
        """a (1 - alpha)."""
        return self.a * (1.0 - self.alpha)

    def upper_limit(self, x: float) -> float:
        return x / self.scale


def power_integrand(beta: float):
    """t -> t^(beta - 1), vectorised."""
    return lambda t: np.power(t, beta - 1.0)


def _transformed(f, upper, p):
    def h(tau):
        sig = math.pi * np.sinh(tau)
        log_s = special.log_expit(sig)
        w = math.pi * np.cosh(tau) * special.expit(sig) * special.expit(-sig)
        t = -upper * np.expm1(p * log_s)
        t = np.minimum(t, np.nextafter(upper, 0.0))
        out = np.zeros_like(tau)
        live = w > 0
        if np.any(live):
            ft = np.asarray(f(t[live]), dtype=float)
            bad = ~np.isfinite(ft)
            if np.any(bad):
                loc = float(t[live][bad][0])
                raise IntegrandError(f"integrand is not finite at t = {loc!r}", t=loc)
            out[live] = ft * w[live]
        return out

    return h


def pathway_integral(
    params: PathwayParams, f, x: float, tol: float = 1e-10, vectorized: bool = True
) -> EvalResult:
    """Evaluate (P f)(x) by quadrature.

    ``f`` is called with 1-D arrays of abscissae strictly inside (0, U) unless
    ``vectorized=False``, in which case it is called once per point.
    The error estimate satisfies ``err <= tol * max(1, |value|)``.
    """
    x = float(x)
    if not x > 0:
        raise ValueError(f"x must be positive, got {x!r}")
    if not 0 < tol < 1:
        raise ValueError(f"tol must lie in (0, 1), got {tol!r}")
    if not vectorized:
        f = np.vectorize(f, otypes=[float])
    mu = params.mu
    upper = params.upper_limit(x)
    factor = x**params.eta * upper / (mu + 1.0)
    h = _transformed(f, upper, 1.0 / (mu + 1.0))
    value, err, work = integrate(h, -TAU_MAX, TAU_MAX, tol, floor=1.0 / factor)
    return EvalResult(factor * value, factor * err, work)


def pathway_power_closed(params: PathwayParams, beta: float, x: float) -> float:
    """Closed form of P[t^(beta-1)](x):

        x^(eta+beta) / (a(1-alpha))^beta * Gamma(beta) Gamma(1+mu) / Gamma(1+mu+beta)
    """
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta!r}")
    if not x > 0:
        raise ValueError(f"x must be positive, got {x!r}")
    mu = params.mu
    logv = (
        (params.eta + beta) * math.log(x)
        - beta * math.log(params.scale)
        + math.lgamma(beta)
        + math.lgamma(1.0 + mu)
        - math.lgamma(1.0 + mu + beta)
    )
    if logv > _LOG_MAX:
        raise KGammaOverflowError(f"closed form overflows (log value {logv:.6g})")
    return math.exp(logv)
