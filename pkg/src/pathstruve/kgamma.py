"""k-gamma function.

Uses the reduction Gamma_k(x) = k**(x/k - 1) * Gamma(x/k), so everything rests
on the classical gamma kernel (``math.gamma`` / ``math.lgamma``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, KGammaOverflowError, PoleError

POLE_TOL = 1e-12
_LOG_MAX = math.log(1.7976931348623157e308)


@dataclass(frozen=True)
class KGammaArg:
    x: float
    k: float

    def __post_init__(self):
        if not (self.k > 0 and math.isfinite(self.k)):
            raise ValueError(f"k must be a positive finite number, got {self.k!r}")
        if not math.isfinite(self.x):
            raise ValueError(f"x must be finite, got {self.x!r}")

    @property
    def ratio(self) -> float:
        return self.x / self.k


def _check_pole(u: float) -> None:
    if u <= 0 and abs(u - round(u)) <= POLE_TOL:
        raise PoleError(f"x/k = {u!r} is a pole of the gamma function")


def k_gamma(x: float, k: float = 1.0) -> float:
    """Return Gamma_k(x) = k**(x/k - 1) * Gamma(x/k).

    Negative non-pole arguments go through the reflection formula.

    Raises
    ------
    PoleError
        If x/k is within ``POLE_TOL`` of 0, -1, -2, ...
    KGammaOverflowError
        If |Gamma_k(x)| exceeds the double range.
    """
    arg = KGammaArg(float(x), float(k))
    u = arg.ratio
    _check_pole(u)
    if u > 0:
        logmag = (u - 1.0) * math.log(arg.k) + math.lgamma(u)
        sign = 1.0
    else:
        # Gamma(u) = pi / (sin(pi u) Gamma(1 - u))
        s = math.sin(math.pi * u)
        logmag = (
            (u - 1.0) * math.log(arg.k)
            + math.log(math.pi)
            - math.log(abs(s))
            - math.lgamma(1.0 - u)
        )
        sign = math.copysign(1.0, s)
    if logmag > _LOG_MAX:
        raise KGammaOverflowError(f"Gamma_k({x!r}, k={k!r}) overflows (log = {logmag:.6g})")
    if u > 0 and u < 171.0:
        # direct product is more accurate than exp(log) in the ordinary range
        return math.gamma(u) * arg.k ** (u - 1.0)
    return sign * math.exp(logmag)


def log_k_gamma(x: float, k: float = 1.0) -> float:
    """Return ln Gamma_k(x) = (x/k - 1) ln k + ln Gamma(x/k) for x/k > 0."""
    arg = KGammaArg(float(x), float(k))
    u = arg.ratio
    if not u > 0:
        raise DomainError(f"log_k_gamma requires x/k > 0, got x/k = {u!r}")
    return (u - 1.0) * math.log(arg.k) + math.lgamma(u)
