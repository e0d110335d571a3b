"""k-Struve function S^k_{nu,c}(x) and its elementary special orders.

The series is

    S(x) = sum_r (-c)^r (x/2)^(2r + nu/k + 1) / (Gamma_k(rk + nu + 3k/2) Gamma(r + 3/2))

Only the leading term touches the gamma kernel; later terms follow from the
ratio

    term_{r+1} / term_r = -c (x/2)^2 / (k (r + nu/k + 3/2) (r + 3/2)),

carried in log magnitude with a separate sign.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonconvergenceError
from .kgamma import log_k_gamma
from .result import EvalResult

TERM_CAP = 10_000
_LGAMMA_3_2 = math.lgamma(1.5)


@dataclass(frozen=True)
class KStruveParams:
    k: float
    nu: float
    c: float

    def __post_init__(self):
        for name in ("k", "nu", "c"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not self.k > 0:
            raise ValueError(f"k must be positive, got {self.k!r}")
        if not self.nu > -1.5 * self.k:
            raise ValueError(f"nu must exceed -3k/2 = {-1.5 * self.k!r}, got {self.nu!r}")

    @property
    def power(self) -> float:
        """Exponent nu/k + 1 of the leading (x/2) power."""
        return self.nu / self.k + 1.0

    def log_leading_coefficient(self) -> float:
        """ln of 1 / (Gamma_k(nu + 3k/2) Gamma(3/2))."""
        return -log_k_gamma(self.nu + 1.5 * self.k, self.k) - _LGAMMA_3_2


class Trig(enum.Enum):
    ONE_MINUS_COS = "cos1m"
    COSH_MINUS_ONE = "cosh1m"
    SIN = "sin"
    SINH = "sinh"


@dataclass(frozen=True)
class TrigKind:
    """Elementary function of gamma*x/sqrt(k) expressible through S^k."""

    kind: Trig
    gamma: float

    def __post_init__(self):
        if not math.isfinite(self.gamma):
            raise ValueError("gamma must be finite")

    def struve_params(self, k: float) -> KStruveParams:
        """The (k, nu, c) whose S^k reproduces this elementary function."""
        g2 = self.gamma * self.gamma
        if self.kind is Trig.ONE_MINUS_COS:
            return KStruveParams(k, 0.5 * k, g2)
        if self.kind is Trig.COSH_MINUS_ONE:
            return KStruveParams(k, 0.5 * k, -g2)
        if self.kind is Trig.SIN:
            return KStruveParams(k, -0.5 * k, g2)
        return KStruveParams(k, -0.5 * k, -g2)


def _log_ratio(r, q):
    # ln of the r -> r+1 ratio without the x- and c-dependent part
    return -math.log(r + q + 1.5) - math.log(r + 1.5)


def k_struve_terms(params: KStruveParams, x: float, n: int) -> np.ndarray:
    """First ``n`` series terms at ``x > 0``, generated by the ratio recurrence."""
    if not x > 0:
        raise DomainError("k_struve_terms needs x > 0")
    q = params.nu / params.k
    logm = params.power * math.log(x / 2) + params.log_leading_coefficient()
    if params.c == 0:
        out = np.zeros(n)
        if n:
            out[0] = math.exp(logm)
        return out
    base = math.log(abs(params.c)) + 2 * math.log(x / 2) - math.log(params.k)
    step_sign = -math.copysign(1.0, params.c)
    out = np.empty(n)
    sign = 1.0
    for r in range(n):
        out[r] = sign * math.exp(logm)
        logm += base + _log_ratio(r, q)
        sign *= step_sign
    return out


def k_struve_array(params: KStruveParams, x, tol: float = 1e-12):
    """Vectorised series evaluation at positive abscissae.

    Returns ``(values, err_estimates, work)`` where ``work`` is the total
    number of terms summed over all points.
    """
    x = np.asarray(x, dtype=float)
    if x.size and not np.all(x > 0):
        raise DomainError("k_struve_array needs x > 0")
    if not 0 < tol < 1:
        raise ValueError(f"tol must lie in (0, 1), got {tol!r}")
    shape = x.shape
    x = x.ravel()
    n = x.size
    values = np.empty(n)
    errs = np.zeros(n)
    if n == 0:
        return values.reshape(shape), errs.reshape(shape), 0

    k, c = params.k, params.c
    q = params.nu / k
    lx = np.log(x / 2)
    logm = params.power * lx + params.log_leading_coefficient()
    if c == 0:
        values[:] = np.exp(logm)
        return values.reshape(shape), errs.reshape(shape), n

    base = math.log(abs(c)) + 2 * lx - math.log(k)
    step_sign = -math.copysign(1.0, c)
    idx = np.arange(n)
    s = np.zeros(n)
    comp = np.zeros(n)
    sign = 1.0
    work = 0
    for r in range(TERM_CAP):
        with np.errstate(over="ignore"):
            term = sign * np.exp(logm)
        if not np.all(np.isfinite(term)):
            raise NonconvergenceError(
                f"k-Struve term overflow at r = {r} (k={k}, nu={params.nu}, c={c})"
            )
        # Neumaier compensated accumulation
        t = s + term
        comp += np.where(np.abs(s) >= np.abs(term), (s - t) + term, (term - t) + s)
        s = t
        work += idx.size
        partial = s + comp

        lr = base + _log_ratio(r, q)
        logm = logm + lr
        with np.errstate(over="ignore"):
            nxt = np.exp(logm)
        if c > 0:
            # alternating: remainder bounded by the first omitted term once
            # the magnitudes decrease
            done = (lr < 0) & (nxt <= tol * np.maximum(1.0, np.abs(partial)))
            err = nxt
        else:
            q_next = np.exp(base + _log_ratio(r + 1, q))
            with np.errstate(divide="ignore"):
                err = nxt / (1.0 - q_next)
            done = (q_next < 0.5) & (err <= tol * np.abs(partial))
        if done.any():
            values[idx[done]] = partial[done]
            errs[idx[done]] = err[done]
            keep = ~done
            idx, s, comp, logm, base = idx[keep], s[keep], comp[keep], logm[keep], base[keep]
            if idx.size == 0:
                return values.reshape(shape), errs.reshape(shape), work
        sign *= step_sign
    raise NonconvergenceError(
        f"k-Struve series did not converge within {TERM_CAP} terms "
        f"(k={k}, nu={params.nu}, c={c}, max x={float(np.max(x))})"
    )


def eval_k_struve(params: KStruveParams, x: float, tol: float = 1e-12) -> EvalResult:
    """Evaluate S^k_{nu,c}(x) to absolute accuracy ``tol * max(1, |S|)``.

    ``x = 0`` gives the limit of the leading power. Negative ``x`` is only
    accepted when nu/k + 1 is a non-negative integer, so every power of x in
    the series is an integer power.
    """
    if not 0 < tol < 1:
        raise ValueError(f"tol must lie in (0, 1), got {tol!r}")
    x = float(x)
    p = params.power
    p_is_int = abs(p - round(p)) <= 1e-12 and round(p) >= 0
    if x == 0:
        if abs(p) <= 1e-12:
            return EvalResult(math.exp(params.log_leading_coefficient()), 0.0, 1)
        if p > 0:
            return EvalResult(0.0, 0.0, 1)
        raise DomainError(f"S diverges at x = 0 when nu/k + 1 = {p!r} < 0")
    if x < 0:
        if not p_is_int:
            raise DomainError(f"x = {x!r} < 0 needs integer nu/k + 1, got {p!r}")
        res = eval_k_struve(params, -x, tol)
        return EvalResult(-res.value if round(p) % 2 else res.value, res.err_estimate, res.work)
    values, errs, work = k_struve_array(params, np.array([x]), tol)
    return EvalResult(float(values[0]), float(errs[0]), work)


def trig_closed_form(kind: TrigKind, k: float, x):
    """Elementary value 1-cos(y), cosh(y)-1, sin(y) or sinh(y) with y = gamma x / sqrt(k).

    The cosine forms use half-angle identities to avoid cancellation at small y.
    Accepts scalars or arrays.
    """
    if not k > 0:
        raise ValueError(f"k must be positive, got {k!r}")
    y = kind.gamma * np.asarray(x, dtype=float) / math.sqrt(k)
    if kind.kind is Trig.ONE_MINUS_COS:
        out = 2.0 * np.sin(0.5 * y) ** 2
    elif kind.kind is Trig.COSH_MINUS_ONE:
        out = 2.0 * np.sinh(0.5 * y) ** 2
    elif kind.kind is Trig.SIN:
        out = np.sin(y)
    else:
        out = np.sinh(y)
    return float(out) if np.ndim(out) == 0 else out


def trig_struve_factor(kind: TrigKind, k: float, x):
    """Multiplier m(x) with  elementary(x) = m(x) * S^k_{nu,c}(x).

    gamma^2 sqrt(pi x / 2) for the cosine pair, gamma sqrt(pi x / (2k)) for
    the sine pair.
    """
    x = np.asarray(x, dtype=float)
    g = kind.gamma
    if kind.kind in (Trig.ONE_MINUS_COS, Trig.COSH_MINUS_ONE):
        out = g * g * np.sqrt(math.pi * x / 2)
    else:
        out = g * np.sqrt(math.pi * x / (2 * k))
    return float(out) if np.ndim(out) == 0 else out


def struve_via_trig(kind: TrigKind, k: float, x: float) -> float:
    """S^k value implied by inverting the elementary identity for ``kind``."""
    if not x > 0:
        raise DomainError("struve_via_trig is undefined at x <= 0 (zero prefactor)")
    if kind.gamma == 0:
        raise DomainError("struve_via_trig needs gamma != 0")
    return trig_closed_form(kind, k, x) / trig_struve_factor(kind, k, x)
