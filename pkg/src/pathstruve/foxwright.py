"""Generalized Wright (Fox-Wright) function pPsi_q.

    pPsi_q[(a_i, alpha_i); (b_j, beta_j) | z]
        = sum_n prod Gamma(a_i + alpha_i n) / prod Gamma(b_j + beta_j n) * z^n / n!

Terms are assembled from log|Gamma| differences with the sign of every gamma
factor tracked separately. Reciprocal gammas at poles are taken as zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from .errors import ConvergenceConditionError, NonconvergenceError, PoleError
from .result import EvalResult

TERM_CAP = 20_000
_CHUNK = 32
_POLE_TOL = 1e-12


def _pairs(seq):
    out = []
    for pair in seq:
        off, w = (float(v) for v in pair)
        if not (math.isfinite(off) and math.isfinite(w)):
            raise ValueError(f"Fox-Wright pairs must be finite, got {pair!r}")
        out.append((off, w))
    # canonical (weight, offset) order keeps results independent of input order
    return tuple(sorted(out, key=lambda p: (p[1], p[0])))


@dataclass(frozen=True)
class FoxWrightSpec:
    """Upper pairs (a_i, alpha_i) and lower pairs (b_j, beta_j)."""

    upper: tuple = field(default=())
    lower: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "upper", _pairs(self.upper))
        object.__setattr__(self, "lower", _pairs(self.lower))

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    @classmethod
    def from_json(cls, obj: dict) -> "FoxWrightSpec":
        return cls(tuple(map(tuple, obj.get("upper", []))), tuple(map(tuple, obj.get("lower", []))))

    def to_json(self) -> dict:
        return {"upper": [list(p) for p in self.upper], "lower": [list(p) for p in self.lower]}


def delta(spec: FoxWrightSpec) -> float:
    """sum(beta_j) - sum(alpha_i); the series is entire when this exceeds -1."""
    return math.fsum(b for _, b in spec.lower) - math.fsum(a for _, a in spec.upper)


def _near_pole(arg):
    return (arg <= 0) & (np.abs(arg - np.round(arg)) <= _POLE_TOL)


def _log_terms(spec: FoxWrightSpec, n: np.ndarray, log_abs_z: float, z_negative: bool):
    """ln|term_n| and sign(term_n) for a block of indices.

    A lower-gamma pole zeroes the term (sign 0, log -inf).
    """
    logm = n * log_abs_z - special.gammaln(n + 1.0)
    sign = np.where(z_negative & (n % 2 == 1), -1.0, 1.0)
    for a, al in spec.upper:
        arg = a + al * n
        if np.any(_near_pole(arg)):
            bad = int(n[_near_pole(arg)][0])
            raise PoleError(f"upper gamma argument {a} + {al}*{bad} is a pole")
        logm = logm + special.gammaln(arg)
        sign = sign * special.gammasgn(arg)
    for b, be in spec.lower:
        arg = b + be * n
        pole = _near_pole(arg)
        safe = np.where(pole, 1.0, arg)
        logm = logm - special.gammaln(safe)
        sign = sign * np.where(pole, 0.0, special.gammasgn(safe))
    logm = np.where(sign == 0, -np.inf, logm)
    return logm, sign


def eval_fox_wright(spec: FoxWrightSpec, z: float, tol: float = 1e-12) -> EvalResult:
    """Sum the Fox-Wright series at real ``z``.

    Stops once three consecutive terms fall below ``tol * max(1, |partial|)``
    and the geometric tail bound built from the last term ratio does too. The
    reported error is that tail bound.

    Raises
    ------
    ConvergenceConditionError
        If ``delta(spec) <= -1``.
    NonconvergenceError
        If the stopping rule is not met within ``TERM_CAP`` terms.
    """
    if not 0 < tol < 1:
        raise ValueError(f"tol must lie in (0, 1), got {tol!r}")
    d = delta(spec)
    if not d > -1:
        raise ConvergenceConditionError(f"delta = {d!r} <= -1: series is not entire")
    z = float(z)
    if not math.isfinite(z):
        raise ValueError("z must be finite")

    if z == 0:
        logm, sign = _log_terms(spec, np.zeros(1), 0.0, False)
        return EvalResult(float(sign[0] * np.exp(logm[0])), 0.0, 1)

    for b, be in spec.lower:
        if be == 0 and _near_pole(np.array(b)):
            # 1/Gamma(b) = 0 multiplies every term
            return EvalResult(0.0, 0.0, 1)

    log_abs_z = math.log(abs(z))
    terms: list[float] = []
    partial = 0.0
    small_run = 0
    prev_log = -math.inf
    for start in range(0, TERM_CAP, _CHUNK):
        n = np.arange(start, start + _CHUNK, dtype=float)
        logm, sign = _log_terms(spec, n, log_abs_z, z < 0)
        vals = sign * np.exp(logm)
        if not np.all(np.isfinite(vals)):
            raise NonconvergenceError(f"Fox-Wright term overflow near n = {start}")
        for i in range(_CHUNK):
            t = float(vals[i])
            lm = float(logm[i])
            terms.append(t)
            partial += t
            scale = tol * max(1.0, abs(partial))
            mag = abs(t)
            small_run = small_run + 1 if mag <= scale else 0
            # ratios come from log magnitudes so underflowed terms still count;
            # pole-zeroed terms carry no ratio information
            if small_run >= 3 and lm > -math.inf and prev_log > -math.inf:
                r = math.exp(lm - prev_log)
                if r < 1:
                    tail = mag * r / (1.0 - r)
                    if tail <= scale:
                        return EvalResult(math.fsum(terms), tail, len(terms))
            prev_log = lm
    raise NonconvergenceError(f"Fox-Wright series did not converge within {TERM_CAP} terms")
