"""Pathway integrals of t^(rho-1) times S^k (and its trig/hyperbolic special
cases) in closed Fox-Wright form, and a harness that checks them against
quadrature.

Each case has two right-hand sides:

* ``rhs_as_printed`` -- the printed closed form, copied verbatim, misprints and
  all;
* ``rhs_corrected`` -- the form re-derived term by term from the power rule
  P[t^(beta-1)] and Gamma_k(g) = k^(g/k - 1) Gamma(g/k).

The two agree for the k-Struve case. For the trig/hyperbolic cases they do not,
and ``verify`` reports by how much.
"""

from __future__ import annotations

import enum
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import EvaluationError
from .foxwright import FoxWrightSpec, delta, eval_fox_wright
from .kstruve import KStruveParams, Trig, TrigKind, k_struve_array, trig_closed_form
from .pathway import PathwayParams, pathway_integral, pathway_power_closed
from .result import EvalResult

SQRT_PI = math.sqrt(math.pi)


class CaseId(enum.Enum):
    TH1 = "th1"
    COR1 = "cor1"
    TH2 = "th2"
    COR2 = "cor2"
    TH3 = "th3"
    COR3 = "cor3"
    TH4 = "th4"
    COR4 = "cor4"
    TH5 = "th5"
    COR5 = "cor5"

    @property
    def is_corollary(self) -> bool:
        return self.value.startswith("cor")

    @property
    def theorem(self) -> "CaseId":
        """The theorem this case specialises (itself for theorems)."""
        return CaseId("th" + self.value[-1])

    @property
    def trig(self) -> Trig | None:
        return _TRIG_OF.get(self.theorem)


_TRIG_OF = {
    CaseId.TH2: Trig.ONE_MINUS_COS,
    CaseId.TH3: Trig.COSH_MINUS_ONE,
    CaseId.TH4: Trig.SIN,
    CaseId.TH5: Trig.SINH,
}


# Where the printed forms go wrong, keyed by case family; attached to
# PRINTED_MISMATCH reports.
PRINTED_DEVIATIONS = {
    CaseId.TH2: "prefactor sqrt(pi) gamma/k^2 should be sqrt(pi) gamma^2/k",
    CaseId.TH3: "left side should be cosh(gamma t/sqrt(k)) - 1; prefactor gamma/k^2 should be gamma^2/k",
    CaseId.TH4: "[a(1-alpha)]^(rho+1/2) should divide as [a(1-alpha)]^(rho+1); "
    "Psi pairs (rho+1/2, 2) and (rho+eta/(1-alpha)+3/2, 2) should be (rho+1, 2) and (rho+eta/(1-alpha)+2, 2)",
}
PRINTED_DEVIATIONS[CaseId.TH5] = PRINTED_DEVIATIONS[CaseId.TH4]


class Status(enum.Enum):
    CONFIRMED = "CONFIRMED"
    PRINTED_MISMATCH = "PRINTED_MISMATCH"
    FAIL = "FAIL"


@dataclass(frozen=True)
class TheoremCase:
    """One parameter point of one theorem or corollary.

    TH1/COR1 take ``struve``; the trig families take ``gamma_scale`` and ``k``.
    Corollaries pin k = 1.
    """

    case_id: CaseId
    params: PathwayParams
    rho: float
    struve: KStruveParams | None = None
    gamma_scale: float | None = None
    k: float = 1.0

    def __post_init__(self):
        if not self.rho > 0:
            raise ValueError(f"rho must be positive, got {self.rho!r}")
        if self.case_id.theorem is CaseId.TH1:
            if self.struve is None:
                raise ValueError("TH1/COR1 need k-Struve parameters")
            object.__setattr__(self, "k", self.struve.k)
        else:
            if self.gamma_scale is None or not math.isfinite(self.gamma_scale):
                raise ValueError(f"{self.case_id.name} needs a finite gamma_scale")
            if not self.k > 0:
                raise ValueError(f"k must be positive, got {self.k!r}")
        if self.case_id.is_corollary and self.k != 1.0:
            raise ValueError(f"{self.case_id.name} fixes k = 1, got k = {self.k!r}")

    def point(self) -> dict:
        """Flat parameter record for reports."""
        out = {
            "eta": self.params.eta,
            "alpha": self.params.alpha,
            "a": self.params.a,
            "rho": self.rho,
            "k": self.k,
        }
        if self.struve is not None:
            out.update(nu=self.struve.nu, c=self.struve.c)
        else:
            out["gamma"] = self.gamma_scale
        return out


# ---------------------------------------------------------------- left side


def _integrand(case: TheoremCase, printed: bool, series_tol: float, err_box: list):
    rho = case.rho
    trig = case.case_id.trig
    if trig is None:
        sp = case.struve

        def f(t):
            vals, errs, _ = k_struve_array(sp, t, series_tol)
            err_box[0] = max(err_box[0], float(np.max(errs, initial=0.0)))
            return np.power(t, rho - 1.0) * vals

        return f

    kind = TrigKind(trig, case.gamma_scale)
    if printed and trig is Trig.COSH_MINUS_ONE:
        # the printed left side has cosh without the "-1"
        g = case.gamma_scale / math.sqrt(case.k)
        return lambda t: np.power(t, rho - 1.0) * np.cosh(g * t)
    return lambda t: np.power(t, rho - 1.0) * trig_closed_form(kind, case.k, t)


def lhs_quadrature(
    case: TheoremCase, x: float, tol: float = 1e-9, printed: bool = False
) -> EvalResult:
    """P[t^(rho-1) g(t)](x) by quadrature, with g the case's S^k or elementary factor.

    ``printed=True`` integrates the left side exactly as printed, which only
    differs for the cosh family. Series integrands run at ``tol / 10``; their
    truncation error is bounded by max_err * P[t^(rho-1)](x) and added to the
    estimate.
    """
    series_tol = tol / 10
    err_box = [0.0]
    f = _integrand(case, printed, series_tol, err_box)
    res = pathway_integral(case.params, f, x, tol)
    extra = 0.0
    if err_box[0] > 0:
        extra = err_box[0] * pathway_power_closed(case.params, case.rho, x)
    return EvalResult(res.value, res.err_estimate + extra, res.work)


# --------------------------------------------------------------- right side


@dataclass(frozen=True)
class ClosedForm:
    """prefactor * pPsi_q[spec | z]."""

    prefactor: float
    spec: FoxWrightSpec
    z: float


def _common(case: TheoremCase, x: float):
    mu = case.params.mu
    A = case.params.scale
    return mu, A, math.gamma(1.0 + mu)


def _th1_form(case: TheoremCase, x: float) -> ClosedForm:
    eta, rho, k = case.params.eta, case.rho, case.k
    q = case.struve.nu / k
    mu, A, gmu = _common(case, x)
    pref = x**eta * (x / A) ** (rho + q + 1) * gmu / (k ** (q + 0.5) * 2 ** (q + 1))
    spec = FoxWrightSpec(
        upper=((rho + q + 1, 2), (1, 1)),
        lower=((rho + q + mu + 2, 2), (q + 1.5, 1), (1.5, 1)),
    )
    z = -case.struve.c * x * x / (4 * k * A * A)
    return ClosedForm(pref, spec, z)


def _cos_family_form(case: TheoremCase, x: float, printed: bool) -> ClosedForm:
    eta, rho, k, g = case.params.eta, case.rho, case.k, case.gamma_scale
    mu, A, gmu = _common(case, x)
    scale = g / (k * k) if printed else g * g / k
    pref = SQRT_PI * scale * x ** (eta + rho + 2) / (4 * A ** (rho + 2)) * gmu
    spec = FoxWrightSpec(
        upper=((rho + 2, 2), (1, 1)),
        lower=((rho + 3 + mu, 2), (2, 1), (1.5, 1)),
    )
    sign = -1.0 if case.case_id.trig is Trig.ONE_MINUS_COS else 1.0
    z = sign * g * g * x * x / (4 * k * A * A)
    return ClosedForm(pref, spec, z)


def _sin_family_form(case: TheoremCase, x: float, printed: bool, reading: str) -> ClosedForm:
    eta, rho, k, g = case.params.eta, case.rho, case.k, case.gamma_scale
    mu, A, gmu = _common(case, x)
    sign = -1.0 if case.case_id.trig is Trig.SIN else 1.0
    z = sign * g * g * x * x / (4 * k * A * A)
    head = g * math.sqrt(math.pi / k) * x ** (rho + eta + 1) / 2 * gmu
    if printed:
        if reading == "multiplied":
            pref = head * A ** (rho + 0.5)
        elif reading == "divided":
            pref = head / A ** (rho + 0.5)
        else:
            raise ValueError(f"reading must be 'multiplied' or 'divided', got {reading!r}")
        spec = FoxWrightSpec(upper=((rho + 0.5, 2),), lower=((rho + mu + 1.5, 2), (1.5, 1)))
    else:
        pref = head / A ** (rho + 1)
        spec = FoxWrightSpec(upper=((rho + 1, 2),), lower=((rho + mu + 2, 2), (1.5, 1)))
    return ClosedForm(pref, spec, z)


def closed_form(
    case: TheoremCase, x: float, printed: bool, reading: str = "multiplied"
) -> ClosedForm:
    """Prefactor, Fox-Wright spec and argument of a case's right side.

    Corollaries go through the theorem path with k = 1. ``reading`` picks how
    the [a(1-alpha)]^(rho+1/2) factor of the printed sine/sinh displays is
    applied.
    """
    trig = case.case_id.trig
    if trig is None:
        return _th1_form(case, x)
    if trig in (Trig.ONE_MINUS_COS, Trig.COSH_MINUS_ONE):
        return _cos_family_form(case, x, printed)
    return _sin_family_form(case, x, printed, reading)


def _eval_closed(form: ClosedForm, tol: float) -> EvalResult:
    d = delta(form.spec)
    assert d > -1, d
    psi = eval_fox_wright(form.spec, form.z, tol)
    return EvalResult(form.prefactor * psi.value, abs(form.prefactor) * psi.err_estimate, psi.work)


def rhs_as_printed(
    case: TheoremCase, x: float, tol: float = 1e-9, reading: str = "multiplied"
) -> EvalResult:
    """Right side exactly as printed."""
    return _eval_closed(closed_form(case, x, True, reading), tol)


def rhs_corrected(case: TheoremCase, x: float, tol: float = 1e-9) -> EvalResult:
    """Right side re-derived from the power rule."""
    return _eval_closed(closed_form(case, x, False), tol)


def single_term_reduction(case: TheoremCase, x: float) -> float:
    """Exact value when the series argument vanishes (c = 0 or gamma = 0).

    For TH1 with c = 0 only the r = 0 term of S^k survives, leaving the power
    rule at beta = rho + nu/k + 1; for gamma = 0 the trig factor vanishes.
    """
    if case.case_id.trig is not None:
        if case.gamma_scale != 0:
            raise ValueError("single-term reduction needs gamma = 0")
        return 0.0
    sp = case.struve
    if sp.c != 0:
        raise ValueError("single-term reduction needs c = 0")
    beta = case.rho + sp.power
    lead = math.exp(sp.log_leading_coefficient() - sp.power * math.log(2.0))
    return lead * pathway_power_closed(case.params, beta, x)


# --------------------------------------------------------------- the harness

_COMMON_DEFAULT = {
    "eta": [0.5, 1.0, 2.0],
    "alpha": [-0.5, 0.0, 0.5],
    "a": [0.5, 1.0],
    "rho": [0.6, 1.0, 2.0],
    "x": [0.5, 1.0, 2.0],
}
_COMMON_DENSE = {
    "eta": [0.25, 0.5, 1.0, 1.5, 2.0, 3.0],
    "alpha": [-1.0, -0.5, 0.0, 0.25, 0.5, 0.75],
    "a": [0.5, 1.0, 2.0],
    "rho": [0.3, 0.6, 1.0, 2.0, 3.5],
    "x": [0.25, 0.5, 1.0, 2.0, 3.0],
}


def default_grid(case_id: CaseId, dense: bool = False) -> dict:
    """Parameter lists swept by ``verify``.

    TH1 sweeps nu as multiples of k ({-0.4, 0.5, 1}) and c; the trig families
    sweep gamma. Theorems also sweep k, corollaries hold it at 1.
    """
    grid = dict(_COMMON_DENSE if dense else _COMMON_DEFAULT)
    ks = [0.5, 1.0, 2.0, 3.0] if dense else [0.5, 1.0, 2.0]
    grid["k"] = [1.0] if case_id.is_corollary else ks
    if case_id.trig is None:
        grid["nu_over_k"] = [-0.4, 0.5, 1.0] + ([2.0] if dense else [])
        grid["c"] = [-1.0, 0.5, 1.0] + ([-0.5, 2.0] if dense else [])
    else:
        grid["gamma"] = [0.5, 1.0] + ([0.25, 1.5] if dense else [])
    return grid


_AXES = ("eta", "alpha", "a", "rho", "x", "k")


def grid_points(case_id: CaseId, grid: dict):
    """Yield (TheoremCase, x) for every point of the Cartesian grid."""
    extra = ("nu_over_k", "c") if case_id.trig is None else ("gamma",)
    axes = _AXES + extra
    missing = [ax for ax in axes if not grid.get(ax)]
    if missing:
        raise ValueError(f"grid for {case_id.name} has empty or missing axes: {missing}")
    for vals in itertools.product(*(grid[ax] for ax in axes)):
        p = dict(zip(axes, vals))
        params = PathwayParams(p["eta"], p["alpha"], p["a"])
        if case_id.trig is None:
            sp = KStruveParams(p["k"], p["nu_over_k"] * p["k"], p["c"])
            case = TheoremCase(case_id, params, p["rho"], struve=sp)
        else:
            case = TheoremCase(case_id, params, p["rho"], gamma_scale=p["gamma"], k=p["k"])
        yield case, p["x"]


@dataclass
class VerificationReport:
    case: str
    grid: dict
    n_points: int
    tolerance: float
    max_rel_err_printed: float
    max_rel_err_corrected: float
    worst_point: dict | None
    worst_point_printed: dict | None
    status: str
    printed_reading: str | None = None
    printed_deviation: str | None = None
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def _rel(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs))


def _check_point(args):
    """Per-point discrepancies: corrected, printed (per reading)."""
    case, x, quad_tol, rhs_tol = args
    try:
        lhs = lhs_quadrature(case, x, quad_tol).value
        out = {"corrected": _rel(lhs, rhs_corrected(case, x, rhs_tol).value)}
        if case.case_id.trig is Trig.COSH_MINUS_ONE:
            lhs_p = lhs_quadrature(case, x, quad_tol, printed=True).value
        else:
            lhs_p = lhs
        if case.case_id.trig in (Trig.SIN, Trig.SINH):
            for reading in ("multiplied", "divided"):
                out[reading] = _rel(lhs_p, rhs_as_printed(case, x, rhs_tol, reading).value)
        else:
            out["multiplied"] = _rel(lhs_p, rhs_as_printed(case, x, rhs_tol).value)
        return out
    except (EvaluationError, ValueError) as exc:
        return {"error": f"{type(exc).__name__}: {exc}"}


def verify(
    case_id: CaseId | str,
    grid: dict | None = None,
    tol: float = 1e-6,
    quad_tol: float = 1e-9,
    workers: int = 1,
) -> VerificationReport:
    """Compare quadrature left sides with both right sides over a grid.

    Status is CONFIRMED when corrected and printed forms both stay within
    ``tol``, PRINTED_MISMATCH when only the corrected form does, FAIL
    otherwise (including any point that could not be evaluated).
    """
    case_id = CaseId(case_id)
    if grid is None:
        grid = default_grid(case_id)
    points = list(grid_points(case_id, grid))
    if not points:
        raise ValueError("verification grid is empty")

    jobs = [(case, x, quad_tol, quad_tol) for case, x in points]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_check_point, jobs, chunksize=64))
    else:
        results = [_check_point(j) for j in jobs]

    readings = ("multiplied", "divided") if case_id.trig in (Trig.SIN, Trig.SINH) else ("multiplied",)
    worst_c, worst_c_at = -1.0, None
    worst_p = {r: (-1.0, None) for r in readings}
    failures = []
    for (case, x), res in zip(points, results):
        where = dict(case.point(), x=x)
        if "error" in res:
            failures.append({"point": where, "error": res["error"]})
            continue
        if res["corrected"] > worst_c:
            worst_c, worst_c_at = res["corrected"], where
        for r in readings:
            if res[r] > worst_p[r][0]:
                worst_p[r] = (res[r], where)
    best = min(readings, key=lambda r: worst_p[r][0])
    max_p, worst_p_at = worst_p[best]

    if failures or not worst_c <= tol:
        status = Status.FAIL
    elif max_p <= tol:
        status = Status.CONFIRMED
    else:
        status = Status.PRINTED_MISMATCH
    return VerificationReport(
        case=case_id.value,
        grid={k: list(v) for k, v in grid.items()},
        n_points=len(points),
        tolerance=tol,
        max_rel_err_printed=max(max_p, 0.0),
        max_rel_err_corrected=max(worst_c, 0.0),
        worst_point=worst_c_at,
        worst_point_printed=worst_p_at,
        status=status.value,
        printed_reading=best if len(readings) > 1 else None,
        printed_deviation=(
            PRINTED_DEVIATIONS.get(case_id.theorem) if status is Status.PRINTED_MISMATCH else None
        ),
        failures=failures,
    )
