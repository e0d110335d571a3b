import math

import pytest

from pathstruve import (
    CaseId,
    KStruveParams,
    PathwayParams,
    TheoremCase,
    lhs_quadrature,
    pathway_power_closed,
    rhs_as_printed,
    rhs_corrected,
    verify,
)
from pathstruve.foxwright import delta
from pathstruve.identities import closed_form, default_grid, grid_points, single_term_reduction

# 30-digit mpmath quadrature of the pathway left sides at eta=1, alpha=0, a=1, x=1
LHS_TH1_K1_NU1_C1_RHO1 = 0.01721945947573518743693692
LHS_TH4_K1_G1_RHO1 = 0.1585290151921034933474977

P0 = PathwayParams(1.0, 0.0, 1.0)


def th1(nu=1.0, c=1.0, k=1.0, rho=1.0, params=P0, cid=CaseId.TH1):
    return TheoremCase(cid, params, rho, struve=KStruveParams(k, nu, c))


def trig(cid, gamma=1.0, k=1.0, rho=1.0, params=P0):
    return TheoremCase(cid, params, rho, gamma_scale=gamma, k=k)


def test_th1_lhs_pinned():
    res = lhs_quadrature(th1(), 1.0, 1e-12)
    assert res.value == pytest.approx(LHS_TH1_K1_NU1_C1_RHO1, rel=1e-11)


def test_th4_corrected_pinned():
    case = trig(CaseId.TH4)
    lhs = lhs_quadrature(case, 1.0, 1e-12).value
    assert lhs == pytest.approx(LHS_TH4_K1_G1_RHO1, rel=1e-12)
    assert rhs_corrected(case, 1.0).value == pytest.approx(lhs, rel=1e-8)


def test_th1_printed_transcription():
    case = th1(nu=0.6, c=0.8, k=2.0, rho=1.5, params=PathwayParams(0.5, -0.5, 2.0))
    form = closed_form(case, 1.7, printed=True)
    q, mu, A = 0.3, 0.5 / 1.5, 2.0 * 1.5
    assert form.spec.upper == tuple(sorted([(1.5 + q + 1, 2.0), (1.0, 1.0)], key=lambda p: (p[1], p[0])))
    assert sorted(form.spec.lower) == sorted([(1.5 + q + mu + 2, 2.0), (q + 1.5, 1.0), (1.5, 1.0)])
    assert form.z == pytest.approx(-0.8 * 1.7**2 / (4 * 2.0 * A**2), rel=1e-15)


def test_th2_printed_prefactor():
    case = trig(CaseId.TH2, gamma=0.7, k=2.0, rho=1.2, params=PathwayParams(2.0, 0.5, 0.5))
    form = closed_form(case, 1.3, printed=True)
    mu, A = 4.0, 0.25
    expected = math.sqrt(math.pi) * 0.7 / 4.0 * 1.3 ** (2 + 1.2 + 2) / (4 * A ** (1.2 + 2)) * math.gamma(1 + mu)
    assert form.prefactor == pytest.approx(expected, rel=1e-14)


def test_printed_and_corrected_th1_agree():
    for cid in (CaseId.TH1, CaseId.COR1):
        case = th1(nu=-0.4, c=-1.0, rho=0.6, params=PathwayParams(2.0, -0.5, 0.5), cid=cid)
        p, c = rhs_as_printed(case, 2.0), rhs_corrected(case, 2.0)
        assert abs(p.value - c.value) <= p.err_estimate + c.err_estimate


def test_th5_is_th4_with_flipped_argument():
    f4 = closed_form(trig(CaseId.TH4, gamma=0.5, k=2.0), 1.0, printed=False)
    f5 = closed_form(trig(CaseId.TH5, gamma=0.5, k=2.0), 1.0, printed=False)
    assert f5.z == -f4.z and f5.spec == f4.spec and f5.prefactor == f4.prefactor


def test_corollary_is_theorem_at_k1():
    for th, cor in [(CaseId.TH2, CaseId.COR2), (CaseId.TH3, CaseId.COR3), (CaseId.TH4, CaseId.COR4)]:
        a, b = trig(th, gamma=0.5), trig(cor, gamma=0.5)
        assert rhs_corrected(a, 1.5).value == rhs_corrected(b, 1.5).value
        assert rhs_as_printed(a, 1.5).value == rhs_as_printed(b, 1.5).value
    assert rhs_as_printed(th1(), 2.0).value == rhs_as_printed(th1(cid=CaseId.COR1), 2.0).value


def test_corollaries_pin_k():
    with pytest.raises(ValueError):
        trig(CaseId.COR2, k=2.0)
    with pytest.raises(ValueError):
        th1(k=2.0, cid=CaseId.COR1)


@pytest.mark.parametrize("cid", list(CaseId))
def test_specs_are_entire(cid):
    case, x = next(grid_points(cid, default_grid(cid)))
    for printed in (True, False):
        assert delta(closed_form(case, x, printed).spec) == 1


def test_c_zero_reduces_to_single_term():
    case = th1(nu=0.5, c=0.0, k=2.0, rho=0.6, params=PathwayParams(0.5, 0.5, 1.0))
    lhs = lhs_quadrature(case, 2.0, 1e-12).value
    expected = single_term_reduction(case, 2.0)
    assert lhs == pytest.approx(expected, rel=1e-10)
    # beta = rho + nu/k + 1 in the power rule
    # Gamma_2(nu + 3k/2) = Gamma_2(3.5) = 2^(3/4) Gamma(7/4)
    lead = 1 / (2**1.25 * 2**0.75 * math.gamma(1.75) * math.gamma(1.5))
    assert expected == pytest.approx(
        lead * pathway_power_closed(case.params, 0.6 + 1.25, 2.0), rel=1e-14
    )


def test_gamma_to_zero_vanishes():
    res = lhs_quadrature(trig(CaseId.TH2, gamma=1e-8), 1.0)
    assert abs(res.value) < 1e-15


def test_verify_empty_grid():
    grid = default_grid(CaseId.TH2)
    grid["x"] = []
    with pytest.raises(ValueError):
        verify(CaseId.TH2, grid)


def test_verify_small_grid_statuses():
    small = {"eta": [1.0], "alpha": [0.0], "a": [1.0], "rho": [1.0], "x": [1.0], "k": [1.0]}
    rep = verify(CaseId.TH1, dict(small, nu_over_k=[0.5], c=[1.0]))
    assert rep.status == "CONFIRMED" and rep.n_points == 1
    # at gamma = k = 1 the printed Theorem 2 coincides with the corrected one
    assert verify(CaseId.TH2, dict(small, gamma=[1.0])).status == "CONFIRMED"
    rep = verify(CaseId.TH2, dict(small, gamma=[0.5]))
    assert rep.status == "PRINTED_MISMATCH"
    assert rep.max_rel_err_printed > 1e-3
    # printed prefactor gamma/k^2 vs gamma^2/k: off by 1/(gamma k)
    case = trig(CaseId.TH2, gamma=0.5, k=2.0)
    ratio = rhs_as_printed(case, 1.0).value / rhs_corrected(case, 1.0).value
    assert ratio == pytest.approx(1.0, rel=1e-14)
    case = trig(CaseId.TH2, gamma=0.5, k=1.0)
    assert rhs_as_printed(case, 1.0).value / rhs_corrected(case, 1.0).value == pytest.approx(2.0, rel=1e-14)


def test_verify_records_failures():
    small = {"eta": [1.0], "alpha": [0.0], "a": [1.0], "rho": [1.0], "x": [1.0, 1e6], "k": [1.0]}
    rep = verify(CaseId.TH1, dict(small, nu_over_k=[0.5], c=[-1.0]))
    assert rep.status == "FAIL"
    assert len(rep.failures) == 1 and rep.failures[0]["point"]["x"] == 1e6
