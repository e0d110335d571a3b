import math

import numpy as np
import pytest

from pathstruve.errors import QuadratureError
from pathstruve.quadrature import NODES, W_GAUSS, W_KRONROD, gk21, integrate


def test_weights_sum_to_two():
    assert W_KRONROD.sum() == pytest.approx(2.0, abs=1e-15)
    assert W_GAUSS.sum() == pytest.approx(2.0, abs=1e-15)


@pytest.mark.parametrize("deg", range(0, 32))
def test_kronrod_exact_to_degree_31(deg):
    exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
    assert np.dot(W_KRONROD, NODES**deg) == pytest.approx(exact, abs=2e-15)


@pytest.mark.parametrize("deg", range(0, 20))
def test_gauss_exact_to_degree_19(deg):
    exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
    assert np.dot(W_GAUSS, NODES**deg) == pytest.approx(exact, abs=2e-15)


def test_gk21_batches_intervals():
    k, err, n = gk21(np.exp, np.array([0.0, 1.0]), np.array([1.0, 2.0]))
    assert n == 42
    assert k == pytest.approx([math.e - 1, math.e**2 - math.e], rel=1e-15)


def test_adaptive_sharp_peak():
    f = lambda x: 1.0 / (1e-4 + x * x)
    val, err, _ = integrate(f, -1.0, 1.0, 1e-10)
    assert val == pytest.approx(2 * math.atan(100) * 100, rel=1e-10)
    assert abs(val - 2 * math.atan(100) * 100) <= err


def test_depth_cap():
    with pytest.raises(QuadratureError):
        integrate(lambda x: np.sign(x - 0.1234567), -1.0, 1.0, 1e-14, max_depth=5)
