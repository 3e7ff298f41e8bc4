import math

import numpy as np
import pytest
from scipy.integrate import quad

from cpgraphene.errors import QuadratureError
from cpgraphene.quadrature import GAUSS_WEIGHTS, KRONROD_WEIGHTS, NODES, gauss_kronrod


def test_rules_are_exact_for_polynomials():
    lo, hi = -1.0, 1.0
    for d in range(23):
        exact = 0.0 if d % 2 else 2.0 / (d + 1)
        assert KRONROD_WEIGHTS @ NODES ** d == pytest.approx(exact, abs=1e-15)
    for d in range(14):
        exact = 0.0 if d % 2 else 2.0 / (d + 1)
        assert GAUSS_WEIGHTS @ NODES ** d == pytest.approx(exact, abs=1e-15)


@pytest.mark.parametrize("f,a,b", [
    (lambda x: np.exp(-x) * x ** 3, 0.0, 50.0),
    (lambda x: np.sqrt(x), 0.0, 1.0),
    (lambda x: 1.0 / (1.0 + 1e4 * (x - 0.3) ** 2), 0.0, 1.0),
    (lambda x: np.log1p(x) * np.cos(3 * x), 0.0, 10.0),
])
def test_against_scipy(f, a, b):
    ref, _ = quad(f, a, b, epsabs=0, epsrel=1e-12, limit=500)
    val, err = gauss_kronrod(f, [a, b], rtol=1e-10)
    assert val == pytest.approx(ref, rel=1e-9)
    assert abs(val - ref) <= err + 1e-14 * abs(ref)


def test_budget_exhaustion_carries_estimate():
    with pytest.raises(QuadratureError) as exc:
        gauss_kronrod(lambda x: np.sin(1 / x), [1e-6, 1.0], rtol=1e-14, max_intervals=20)
    assert math.isfinite(exc.value.estimate)


def test_bad_breakpoints():
    with pytest.raises(ValueError):
        gauss_kronrod(np.exp, [1.0, 0.0])
