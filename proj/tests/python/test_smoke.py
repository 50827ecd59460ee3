import math

import pytest

import tropfit


def test_best_approx_solve():
    delta, x = tropfit.best_approx_solve([[0.0], [0.0]], [0.0, 2.0])
    assert delta == pytest.approx(2.0)
    assert x == pytest.approx([1.0])


def test_zero_entries_and_errors():
    delta, x = tropfit.best_approx_solve([[0.0, -math.inf], [-math.inf, 0.0]], [3.0, 5.0])
    assert delta == 0.0
    assert x == [3.0, 5.0]
    with pytest.raises(ValueError):
        tropfit.best_approx_solve([[0.0, 0.0]], [-math.inf])


def test_alternating_solve():
    delta, x, y = tropfit.alternating_solve([[0.0], [0.0]], [[0.0], [1.0]])
    assert delta == pytest.approx(1.0)


def test_min_poly():
    mu, lo, hi = tropfit.min_poly([-1.0, 0.0, 1.0], [-1.0, 1.0, -1.0])
    assert (mu, lo, hi) == pytest.approx((1.0, -2.0, 2.0))
    assert tropfit.min_poly([1.0, 2.0], [0.0, 0.0]) is None


def test_fit_polynomial_reference():
    x, y = tropfit.fixture()
    assert len(x) == 21
    report = tropfit.fit_polynomial(x, y, 2)
    assert report["delta_star"] == pytest.approx(0.4344, abs=1e-3)
    assert report["chebyshev_error"] == pytest.approx(report["delta_star"] / 2)


def test_fit_rational_and_evaluate():
    x, y = tropfit.fixture()
    report = tropfit.fit_rational(x, y, 2, 2)
    assert report["delta_star"] == pytest.approx(0.3099, abs=1e-3)
    values = tropfit.evaluate(report, x)
    worst = max(abs(v - t) for v, t in zip(values, y))
    assert worst == pytest.approx(report["delta_star"] / 2, abs=1e-9)


def test_maxtimes_mode():
    report = tropfit.fit_polynomial([1.0, 2.0, 4.0], [2.0, 8.0, 32.0], 1, mode="maxtimes")
    assert report["numerator"]["exponents"] == pytest.approx([2.0])
    assert report["numerator"]["coefficients"] == pytest.approx([2.0])
    with pytest.raises(ValueError):
        tropfit.fit_polynomial([0.0, 1.0], [1.0, 1.0], 1, mode="maxtimes")


def test_bad_arguments():
    with pytest.raises(ValueError):
        tropfit.fit_polynomial([0.0, 1.0], [0.0], 1)
    with pytest.raises(ValueError):
        tropfit.fit_polynomial([0.0, 1.0], [0.0, 1.0], 3)
