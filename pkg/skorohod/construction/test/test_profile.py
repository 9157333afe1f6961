import numpy as np
from skorohod.measures import BuiltinMeasure, DiscreteMeasure, QuantileFn
from skorohod.construction import (build_profile, cosine_coefficients,
                                   conjugate_series, refined_series)
from skorohod.utils.exceptions import MeanNotZero, UnboundedValue
from numpy.testing import (assert_, assert_equal, assert_almost_equal,
                           assert_array_almost_equal, assert_raises,
                           assert_raises_regex)


def _uniform():
    return BuiltinMeasure("uniform", {"a": -1.0, "b": 1.0})


def test_profile_is_even():
    profile = build_profile(_uniform().quantile(), 1024)
    assert_equal(profile.n_grid, 1024)
    assert_array_almost_equal(profile.phi_values,
                              profile.phi_values[::-1], decimal=15)
    assert_(np.all(np.diff(profile.phi_values[512:]) > 0.0))
    assert_(not profile.support_unbounded)


def test_profile_at_quarter_period():
    profile = build_profile(_uniform().quantile(), 4096)
    j = np.argmin(np.abs(profile.theta - 0.5 * np.pi))
    assert_almost_equal(profile.phi_values[j], 0.0, decimal=3)
    assert_almost_equal(profile.phi_values[-1], 1.0, decimal=3)


def test_profile_grid_size():
    G = _uniform().quantile()
    assert_raises(ValueError, build_profile, G, 512)
    assert_raises(ValueError, build_profile, G, 3000)


def test_profile_jumps():
    spec = DiscreteMeasure([[-1.0, 0.5], [1.0, 0.5]])
    profile = build_profile(spec.quantile(), 1024)
    assert_array_almost_equal(np.sort(profile.jumps),
                              [-0.5 * np.pi, 0.5 * np.pi])


def test_profile_unbounded_value():
    G = QuantileFn(lambda u: np.where(u > 0.9, np.inf, u - 0.5),
                   lambda u: 0.5 * u ** 2 - 0.5 * u, -0.5, np.inf)
    assert_raises(UnboundedValue, build_profile, G, 1024)


def test_two_point_coefficients_exact():
    spec = BuiltinMeasure("two_point", {"c": 1.0})
    profile = build_profile(spec.quantile(), 2048)
    a = cosine_coefficients(profile, 64)
    n = np.arange(1, 65)
    assert_array_almost_equal(a, -4.0 * np.sin(0.5 * np.pi * n) / (n * np.pi),
                              decimal=10)


def test_uniform_coefficients():
    profile = build_profile(_uniform().quantile(), 4096)
    a = cosine_coefficients(profile, 20)
    n = np.arange(1, 21)
    expected = np.where(n % 2 == 1, -8.0 / (np.pi ** 2 * n ** 2), 0.0)
    assert_array_almost_equal(a, expected, decimal=5)


def test_coefficients_diagnostics():
    profile = build_profile(_uniform().quantile(), 1024)
    a, info = cosine_coefficients(profile, 100, return_diagnostics=True)
    assert_equal(len(a), 100)
    assert_(abs(info["a0"]) < 1e-12)
    assert_(info["sine_residual"] < 1e-12)


def test_coefficients_need_centered_profile():
    spec = BuiltinMeasure("uniform", {"a": 0.0, "b": 2.0})
    profile = build_profile(spec.quantile(), 1024)
    assert_raises(MeanNotZero, cosine_coefficients, profile, 10)


def test_coefficients_order():
    profile = build_profile(_uniform().quantile(), 1024)
    assert_raises_regex(ValueError, "N <= M / 2", cosine_coefficients,
                        profile, 513)
    assert_raises(ValueError, cosine_coefficients, profile, 0)
    a = cosine_coefficients(profile, 512)
    assert_equal(a[-1], 0.0)


def test_conjugate_of_cosine():
    profile = build_profile(_uniform().quantile(), 1024)
    theta = profile.theta
    y, x = conjugate_series([1.0], theta, return_real=True)
    assert_array_almost_equal(y, np.sin(theta), decimal=12)
    assert_array_almost_equal(x, np.cos(theta), decimal=12)
    y = conjugate_series([0.0, 0.0, 2.0], theta)
    assert_array_almost_equal(y, 2.0 * np.sin(3.0 * theta), decimal=12)


def test_conjugate_is_odd():
    profile = build_profile(_uniform().quantile(), 2048)
    a = cosine_coefficients(profile, 512)
    y = conjugate_series(a, profile.theta)
    assert_equal(y + y[::-1], np.zeros(2048))


def test_conjugate_needs_uniform_grid():
    theta = np.sort(np.random.RandomState(0).uniform(-np.pi, np.pi, 64))
    assert_raises(ValueError, conjugate_series, [1.0], theta)
    theta = np.linspace(-np.pi, np.pi, 8, endpoint=False)
    assert_raises(ValueError, conjugate_series, np.ones(8), theta)


def test_refined_series():
    n_points = 256
    theta = -np.pi + 2.0 * np.pi * np.arange(n_points) / n_points
    x = refined_series([0.5, 0.0, -1.0], n_points)
    assert_array_almost_equal(
        x, 0.5 * np.cos(theta) - np.cos(3.0 * theta), decimal=12)


def test_parseval_uniform():
    profile = build_profile(_uniform().quantile(), 16384)
    a = cosine_coefficients(profile, 4096)
    assert_almost_equal(0.5 * np.sum(a ** 2), 1.0 / 3.0, decimal=4)


def test_parseval_converges():
    errors = []
    for N in [256, 512]:
        profile = build_profile(_uniform().quantile(), 4 * N)
        a = cosine_coefficients(profile, N)
        errors.append(abs(0.5 * np.sum(a ** 2) - 1.0 / 3.0))
    assert_(errors[0] / errors[1] >= 1.4)


def test_parseval_two_point():
    spec = BuiltinMeasure("two_point", {"c": 1.0})
    profile = build_profile(spec.quantile(), 16384)
    a = cosine_coefficients(profile, 4096)
    parseval = 0.5 * np.sum(a ** 2)
    assert_(0.99 <= parseval <= 1.01)
    assert_almost_equal(parseval, 1.0 - 4.0 / (np.pi ** 2 * 4096), decimal=6)
