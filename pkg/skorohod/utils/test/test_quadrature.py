import numpy as np
from skorohod.utils.quadrature import (integrate, integrate_sqrt_edges,
                                      cell_masses)
from skorohod.utils.mathext import sech, norm_ppf
from skorohod.utils.exceptions import QuadratureFailure
from numpy.testing import (assert_almost_equal, assert_raises,
                           assert_array_almost_equal)


def test_integrate_polynomial():
    assert_almost_equal(integrate(lambda x: x * x, -1.0, 1.0), 2.0 / 3.0,
                        decimal=12)


def test_integrate_infinite_range():
    assert_almost_equal(integrate(lambda x: float(sech(np.pi * x / 2.0)),
                                  -np.inf, np.inf), 2.0, decimal=9)


def test_integrate_failure_is_reported():
    assert_raises(QuadratureFailure, integrate,
                  lambda x: np.sin(1.0 / x) / x, 1e-12, 1.0, limit=5)


def test_arcsine_normalization_with_edges():
    value = integrate_sqrt_edges(
        lambda x: 1.0 / (np.pi * np.sqrt(1.0 - x * x)), -1.0, 1.0)
    assert_almost_equal(value, 1.0, decimal=9)


def test_single_edge_on_half_line():
    value = integrate_sqrt_edges(
        lambda x: np.exp(-x) / np.sqrt(x), 0.0, np.inf, right=False)
    assert_almost_equal(value, np.sqrt(np.pi), decimal=8)


def test_sech_large_arguments():
    assert_array_almost_equal(sech([0.0, 1000.0, -1000.0]), [1.0, 0.0, 0.0])


def test_norm_ppf():
    assert_almost_equal(norm_ppf(0.975), 1.959963984540054, decimal=12)
    assert_almost_equal(norm_ppf(1e-12), -7.034483825301131, decimal=8)


def test_cell_masses_arcsine():
    nodes = np.linspace(-1.0, 1.0, 2049)
    masses = cell_masses(lambda x: 1.0 / (np.pi * np.sqrt((1.0 - x) *
                                                          (1.0 + x))),
                         nodes, singular=(-1.0, 1.0))
    assert_array_almost_equal(masses, np.diff(np.arcsin(nodes)) / np.pi,
                              decimal=14)
    assert_almost_equal(np.sum(masses), 1.0, decimal=12)


def test_cell_masses_regular_cells():
    nodes = np.array([0.0, 0.5, 2.0])
    assert_array_almost_equal(cell_masses(np.exp, nodes),
                              np.diff(np.exp(nodes)), decimal=14)
    assert_raises(ValueError, cell_masses, np.exp, nodes, (0.0, 0.5))
    assert_raises(QuadratureFailure, cell_masses,
                  lambda x: np.full_like(x, np.nan), nodes)
