import numpy as np
from scipy import stats
from skorohod.analytic_examples import (disk_density, disk_marginal,
                                        strip_density, strip_marginal,
                                        parabola_density, ellipse_density,
                                        ellipse_boundary_density,
                                        hyperbola_density,
                                        hyperbola_boundary_density,
                                        pushforward_density, marginalize,
                                        sech_series_terms, density_curve)
from skorohod.datasets import (make_disk, make_strip, make_ellipse,
                               make_parabola, make_hyperbola)
from skorohod.simulate import euler_exit, wos_exit
from skorohod.utils.mathext import sech
from numpy.testing import (assert_, assert_equal, assert_almost_equal,
                           assert_array_almost_equal, assert_raises)


def test_disk_center_is_uniform():
    curve = disk_density()
    assert_array_almost_equal(curve.values,
                              np.ones(curve.n_points) / (2.0 * np.pi),
                              decimal=12)
    assert_equal(curve.domain, "disk")


def test_disk_off_center():
    curve = disk_density(0.5)
    assert_almost_equal(curve(0.0), 3.0 / (2.0 * np.pi), decimal=12)
    assert_equal(curve.domain, "disk_offcenter")
    assert_almost_equal(disk_density(0.3 + 0.4j).normalization(), 1.0,
                        decimal=9)
    assert_raises(ValueError, disk_density, 1.0)


def test_arcsine_law():
    curve = disk_marginal(0.0, "X")
    x = curve.grid
    assert_array_almost_equal(curve.values,
                              1.0 / (np.pi * np.sqrt(1.0 - x * x)),
                              decimal=10)
    assert_(curve.is_normalized())


def test_swap_identity():
    a = 0.3 + 0.2j
    y = np.linspace(-0.99, 0.99, 199)
    rho_y = disk_marginal(a, "Y")
    rho_x = disk_marginal(-1j * a, "X")
    assert_array_almost_equal(rho_y(y), rho_x(y), decimal=12)
    assert_(rho_y.is_normalized())


def test_strip():
    line = strip_density()
    real_part = strip_marginal()
    assert_almost_equal(line(0.0), 0.25)
    assert_almost_equal(real_part(0.0), 0.5)
    x = np.linspace(0.0, 8.0, 41)
    assert_array_almost_equal(real_part(x), real_part(-x), decimal=15)
    assert_array_almost_equal(real_part(x), 2.0 * line(x), decimal=15)
    assert_(line.is_normalized())
    assert_(real_part.is_normalized())
    assert_almost_equal(strip_density(2.0, "X").normalization(), 1.0,
                        decimal=8)
    assert_raises(ValueError, strip_density, 1.0, "Y")
    assert_raises(ValueError, strip_density, 0.0)


def test_parabola_boundary():
    curve = parabola_density("boundary")
    v = np.linspace(-15.0, 15.0, 301)
    expected = sech(0.25 * np.pi * v) / (4.0 * np.sqrt(0.25 * v * v + 1.0))
    assert_array_almost_equal(curve(v), expected, decimal=14)
    assert_(curve.is_normalized())


def test_parabola_imaginary_part_is_strip_density():
    v = np.linspace(-20.0, 20.0, 401)
    expected = sech(0.25 * np.pi * v) / 4.0
    from_boundary = parabola_density("Y")
    assert_(np.max(np.abs(from_boundary(v) - expected)) < 1e-9)
    # Im((s +- i)^2) = +-2 s
    line = strip_density()
    direct = pushforward_density(line, lambda v: [0.5 * v, -0.5 * v],
                                 lambda s: 2.0 * np.ones_like(s),
                                 (-np.inf, np.inf), "parabola", "Y",
                                 plot_range=(-20.0, 20.0))
    assert_(np.max(np.abs(direct(v) - expected)) < 1e-9)
    assert_(from_boundary.is_normalized())


def test_parabola_real_part():
    curve = parabola_density("X")
    u = np.linspace(-0.99, 40.0, 200)
    expected = (sech(0.5 * np.pi * np.sqrt(u + 1.0)) /
                (2.0 * np.sqrt(u + 1.0)))
    assert_array_almost_equal(curve(u), expected, decimal=12)
    assert_equal(curve(-2.0), 0.0)
    assert_(curve.is_normalized())


def test_sech_series_terms():
    n_terms, bound = sech_series_terms(1.0, 1e-12)
    assert_(bound < 1e-12)
    assert_(n_terms >= 1)
    # the bound for one term less must fail
    if n_terms > 1:
        c = np.pi ** 2 / 2.0
        assert_(4.0 * np.exp(-c * (n_terms - 0.5)) / -np.expm1(-c) >= 1e-12)
    assert_(sech_series_terms(4.0)[0] > n_terms)


def test_ellipse_real_part():
    curve = ellipse_density(1.0, "X")
    assert_(curve.is_normalized())
    assert_(curve.metadata["tail_bound"] < 1e-12)
    u = np.linspace(0.0, 1.5, 31)
    assert_array_almost_equal(curve(u), curve(-u), decimal=14)
    k = np.arange(-20, 21)
    expected = np.sum(sech(0.5 * np.pi * k * np.pi)) / (2.0 * np.cosh(1.0))
    assert_almost_equal(curve(0.0), expected, decimal=12)


def test_ellipse_boundary_through_pushforward():
    R = 0.7
    boundary = ellipse_boundary_density(R)
    assert_(boundary.is_normalized())
    a, b = np.cosh(R), np.sinh(R)

    def upper(u):
        return b * np.sqrt(1.0 - u * u / (a * a))

    def upper_slope(u):
        return -b * u / (a * a * np.sqrt(1.0 - u * u / (a * a)))

    branches = [(upper, upper_slope),
                (lambda u: -upper(u), lambda u: -upper_slope(u))]
    real_part = marginalize(lambda z: boundary(z.real), branches, "X",
                            (-a, a), "ellipse", singular=(-a, a))
    closed_form = ellipse_density(R, "X")
    u = np.linspace(-0.99 * a, 0.99 * a, 101)
    assert_array_almost_equal(real_part(u), closed_form(u), decimal=10)


def test_ellipse_imaginary_part():
    curve = ellipse_density(1.0, "Y")
    assert_(curve.is_normalized())
    v = np.linspace(0.0, 0.95 * np.sinh(1.0), 20)
    assert_array_almost_equal(curve(v), curve(-v), decimal=14)
    assert_raises(ValueError, ellipse_density, -1.0)


def test_hyperbola_marginals():
    delta = 2.5
    rho_y = hyperbola_density(delta, "Y")
    rho_x = hyperbola_density(delta, "X")
    assert_almost_equal(rho_y(0.0), 2.0 / (np.pi * (delta - 1.0)),
                        decimal=14)
    assert_(rho_y.is_normalized())
    assert_(rho_x.is_normalized())
    assert_equal(rho_x(0.5), 0.0)
    assert_raises(ValueError, hyperbola_density, 1.0)


def test_hyperbola_boundary_through_square_map():
    delta = 2.0
    boundary = hyperbola_boundary_density(delta)
    assert_(boundary.is_normalized())
    y = np.linspace(-8.0, 8.0, 161)
    mass = boundary.mass_density(y)
    assert_array_almost_equal(mass, hyperbola_density(delta, "Y")(y),
                              decimal=12)


def test_density_curve_lookup():
    assert_equal(density_curve("disk", "X").marginal, "X")
    assert_equal(density_curve("disk_offcenter", "boundary",
                               start=0.5).domain, "disk_offcenter")
    assert_almost_equal(density_curve("strip", "X")(0.0), 0.5)
    assert_equal(density_curve("ellipse", "X", R=2.0).metadata["R"], 2.0)
    assert_equal(density_curve("hyperbola", "Y", delta=3.0)
                 .metadata["delta"], 3.0)
    assert_raises(ValueError, density_curve, "annulus")
    assert_raises(ValueError, density_curve, "parabola", "Z")


def test_arcsine_matches_simulation():
    disk = make_disk()
    samples = euler_exit(disk.curve, 0.0, dt=1e-3, n_paths=2000, seed=11,
                         bridge=True)
    _, pvalue = stats.kstest(samples.exit_x, disk_marginal(0.0, "X").cdf)
    assert_(pvalue > 1e-3)


def test_strip_matches_simulation():
    strip = make_strip(half_width=1.0, length=10.0, vertical=False)
    samples = euler_exit(strip.curve, 0.0, dt=1e-3, n_paths=2000, seed=12,
                         bridge=True)
    assert_(not np.any(samples.frame_exit))
    upper = samples.exit_y > 0.0
    assert_(abs(np.mean(upper) - 0.5) < 4.0 * 0.5 / np.sqrt(2000))
    _, pvalue = stats.kstest(samples.exit_x, strip_marginal().cdf)
    assert_(pvalue > 1e-3)


def _window_pvalue(values, curve, lo=-np.inf, hi=np.inf):
    # law of the exit coordinate given that the path did not reach the frame
    F_lo, F_hi = curve.cdf(lo), curve.cdf(hi)
    _, pvalue = stats.kstest(
        values, lambda x: (curve.cdf(x) - F_lo) / (F_hi - F_lo))
    return pvalue


def test_off_center_disk_matches_simulation():
    disk = make_disk(start=0.3 + 0.4j)
    samples = euler_exit(disk.curve, disk.start, dt=1e-3, n_paths=2000,
                         seed=13, bridge=True)
    _, pvalue = stats.kstest(samples.exit_x,
                             disk_marginal(0.3 + 0.4j, "X").cdf)
    assert_(pvalue > 1e-3)
    _, pvalue = stats.kstest(samples.exit_y,
                             disk_marginal(0.3 + 0.4j, "Y").cdf)
    assert_(pvalue > 1e-3)


def test_ellipse_matches_simulation():
    ellipse = make_ellipse(1.0)
    samples = euler_exit(ellipse.curve, ellipse.start, dt=1e-3,
                         n_paths=2000, seed=14, bridge=True)
    _, pvalue = stats.kstest(samples.exit_x, ellipse_density(1.0, "X").cdf)
    assert_(pvalue > 1e-3)
    _, pvalue = stats.kstest(samples.exit_y, ellipse_density(1.0, "Y").cdf)
    assert_(pvalue > 1e-3)


def test_parabola_matches_simulation():
    parabola = make_parabola("X", X=20.0)
    samples = wos_exit(parabola.curve, parabola.start, n_paths=2000,
                       seed=15)
    assert_(samples.leakage < 0.01)
    inside = ~samples.frame_exit
    assert_(_window_pvalue(samples.exit_x[inside], parabola_density("X"),
                           hi=20.0) > 1e-3)
    Y = 2.0 * np.sqrt(21.0)
    assert_(_window_pvalue(samples.exit_y[inside], parabola_density("Y"),
                           -Y, Y) > 1e-3)

    rotated = make_parabola("Y", X=20.0)
    samples = wos_exit(rotated.curve, rotated.start, n_paths=2000, seed=16)
    inside = ~samples.frame_exit
    assert_(_window_pvalue(samples.exit_x[inside], parabola_density("Y"),
                           -Y, Y) > 1e-3)


def test_hyperbola_matches_simulation():
    hyperbola = make_hyperbola(delta=2.0, X=20.0)
    assert_almost_equal(hyperbola.start, np.sqrt(2.0))
    samples = wos_exit(hyperbola.curve, hyperbola.start, n_paths=2000,
                       seed=17)
    assert_(samples.leakage < 0.01)
    inside = ~samples.frame_exit
    Y = np.sqrt(399.0)
    assert_(_window_pvalue(samples.exit_y[inside],
                           hyperbola_density(2.0, "Y"), -Y, Y) > 1e-3)
    assert_(_window_pvalue(samples.exit_x[inside],
                           hyperbola_density(2.0, "X"), hi=20.0) > 1e-3)
