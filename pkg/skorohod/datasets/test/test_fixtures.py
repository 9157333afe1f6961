import numpy as np
from skorohod.datasets import (make_disk, make_wedge, make_half_plane,
                               make_strip, make_cross, make_slit_domain,
                               make_parabola, make_ellipse, make_hyperbola,
                               FIXTURES, load_fixture)
from skorohod.geometry import (contains, is_symmetric, is_delta_convex,
                               is_simple, is_starlike, aperture,
                               hardy_number)
from numpy.testing import (assert_, assert_equal, assert_almost_equal,
                           assert_array_almost_equal, assert_raises,
                           assert_raises_regex)


def test_every_fixture_contains_its_start():
    for name in sorted(FIXTURES):
        fixture = load_fixture(name)
        assert_(contains(fixture.curve, fixture.start), name)
        assert_(is_simple(fixture.curve), name)


def test_unknown_fixture():
    assert_raises_regex(ValueError, "Unknown fixture", load_fixture, "torus")


def test_disk():
    fixture = make_disk(radius=2.0, n_vertices=512)
    assert_equal(fixture.curve.n_vertices, 512)
    assert_array_almost_equal(np.abs(fixture.curve.points), 2.0 * np.ones(512))
    assert_equal(fixture.hardy_number, np.inf)
    assert_(fixture.window is None)
    assert_raises(ValueError, make_disk, start=1.5)


def test_wedge_hardy_numbers():
    for alpha in [np.pi / 4, np.pi / 2, 2 * np.pi / 3]:
        fixture = make_wedge(alpha)
        assert_almost_equal(fixture.hardy_number, np.pi / (2 * alpha))
        assert_(abs(aperture(fixture.curve) - alpha) < 0.01)
        assert_(abs(hardy_number(fixture.curve) - fixture.hardy_number) <
                0.02 * fixture.hardy_number)
    assert_raises(ValueError, make_wedge, 0.0)


def test_quadrant_start():
    fixture = make_wedge()
    assert_almost_equal(fixture.start, (1 + 1j) / np.sqrt(2))
    assert_equal(fixture.window, (-100.0, 100.0, -100.0, 100.0))
    assert_(np.any(fixture.curve.frame))


def test_half_plane():
    fixture = make_half_plane()
    assert_(abs(hardy_number(fixture.curve) - 0.5) < 0.01)
    assert_(not contains(fixture.curve, (-1.5, 0.0)))
    assert_raises(ValueError, make_half_plane, x0=1.0)


def test_strips():
    vertical = make_strip()
    assert_(contains(vertical.curve, (0.999, 5.0)))
    assert_(not contains(vertical.curve, (1.001, 5.0)))
    assert_(is_symmetric(vertical.curve))
    assert_(is_delta_convex(vertical.curve))
    horizontal = make_strip(half_width=2.0, vertical=False)
    assert_(contains(horizontal.curve, (5.0, 1.999)))
    assert_equal(horizontal.window, (-10.0, 10.0, -2.0, 2.0))
    assert_(is_delta_convex(horizontal.curve))


def test_cross():
    curve = make_cross().curve
    assert_(is_symmetric(curve))
    assert_(is_delta_convex(curve))
    assert_(not is_starlike(curve))
    assert_(contains(curve, (3.0, 4.0)))
    assert_(not contains(curve, (0.0, 2.0)))


def test_slit_domain():
    curve = make_slit_domain().curve
    assert_(is_symmetric(curve))
    assert_(not is_delta_convex(curve))
    assert_(not contains(curve, (1.0, 1.0)))
    assert_(contains(curve, (1.0, 1.5)))


def test_parabola_embeddings():
    x = make_parabola("X")
    assert_(is_symmetric(x.curve))
    assert_(contains(x.curve, (10.0, 0.0)))
    assert_(not contains(x.curve, (0.0, 2.5)))
    y = make_parabola("Y")
    assert_(not is_symmetric(y.curve))
    assert_(contains(y.curve, (0.0, -10.0)))
    assert_raises(ValueError, make_parabola, "Z")


def test_parabola_boundary():
    curve = make_parabola().curve
    v = curve.vertices[~curve.frame]
    assert_array_almost_equal(v[:, 0], 0.25 * v[:, 1] ** 2 - 1.0)


def test_ellipse():
    R = 1.0
    v = make_ellipse(R).curve.vertices
    assert_array_almost_equal((v[:, 0] / np.cosh(R)) ** 2 +
                              (v[:, 1] / np.sinh(R)) ** 2, np.ones(len(v)))


def test_hyperbola():
    fixture = make_hyperbola(delta=4.0)
    assert_almost_equal(fixture.start, 2.0)
    curve = fixture.curve
    v = curve.vertices[~curve.frame]
    assert_array_almost_equal(v[:, 0] ** 2 - v[:, 1] ** 2, np.ones(len(v)),
                              decimal=8)
    assert_(not contains(curve, 0.0))
    assert_(contains(curve, 3.0 + 2.0j))
    assert_raises(ValueError, make_hyperbola, delta=1.0)
