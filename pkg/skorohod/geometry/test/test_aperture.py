import numpy as np
from skorohod.geometry import (BoundaryCurve, refine_polygon, clip,
                               circle_arcs, aperture, hardy_number)
from skorohod.utils.exceptions import NotStarlike
from numpy.testing import (assert_, assert_equal, assert_almost_equal,
                           assert_raises)


def _wedge(alpha, L=100.0):
    corners = [(0.0, 0.0), (3.0 * L, 0.0),
               (3.0 * L * np.cos(alpha), 3.0 * L * np.sin(alpha))]
    vertices, _ = refine_polygon(corners, L / 50.0)
    return clip(BoundaryCurve(vertices, support_unbounded=True),
                (-L, L, -L, L))


def _half_plane(x0=-1.0, X=100.0, Y=100.0):
    corners = [(x0, -Y), (X, -Y), (X, Y), (x0, Y)]
    vertices, frame = refine_polygon(corners, 1.0, [1, 1, 1, 0])
    return BoundaryCurve(vertices, (x0, X, -Y, Y), frame, True)


def _disk(n=1024):
    t = 2.0 * np.pi * (np.arange(n) + 0.5) / n
    return BoundaryCurve(np.exp(1j * t))


def test_circle_arcs_of_quadrant():
    arcs = circle_arcs(_wedge(np.pi / 2), 10.0)
    assert_equal(len(arcs), 1)
    start, length = arcs[0]
    assert_almost_equal(length, np.pi / 2, decimal=9)


def test_quadrant():
    a = aperture(_wedge(np.pi / 2))
    assert_(abs(a - np.pi / 2) < 0.01)
    assert_(abs(hardy_number(_wedge(np.pi / 2)) - 1.0) < 0.02)


def test_narrow_wedge():
    assert_(abs(hardy_number(_wedge(np.pi / 4)) - 2.0) < 0.04)


def test_half_plane():
    curve = _half_plane()
    assert_(abs(aperture(curve) - np.pi) < 0.05)
    assert_(abs(hardy_number(curve) - 0.5) < 0.01)


def test_disk_sequence():
    radii = np.linspace(0.1, 1.5, 15)
    a, sequence = aperture(_disk(), radii, return_sequence=True)
    assert_almost_equal(sequence[0], 2.0 * np.pi)
    assert_almost_equal(a, 0.0)
    assert_(np.all(np.diff(sequence) <= 1e-12))
    assert_equal(hardy_number(_disk()), np.inf)


def test_wedge_sequence_non_increasing():
    _, sequence = aperture(_wedge(np.pi / 3), return_sequence=True)
    assert_(np.all(np.diff(sequence) <= 1e-9))


def test_not_starlike():
    t = 2.0 * np.pi * (np.arange(256) + 0.5) / 256
    shifted = BoundaryCurve(2.0 + 0.5 * np.exp(1j * t))
    assert_raises(NotStarlike, aperture, shifted)
