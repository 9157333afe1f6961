import os
import tempfile
import numpy as np
from skorohod.geometry import BoundaryCurve, clip, refine_polygon, contains
from numpy.testing import (assert_, assert_equal, assert_almost_equal,
                           assert_array_almost_equal, assert_raises)


def _circle(n=64, radius=1.0):
    t = 2.0 * np.pi * (np.arange(n) + 0.5) / n
    return BoundaryCurve(radius * np.exp(1j * t))


def test_complex_and_real_input():
    a = _circle()
    b = BoundaryCurve(a.vertices)
    assert_array_almost_equal(a.vertices, b.vertices)
    assert_array_almost_equal(a.points, b.points)
    assert_equal(a.n_vertices, 64)


def test_too_few_vertices():
    assert_raises(ValueError, BoundaryCurve, np.exp(1j * np.arange(8)))


def test_repeated_vertices_dropped():
    z = np.exp(2j * np.pi * np.arange(20) / 20)
    z = np.insert(z, 5, z[5])
    curve = BoundaryCurve(z)
    assert_equal(curve.n_vertices, 20)


def test_nonfinite_vertices():
    z = np.exp(2j * np.pi * np.arange(20) / 20)
    z[3] = np.inf
    assert_raises(ValueError, BoundaryCurve, z)


def test_perimeter():
    curve = _circle(4096)
    assert_almost_equal(curve.perimeter, 2.0 * np.pi, decimal=5)
    assert_array_almost_equal(curve.closed()[-1], curve.vertices[0])


def test_reflected():
    curve = BoundaryCurve(_circle().points + 0.5j)
    assert_array_almost_equal(curve.reflected().vertices[:, 1],
                              -curve.vertices[:, 1])


def test_densify():
    curve = _circle(16)
    starts, ends, edge_index = curve.densify(0.05)
    lengths = np.hypot(*(ends - starts).T)
    assert_(np.all(lengths <= 0.05 + 1e-12))
    assert_almost_equal(lengths.sum(), curve.perimeter)
    assert_array_almost_equal(starts[1:], ends[:-1])
    assert_equal(edge_index[0], 0)
    assert_equal(edge_index[-1], 15)
    assert_raises(ValueError, curve.densify, 0.0)


def test_refine_polygon():
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    vertices, frame = refine_polygon(square, 0.1, frame=[0, 1, 0, 0])
    assert_equal(len(vertices), 40)
    assert_equal(frame.sum(), 10)
    curve = BoundaryCurve(vertices, frame=frame)
    assert_almost_equal(curve.perimeter, 4.0)


def test_clip_marks_frame_edges():
    curve = clip(_circle(256), (2.0, 0.5))
    assert_equal(curve.window, (-2.0, 2.0, -0.5, 0.5))
    assert_equal(curve.frame.sum(), 2)
    assert_(np.all(np.abs(curve.vertices[:, 1]) <= 0.5))
    start, end = curve.edges
    on_top = np.abs(np.abs(start[curve.frame, 1]) - 0.5) < 1e-12
    assert_(np.all(on_top))
    assert_(contains(curve, (0.0, 0.4)))
    assert_(not contains(curve, (0.0, 0.6)))


def test_clip_keeps_existing_frame():
    vertices, frame = refine_polygon(
        [(-1, -1), (1, -1), (1, 1), (-1, 1)], 0.1, frame=[0, 1, 0, 0])
    curve = clip(BoundaryCurve(vertices, frame=frame), (0.5, 2.0))
    start, end = curve.edges
    right = ((np.abs(start[:, 0] - 0.5) < 1e-12) &
             (np.abs(end[:, 0] - 0.5) < 1e-12))
    assert_(np.any(right))
    assert_(np.all(curve.frame[right]))
    assert_raises(ValueError, clip, curve, (-5.0, -4.0, 0.0, 1.0))


def test_clip_window_inside_domain():
    curve = clip(_circle(256, radius=10.0), (1.0, 0.5))
    assert_(curve.n_vertices >= 16)
    assert_(np.all(curve.frame))
    assert_almost_equal(curve.perimeter, 6.0)
    assert_equal(curve.window, (-1.0, 1.0, -0.5, 0.5))
    assert_(contains(curve, (0.9, 0.4)))
    assert_(not contains(curve, (0.0, 0.6)))


def test_csv_round_trip():
    curve = clip(_circle(128), (2.0, 0.5))
    filename = os.path.join(tempfile.mkdtemp(), "curve.csv")
    curve.to_csv(filename)
    loaded = BoundaryCurve.from_csv(filename, window=curve.window)
    assert_array_almost_equal(loaded.vertices, curve.vertices, decimal=15)
    assert_equal(loaded.frame, curve.frame)
