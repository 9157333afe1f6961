import numpy as np
from skorohod.geometry import BoundaryCurve, BoundaryIndex
from skorohod.utils.exceptions import DistanceQueryFailure
from numpy.testing import (assert_, assert_equal, assert_almost_equal,
                           assert_array_almost_equal, assert_raises)


def _circle(n=256, radius=1.0):
    t = 2.0 * np.pi * (np.arange(n) + 0.5) / n
    return BoundaryCurve(radius * np.exp(1j * t))


def test_distance_to_circle():
    index = BoundaryIndex(_circle(), spacing=0.01)
    random_state = np.random.RandomState(0)
    r = random_state.uniform(0.0, 0.9, 200)
    t = random_state.uniform(-np.pi, np.pi, 200)
    points = np.column_stack((r * np.cos(t), r * np.sin(t)))
    d = index.distance(points)
    assert_array_almost_equal(d, 1.0 - r, decimal=3)
    assert_(np.all(index.distance_lower_bound(points) <= d + 1e-12))
    assert_(np.all(index.distance_lower_bound(points) >= d - 0.01))


def test_nearest_point():
    index = BoundaryIndex(_circle())
    q, d, piece = index.nearest([[0.5, 0.0], [0.0, -2.0]])
    assert_array_almost_equal(q, [[1.0, 0.0], [0.0, -1.0]], decimal=3)
    assert_array_almost_equal(d, [0.5, 1.0], decimal=3)
    assert_equal(piece.shape, (2,))


def test_first_crossing():
    index = BoundaryIndex(_circle())
    a = np.array([[0.0, 0.0], [0.0, 0.0], [0.1, 0.1]])
    b = np.array([[2.0, 0.0], [0.5, 0.0], [-0.1, 3.1]])
    hit, s, point, frame = index.first_crossing(a, b)
    assert_equal(hit, [True, False, True])
    assert_almost_equal(s[0], 0.5, decimal=3)
    assert_almost_equal(s[1], 1.0)
    assert_array_almost_equal(point[0], [1.0, 0.0], decimal=3)
    assert_array_almost_equal(point[1], [0.5, 0.0])
    assert_almost_equal(np.hypot(*point[2]), 1.0, decimal=3)
    assert_(not np.any(frame))


def test_first_crossing_takes_earliest_hit():
    index = BoundaryIndex(_circle())
    hit, s, point, _ = index.first_crossing([[-2.0, 0.0]], [[2.0, 0.0]])
    assert_(hit[0])
    assert_array_almost_equal(point[0], [-1.0, 0.0], decimal=3)
    assert_almost_equal(s[0], 0.25, decimal=3)


def test_zero_spacing():
    assert_raises(DistanceQueryFailure, BoundaryIndex, _circle(), 0.0)
