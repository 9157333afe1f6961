import numpy as np
from skorohod.geometry import (BoundaryCurve, refine_polygon, clip,
                               is_symmetric, symmetry_defect,
                               is_delta_convex, upper_chains, is_simple,
                               self_intersections, contains, winding_number,
                               is_starlike, hausdorff_distance, diagnostics)
from skorohod.utils.exceptions import NotSymmetric
from numpy.testing import (assert_, assert_equal, assert_almost_equal,
                           assert_array_equal, assert_raises)


def _circle(n=256, radius=1.0, center=0.0):
    t = 2.0 * np.pi * (np.arange(n) + 0.5) / n
    return BoundaryCurve(center + radius * np.exp(1j * t))


def _cross(X=5.0, Y=5.0):
    vertices = [(X, -Y), (X, Y), (1, Y), (1, 1), (-1, 1), (-1, Y), (-X, Y),
                (-X, -Y), (-1, -Y), (-1, -1), (1, -1), (1, -Y)]
    frame = [1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1]
    vertices, frame = refine_polygon(vertices, 0.25, frame)
    return BoundaryCurve(vertices, (X, Y), frame, support_unbounded=True)


def _slit():
    vertices = [(2, 0), (2, 0.9), (0, 0.9), (0, 1.1), (2, 1.1), (2, 2),
                (-2, 2), (-2, 0), (-2, -2), (2, -2), (2, -1.1), (0, -1.1),
                (0, -0.9), (2, -0.9)]
    return BoundaryCurve(refine_polygon(vertices, 0.1)[0])


def test_symmetry():
    assert_(is_symmetric(_circle()))
    assert_(not is_symmetric(_circle(center=0.5j)))
    assert_almost_equal(symmetry_defect(_circle(center=0.5j)), 1.0,
                        decimal=3)
    assert_(is_symmetric(_cross()))
    assert_(is_symmetric(_slit()))


def test_delta_convexity():
    assert_(is_delta_convex(_circle()))
    assert_(is_delta_convex(_cross()))
    assert_(not is_delta_convex(_slit()))
    assert_raises(NotSymmetric, is_delta_convex, _circle(center=0.5j))


def test_upper_chains_of_circle():
    chains = upper_chains(_circle(64))
    assert_equal(len(chains), 1)
    chain = chains[0]
    assert_almost_equal(chain[0, 1], 0.0)
    assert_almost_equal(chain[-1, 1], 0.0)
    assert_(np.all(chain[:, 1] >= -1e-9))


def test_simplicity():
    assert_(is_simple(_circle()))
    assert_(is_simple(_cross()))
    assert_(is_simple(_slit()))
    t = 2.0 * np.pi * (np.arange(64) + 0.5) / 64
    figure_eight = BoundaryCurve(np.column_stack((np.sin(t),
                                                  np.sin(t) * np.cos(t))))
    assert_(not is_simple(figure_eight))
    assert_(len(self_intersections(figure_eight)) >= 1)


def test_contains_examples():
    circle = _circle()
    assert_(contains(circle, (0.0, 0.0)))
    assert_(not contains(circle, (2.0, 0.0)))
    assert_(contains(circle, 0.5j))
    assert_array_equal(contains(circle, [[0.0, 0.0], [2.0, 0.0]]),
                       [True, False])
    assert_(not contains(circle, circle.vertices[3]))


def test_contains_strip_within_window():
    vertices = [(1, -10), (1, 10), (-1, 10), (-1, -10)]
    vertices, frame = refine_polygon(vertices, 0.5, [0, 1, 0, 1])
    strip = BoundaryCurve(vertices, (2.0, 10.0), frame, True)
    assert_(contains(strip, (0.999, 5.0)))
    assert_(not contains(strip, (1.001, 5.0)))


def test_contains_agrees_with_winding_number():
    random_state = np.random.RandomState(0)
    for curve, scale in [(_circle(), 1.2), (_slit(), 2.2), (_cross(), 5.5)]:
        points = random_state.uniform(-scale, scale, (1000, 2))
        inside = contains(curve, points)
        winding = winding_number(curve, points)
        assert_array_equal(inside, winding != 0)
        assert_(np.all(np.abs(winding) <= 1))


def test_starlike():
    assert_(is_starlike(_circle()))
    assert_(not is_starlike(_cross()))
    assert_(not is_starlike(_circle(radius=0.5, center=2.0)))


def test_hausdorff_distance():
    a = _circle(512)
    b = _circle(512, radius=1.1)
    assert_almost_equal(hausdorff_distance(a, b), 0.1, decimal=3)
    assert_equal(hausdorff_distance(a, a), 0.0)
    assert_equal(hausdorff_distance(a, _circle(512)), 0.0)
    assert_(hausdorff_distance(a, _circle(512, center=1e-9)) > 0.0)


def test_diagnostics():
    report = diagnostics(_cross())
    assert_(not report["starlike"])
    assert_almost_equal(report["strip_height"], 5.0)
    assert_almost_equal(report["far_height"], 5.0)
    report = diagnostics(_circle())
    assert_(report["starlike"])
    assert_(report["strip_height"] <= 1.0)
