import numpy as np
from scipy import stats
from skorohod.construction import synthesize
from skorohod.datasets import make_disk, make_strip
from skorohod.geometry import BoundaryIndex
from skorohod.measures import BuiltinMeasure
from skorohod.simulate import wos_exit, tail_index
from skorohod.utils.exceptions import PathBudgetExceeded
from numpy.testing import (assert_, assert_equal, assert_almost_equal,
                           assert_array_equal, assert_raises)


def test_disk_single_jump():
    disk = make_disk()
    samples = wos_exit(disk.curve, 0.0, eps=1e-4, n_paths=1000, seed=0)
    assert_array_equal(samples.n_steps, np.ones(1000, dtype=int))
    assert_almost_equal(samples.exit_time.mean(), 0.5, decimal=5)
    assert_(samples.mean_time_only)
    assert_equal(samples.delta_report, 1e-4)
    angle = np.mod(np.angle(samples.exit_points), 2.0 * np.pi)
    d, _ = stats.kstest(angle / (2.0 * np.pi), "uniform")
    assert_(d < 2.0 / np.sqrt(1000))


def test_two_point_strip():
    spec = BuiltinMeasure("two_point", {"c": 1.0})
    artifact = synthesize(spec, 1024, 4096)
    samples = wos_exit(artifact.to_curve(), 0.0, n_paths=2000, seed=1)
    x = samples.exit_x
    assert_(np.mean(np.abs(np.abs(x) - 1.0) < 1e-3) > 0.99)
    right = np.mean(x > 0.0)
    assert_(abs(right - 0.5) < 4.0 * np.sqrt(0.25 / 2000))
    t = samples.exit_time
    assert_(abs(t.mean() - 1.0) < 4.0 * t.std() / np.sqrt(len(t)))


def test_frame_exits_and_budget():
    strip = make_strip(half_width=1.0, length=1.0)
    samples = wos_exit(strip.curve, 0.0, n_paths=500, seed=2)
    assert_(0.0 < samples.leakage < 1.0)
    assert_(np.all(samples.frame_exit == (np.abs(samples.exit_y) > 1.0 - 1e-3)))
    assert_raises(PathBudgetExceeded, wos_exit, strip.curve, 0.0, 1e-4, 100,
                  2, 1)


def test_wos_is_deterministic():
    disk = make_disk(n_vertices=512)
    index = BoundaryIndex(disk.curve)
    a = wos_exit(disk.curve, 0.3 + 0.2j, n_paths=200, seed=4,
                 chunk_size=32, index=index)
    b = wos_exit(disk.curve, (0.3, 0.2), n_paths=200, seed=4, index=index)
    assert_array_equal(a.exit_x, b.exit_x)
    assert_array_equal(a.exit_time, b.exit_time)


def test_wos_times_have_no_tail_index():
    disk = make_disk(n_vertices=512)
    samples = wos_exit(disk.curve, 0.0, n_paths=1000, seed=0)
    assert_raises(ValueError, tail_index, samples, 100)


def test_start_within_absorption_distance():
    disk = make_disk()
    assert_raises(ValueError, wos_exit, disk.curve, 0.99995, 1e-4, 10)
    samples = wos_exit(disk.curve, 0.99995, eps=1e-5, n_paths=10, seed=5)
    assert_(np.all(samples.exit_time > 0.0))
    assert_(np.all(samples.n_steps >= 1))
