import numpy as np
from scipy import stats
from skorohod.datasets import make_disk, make_strip, make_wedge
from skorohod.simulate import (euler_exit, wos_exit, ks_two_sample,
                               tail_index, escape_exponent)
from skorohod.utils.exceptions import PathBudgetExceeded
from numpy.testing import (assert_, assert_equal, assert_array_equal,
                           assert_array_almost_equal, assert_raises)


def test_disk_mean_exit_time():
    disk = make_disk()
    samples = euler_exit(disk.curve, 0.0, dt=1e-3, n_paths=2000, seed=1,
                         bridge=True)
    t = samples.exit_time
    assert_(np.all(t > 0.0))
    stderr = t.std() / np.sqrt(len(t))
    assert_(abs(t.mean() - 0.5) < 4.0 * stderr)
    assert_(not np.any(samples.censored))


def test_disk_exit_positions():
    disk = make_disk()
    samples = euler_exit(disk.curve, 0.0, dt=1e-3, n_paths=2000, seed=2)
    r = np.abs(samples.exit_points)
    assert_(np.all(np.abs(r - 1.0) < 1e-6))
    assert_(np.all(samples.max_radius <= 1.0))
    angle = np.mod(np.angle(samples.exit_points), 2.0 * np.pi)
    d, _ = stats.kstest(angle / (2.0 * np.pi), "uniform")
    assert_(d < 2.0 / np.sqrt(2000))


def test_strip_mean_exit_time():
    strip = make_strip(half_width=1.0, length=10.0)
    samples = euler_exit(strip.curve, 0.0, dt=1e-3, n_paths=1000, seed=3,
                         bridge=True)
    t = samples.exit_time
    assert_(abs(t.mean() - 1.0) < 4.0 * t.std() / np.sqrt(len(t)))
    assert_array_almost_equal(np.abs(samples.exit_x), np.ones(1000),
                              decimal=12)
    assert_equal(samples.leakage, 0.0)


def test_euler_is_deterministic():
    disk = make_disk(n_vertices=512)
    a = euler_exit(disk.curve, 0.2, dt=1e-2, n_paths=300, seed=11,
                   chunk_size=64)
    b = euler_exit(disk.curve, 0.2, dt=1e-2, n_paths=300, seed=11,
                   chunk_size=1000)
    assert_array_equal(a.exit_x, b.exit_x)
    assert_array_equal(a.exit_time, b.exit_time)
    assert_array_equal(a.n_steps, b.n_steps)
    c = euler_exit(disk.curve, 0.2, dt=1e-2, n_paths=300, seed=12)
    assert_(np.any(a.exit_x != c.exit_x))


def test_euler_checks_input():
    disk = make_disk(n_vertices=512)
    assert_raises(ValueError, euler_exit, disk.curve, 2.0)
    assert_raises(ValueError, euler_exit, disk.curve, 0.0, 0.1)
    assert_raises(ValueError, euler_exit, disk.curve, 0.0, 1e-3, 10, -1)
    assert_raises(PathBudgetExceeded, euler_exit, disk.curve, 0.0, 1e-3, 50,
                  0, 10)


def test_censored_paths_are_reported():
    disk = make_disk(n_vertices=512)
    samples = euler_exit(disk.curve, 0.0, dt=1e-3, n_paths=50, seed=0,
                         max_steps=10, max_censored_fraction=1.0)
    assert_(np.all(samples.censored))
    assert_array_equal(samples.n_steps, np.full(50, 10))
    assert_(np.allclose(samples.exit_time, 10 * 1e-3))


def test_backends_agree_on_disk():
    disk = make_disk()
    euler = euler_exit(disk.curve, 0.0, dt=1e-3, n_paths=1000, seed=5,
                       bridge=True)
    wos = wos_exit(disk.curve, 0.0, n_paths=1000, seed=6)
    d, _ = ks_two_sample(np.angle(euler.exit_points),
                         np.angle(wos.exit_points))
    assert_(d < 0.1)


def test_quadrant_tail():
    wedge = make_wedge(0.5 * np.pi)
    samples = euler_exit(wedge.curve, wedge.start, dt=1e-2, n_paths=2000,
                         seed=7, max_steps=10 ** 4, bridge=True)
    assert_(samples.censored_fraction < 0.01)
    alpha, details = tail_index(samples, 200, return_details=True)
    assert_(0.7 <= alpha <= 1.3)
    assert_(details["power_tail"])
    assert_(1.5 <= escape_exponent(samples) <= 2.5)


def test_disk_has_no_power_tail():
    disk = make_disk(n_vertices=1024)
    samples = euler_exit(disk.curve, 0.0, dt=5e-3, n_paths=20000, seed=8)
    alpha, details = tail_index(samples, 2000, return_details=True)
    assert_(not details["power_tail"])
    assert_(alpha > 2.0)
