import os
import tempfile
import numpy as np
from skorohod.simulate import ExitSampleSet, path_stream
from numpy.testing import (assert_, assert_equal, assert_array_equal,
                           assert_raises)


def test_path_stream_depends_on_seed_and_index():
    a = path_stream(3, 7).standard_normal(5)
    b = path_stream(3, 7).standard_normal(5)
    c = path_stream(3, 8).standard_normal(5)
    d = path_stream(4, 7).standard_normal(5)
    assert_array_equal(a, b)
    assert_(np.all(a != c))
    assert_(np.all(a != d))


def test_sample_set_defaults():
    samples = ExitSampleSet([1.0, 0.0], [0.0, -2.0], [0.5, 0.7], [10, 12],
                            "euler", 0, dt=1e-3)
    assert_equal(samples.n_paths, 2)
    assert_array_equal(samples.stream_id, [0, 1])
    assert_array_equal(samples.max_radius, [1.0, 2.0])
    assert_array_equal(samples.exit_points, [1.0, -2.0j])
    assert_equal(samples.censored_fraction, 0.0)
    assert_equal(samples.leakage, 0.0)
    assert_(not samples.mean_time_only)
    assert_equal(samples.metadata()["dt"], 1e-3)


def test_sample_set_checks_input():
    assert_raises(ValueError, ExitSampleSet, [1.0], [0.0], [0.5], [1], "mc",
                  0)
    assert_raises(ValueError, ExitSampleSet, [1.0, 2.0], [0.0], [0.5], [1],
                  "euler", 0)
    assert_raises(ValueError, ExitSampleSet, [1.0], [0.0], [0.5], [1],
                  "wos", 0, censored=[True, False])


def test_sample_set_csv():
    samples = ExitSampleSet([1.0, -1.0, 0.25], [0.0, 0.5, 3.0],
                            [0.5, 0.25, 2.0], [1, 2, 40], "wos", 5,
                            frame_exit=[False, False, True],
                            max_radius=[1.0, 1.2, 3.5])
    filename = os.path.join(tempfile.mkdtemp(), "samples.csv")
    samples.to_csv(filename)
    with open(filename) as f:
        header = f.readline().strip().split(",")
    assert_equal(header[:6], ["backend", "stream_id", "exit_x", "exit_y",
                              "exit_time", "n_steps"])
    loaded = ExitSampleSet.from_csv(filename, seed=5)
    assert_equal(loaded.backend, "wos")
    assert_array_equal(loaded.exit_x, samples.exit_x)
    assert_array_equal(loaded.exit_time, samples.exit_time)
    assert_array_equal(loaded.frame_exit, [False, False, True])
    assert_array_equal(loaded.max_radius, samples.max_radius)
    assert_(loaded.mean_time_only)
