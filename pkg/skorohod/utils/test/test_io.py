import os
import tempfile
import numpy as np
from skorohod.utils.io import (canonical_json, config_hash, file_hash,
                               write_json, read_json, write_csv, read_csv,
                               plot_polylines)
from numpy.testing import assert_, assert_equal, assert_array_equal


def test_canonical_json_sorts_keys():
    assert_equal(canonical_json({"b": 1, "a": np.float64(0.5)}),
                 '{"a":0.5,"b":1}')
    assert_equal(config_hash({"a": 1, "b": 2}), config_hash({"b": 2, "a": 1}))


def test_json_handles_numpy():
    filename = os.path.join(tempfile.mkdtemp(), "out.json")
    write_json(filename, {"x": np.arange(3), "ok": np.bool_(True),
                          "z": complex(1.0, -2.0)})
    data = read_json(filename)
    assert_equal(data, {"x": [0, 1, 2], "ok": True, "z": [1.0, -2.0]})


def test_csv_keeps_full_precision():
    filename = os.path.join(tempfile.mkdtemp(), "out.csv")
    x = np.array([np.pi, 1.0 / 3.0, -1e-300])
    write_csv(filename, [np.arange(3), x], ["index", "value"])
    data = read_csv(filename)
    assert_array_equal(data["index"], [0, 1, 2])
    assert_array_equal(data["value"], x)


def test_svg_is_reproducible():
    directory = tempfile.mkdtemp()
    t = np.linspace(0.0, 2.0 * np.pi, 50)
    circle = np.column_stack((np.cos(t), np.sin(t)))
    first = os.path.join(directory, "a.svg")
    second = os.path.join(directory, "b.svg")
    plot_polylines(first, [circle], labels=["circle"])
    plot_polylines(second, [circle], labels=["circle"])
    assert_(os.path.getsize(first) > 0)
    assert_equal(file_hash(first), file_hash(second))
