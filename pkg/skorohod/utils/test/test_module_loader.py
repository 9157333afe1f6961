import os
from skorohod.utils import from_dict, from_yaml, from_yaml_string, load_config
from skorohod.measures import DiscreteMeasure, MEASURE_KINDS
from numpy.testing import assert_, assert_equal, assert_raises_regex


CURRENT_PATH = os.sep.join(__file__.split(os.sep)[:-1])
CONFIG_FILE = CURRENT_PATH + os.sep + "test_config.yaml"
if not CURRENT_PATH:
    CONFIG_FILE = "test_config.yaml"


def test_load_implicit_package():
    config = {"type": "skorohod.measures.DiscreteMeasure",
              "atoms": [[-1, 0.5], [1, 0.5]]}
    spec = from_dict(config)
    assert_(isinstance(spec, DiscreteMeasure))


def test_load_explicit_package():
    config = {"package": "skorohod.measures", "type": "DiscreteMeasure",
              "atoms": [[-1, 0.5], [1, 0.5]]}
    spec = from_dict(config)
    assert_(isinstance(spec, DiscreteMeasure))


def test_load_kind_with_params():
    spec = from_dict({"kind": "discrete", "atoms": [[-2, 0.5], [2, 0.5]],
                      "p": 3}, MEASURE_KINDS)
    assert_equal(spec.p, 3.0)
    assert_equal(spec.atoms, [[-2, 0.5], [2, 0.5]])


def test_load_with_wrong_params():
    config = {"type": "skorohod.measures.DiscreteMeasure", "atom": []}
    assert_raises_regex(TypeError, "do not match", from_dict, config)


def test_unknown_kind():
    assert_raises_regex(ValueError, "Unknown kind 'stable'", from_dict,
                        {"kind": "stable"}, MEASURE_KINDS)


def test_neither_kind_nor_type():
    assert_raises_regex(ValueError, "neither 'kind' nor 'type'", from_dict,
                        {"atoms": []})


def test_missing_package():
    config = {"type": "DiscreteMeasure"}
    assert_raises_regex(ValueError, "Empty module name", from_dict, config)


def test_load_class_does_not_exist():
    config = {"type": "skorohod.measures.DoesNotExist"}
    assert_raises_regex(ValueError, "does not exist in", from_dict, config)


def test_load_from_yaml():
    spec = from_yaml(CONFIG_FILE, MEASURE_KINDS)
    assert_(isinstance(spec, DiscreteMeasure))
    assert_equal(spec.p, 8.0)


def test_load_from_yaml_with_conf_path():
    spec = from_yaml("test_config.yaml", MEASURE_KINDS, CURRENT_PATH)
    assert_(isinstance(spec, DiscreteMeasure))


def test_load_from_missing_yaml():
    assert_raises_regex(ValueError, "does not exist", from_yaml,
                        "dummy.yaml", MEASURE_KINDS, CURRENT_PATH)


def test_load_config_reads_json():
    config = load_config(CONFIG_FILE)
    assert_equal(config["kind"], "discrete")


def test_load_from_yaml_string():
    spec = from_yaml_string('{"kind": "discrete", "atoms": [[0, 1]], "p": 2}',
                            MEASURE_KINDS)
    assert_equal(spec.mean(), 0.0)
