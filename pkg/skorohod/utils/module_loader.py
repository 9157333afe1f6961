# Author: Alexander Fabisch <afabisch@informatik.uni-bremen.de>

import os
import inspect
import yaml


def from_yaml(filename, factories=None, conf_path=None):
    """Create an object from a YAML or JSON configuration file.

    See also
    --------
    See :func:`from_dict`.

    Parameters
    ----------
    filename : string
        The name of the file to load. JSON documents are valid YAML.

    factories : dict, optional (default: None)
        Maps values of the key 'kind' to callables

    conf_path : string, optional (default: $SKOROHOD_CONF_PATH)
        You can specify a path that is searched for the configuration file.
        Otherwise we try to read it from the environment variable
        'SKOROHOD_CONF_PATH'. If that environment variable is not present we
        search in the current path.

    Returns
    -------
    object : as specified in the config
        Object created from the configuration
    """
    config = load_config(filename, conf_path)
    return from_dict(config, factories)


def load_config(filename, conf_path=None):
    """Load configuration dictionary from a YAML or JSON file.

    Parameters
    ----------
    filename : string
        The name of the file to load.

    conf_path : string, optional (default: $SKOROHOD_CONF_PATH)
        Directory that is searched for the configuration file.

    Returns
    -------
    config : dict
        Configuration
    """
    if conf_path is None:
        conf_path = os.environ.get("SKOROHOD_CONF_PATH", None)

    if conf_path is None or os.path.isabs(filename):
        conf_filename = filename
    else:
        conf_filename = os.path.join(conf_path, filename)

    if os.path.exists(conf_filename):
        with open(conf_filename, "r") as f:
            config = yaml.safe_load(f)
        if not isinstance(config, dict):
            raise ValueError("'%s' does not contain a mapping" % conf_filename)
        return config
    else:
        raise ValueError("'%s' does not exist" % conf_filename)


def from_yaml_string(yaml_str, factories=None):
    """Create an object from a YAML or JSON string.

    Parameters
    ----------
    yaml_str : string
        Configuration string

    factories : dict, optional (default: None)
        Maps values of the key 'kind' to callables

    Returns
    -------
    object : as specified in the config
        Object created from the configuration
    """
    return from_dict(yaml.safe_load(yaml_str), factories)


def from_dict(config, factories=None):
    """Create an object that is fully specified by a config dict.

    The callable is selected either by the key 'kind', which is looked up in
    'factories', or by the key 'type', which is a fully qualified class name
    as in

    .. code-block:: python

        config = {"type": "skorohod.measures.DiscreteMeasure",
                  "atoms": [[-1, 0.5], [1, 0.5]]}
        obj = from_dict(config)

    All remaining entries are passed as keyword arguments.

    Parameters
    ----------
    config : dict
        Configuration dictionary of the object. Contains constructor
        arguments.

    factories : dict, optional (default: None)
        Maps values of the key 'kind' to callables

    Returns
    -------
    object : as specified in the config
        The object created from the configuration dictionary.
    """
    if not isinstance(config, dict):
        raise ValueError("Configuration must be a mapping, got %r" % (config,))
    c = dict(config)
    if "kind" in c:
        kind = c.pop("kind")
        if factories is None or kind not in factories:
            known = sorted(factories) if factories else []
            raise ValueError("Unknown kind '%s', expected one of %r"
                             % (kind, known))
        factory = factories[kind]
        label = kind
    elif "type" in c:
        factory = _load_class(c.pop("type"), c.pop("package", None))
        label = factory.__name__
    else:
        raise ValueError("Configuration %r has neither 'kind' nor 'type'"
                         % (config,))

    try:
        return factory(**c)
    except TypeError as e:
        raise TypeError("Parameters for kind '%s' do not match: %r. Reason: "
                        "'%s'" % (label, c, e))


def _load_class(type_name, package_name=None):
    if package_name is None:
        type_parts = type_name.split(".")
        package_name = ".".join(type_parts[:-1])
        type_name = type_parts[-1]

    if package_name == "":
        raise ValueError(
            "Empty module name. You forgot to specify the Python package "
            "where the class '%s' is located." % type_name)

    package = __import__(package_name, {}, {}, fromlist=["dummy"], level=0)
    class_dict = dict(inspect.getmembers(package))

    if type_name in class_dict:
        return class_dict[type_name]
    else:
        raise ValueError("Class name '%s' does not exist in module '%s'."
                         % (type_name, package_name))
