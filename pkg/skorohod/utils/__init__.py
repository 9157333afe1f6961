from .module_loader import from_yaml, from_yaml_string, from_dict, load_config
from .validation import check_random_state
from .log import get_logger
from .exceptions import *  # noqa: F401,F403


__all__ = ["from_yaml", "from_yaml_string", "from_dict", "load_config",
           "check_random_state", "get_logger", "exceptions"]
