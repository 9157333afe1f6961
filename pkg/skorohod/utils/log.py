# Authors: Jan Hendrik Metzen <jhm@informatik.uni-bremen.de>
#          Alexander Fabisch <afabisch@informatik.uni-bremen.de>

import os
import logging


LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


def get_logger(obj, log_to_file=False, log_to_stdout=False):
    """Get logger for given object.

    Removes all previously assigned handlers from the logger.

    Parameters
    ----------
    obj : object or string
        Some object, the logger is named after its class. Strings are used
        as logger names directly.

    log_to_file: optional, boolean or string (default: False)
        Log results to given file, it will be located in the
        $SKOROHOD_LOG_PATH

    log_to_stdout: optional, boolean (default: False)
        Log to standard output

    Returns
    -------
    logger : Logger
        Logger object
    """
    if isinstance(obj, str):
        name = obj
    else:
        name = type(obj).__name__
    logger = logging.getLogger(name)
    logger.handlers = []  # Remove all handlers
    logger.setLevel(logging.DEBUG)
    formatter = logging.Formatter(LOG_FORMAT)
    if log_to_file:
        log_path = os.environ.get("SKOROHOD_LOG_PATH", ".")
        if log_to_file is True:
            log_to_file = "%s.log" % name
        log_file_name = os.path.join(log_path, log_to_file)
        handler = logging.FileHandler(log_file_name)
        handler.setLevel(logging.DEBUG)
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    if log_to_stdout:
        handler = logging.StreamHandler()
        handler.setLevel(logging.INFO)
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    if not (log_to_file or log_to_stdout):
        logger.addHandler(logging.NullHandler())
    return logger
