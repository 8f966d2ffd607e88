import functools
import logging
import os
import sys
from datetime import datetime

LOG_LEVEL_VARIABLE = "GG_LOG"

logger = logging.getLogger("curvilinearguard")


def configure_logging(level=None):
    """
    Configures the package logger from the GG_LOG environment variable
    :param level: explicit level name, overrides the environment
    :return: configured logger
    """
    level_name = (level or os.environ.get(LOG_LEVEL_VARIABLE) or "WARNING").upper()
    log_level = logging.getLevelName(level_name)

    if not isinstance(log_level, int):
        log_level = logging.WARNING

    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
        )
        logger.addHandler(handler)

    logger.setLevel(log_level)
    return logger


class TrackingDecorator(object):
    def track_time(func):
        @functools.wraps(func)
        def wrap(*args, **kwargs):
            start_time = datetime.now()

            logger.debug(func.__qualname__ + " started")

            result = func(*args, **kwargs)

            time_elapsed = datetime.now() - start_time

            logger.debug(func.__qualname__ + " finished in {}".format(time_elapsed))

            return result

        return wrap
