from .base import *  # noqa: F403
from .base import LOGGING
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
DEBUG = True

# LOGGING
# ------------------------------------------------------------------------------
LOG_LEVEL = env("FAIRREPS_LOG_LEVEL", default="DEBUG")
LOGGING["root"]["level"] = LOG_LEVEL  # type: ignore[index]
