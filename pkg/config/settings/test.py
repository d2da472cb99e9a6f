"""
With these settings, tests run quietly.
"""

from .base import *  # noqa: F403
from .base import LOGGING

# LOGGING
# ------------------------------------------------------------------------------
LOG_LEVEL = "WARNING"
LOGGING["root"]["level"] = LOG_LEVEL  # type: ignore[index]

# LIMITS
# ------------------------------------------------------------------------------
# Keep runaway test instances from hanging the suite.
GROUP_ORDER_CAP = 10**6
