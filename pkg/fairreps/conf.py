"""Settings access for fairreps.

Settings live in plain modules under ``config/settings`` and are chosen with
the ``FAIRREPS_SETTINGS_MODULE`` environment variable, read lazily on the
first attribute lookup.
"""

from __future__ import annotations

import importlib
import logging.config
import os
from types import ModuleType
from typing import Any

ENVIRONMENT_VARIABLE = "FAIRREPS_SETTINGS_MODULE"
DEFAULT_SETTINGS_MODULE = "config.settings.base"


class LazySettings:
    """Proxy that imports the settings module on first use."""

    def __init__(self) -> None:
        self._wrapped: ModuleType | None = None
        self._overrides: dict[str, Any] = {}

    def _setup(self) -> ModuleType:
        if self._wrapped is None:
            module_name = os.environ.get(ENVIRONMENT_VARIABLE, DEFAULT_SETTINGS_MODULE)
            self._wrapped = importlib.import_module(module_name)
        return self._wrapped

    def __getattr__(self, name: str) -> Any:
        if name.startswith("_"):
            raise AttributeError(name)
        if name in self._overrides:
            return self._overrides[name]
        return getattr(self._setup(), name)

    def override(self, **values: Any) -> None:
        """Replace settings at runtime; used by the test suite."""
        self._overrides.update(values)

    def reset(self) -> None:
        self._overrides.clear()


settings = LazySettings()


def configure_logging() -> None:
    logging.config.dictConfig(settings.LOGGING)
