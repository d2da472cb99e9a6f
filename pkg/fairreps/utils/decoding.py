"""Strict integer checks shared by the text and JSON readers."""

from __future__ import annotations

from typing import Any

from fairreps.utils.exceptions.errors import GraphFormatError


def is_decimal(token: str) -> bool:
    """ASCII digits only: ``str.isdigit`` also accepts superscripts that ``int`` rejects."""
    return token.isascii() and token.isdigit()


def json_int(value: Any, what: str = "value") -> int:
    """A JSON integer; floats and booleans are rejected rather than coerced."""
    if type(value) is not int:
        msg = f"{what} must be an integer, got {value!r}"
        raise GraphFormatError(msg)
    return value
