"""Exact rational helpers shared by the weighted layers."""

from __future__ import annotations

import math
from collections.abc import Iterable
from fractions import Fraction

from fairreps.utils.exceptions.errors import GraphFormatError


def parse_fraction(text: str | int) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction in lowest terms."""
    if isinstance(text, bool) or not isinstance(text, str | int):
        msg = f"not a rational: {text!r}"
        raise GraphFormatError(msg)
    try:
        return Fraction(text)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        msg = f"not a rational: {text!r}"
        raise GraphFormatError(msg) from exc


def format_fraction(value: Fraction | int) -> str:
    return str(Fraction(value))


def common_denominator(values: Iterable[Fraction]) -> int:
    """Least common multiple of the denominators (1 for no values)."""
    return math.lcm(1, *(Fraction(v).denominator for v in values))
