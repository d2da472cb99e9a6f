from __future__ import annotations

from typing import Any

from fairreps.covers.models import FamilyOfSets
from fairreps.covers.models import HittingResult
from fairreps.covers.representativeness import SymmetryCost
from fairreps.utils.decoding import json_int
from fairreps.utils.exceptions.errors import GraphFormatError
from fairreps.utils.rationals import format_fraction


def family_from_json(data: dict[str, Any]) -> FamilyOfSets:
    try:
        return FamilyOfSets.of([json_int(x, "family element") for x in member] for member in data["sets"])
    except (KeyError, TypeError, ValueError) as exc:
        msg = f"malformed family JSON: {exc}"
        raise GraphFormatError(msg) from exc


def hitting_result_to_json(result: HittingResult) -> dict[str, Any]:
    return {
        "value": result.value,
        "witness": sorted(result.witness),
        "witness_orbits": list(result.witness_orbits) if result.witness_orbits is not None else None,
    }


def symmetry_cost_to_json(cost: SymmetryCost) -> dict[str, Any]:
    ratio = cost.ratio
    return {
        "plain": hitting_result_to_json(cost.plain),
        "symmetric": hitting_result_to_json(cost.symmetric),
        "bound_factor": cost.bound_factor,
        "ratio": format_fraction(ratio) if ratio is not None else None,
        "tight": cost.tight,
    }
