from __future__ import annotations

from typing import Any

from fairreps.symmetrize.models import SymmetrizationReport
from fairreps.symmetrize.models import Violation
from fairreps.symmetrize.models import WeightedFamily
from fairreps.symmetrize.models import WeightFunction
from fairreps.utils.decoding import json_int
from fairreps.utils.exceptions.errors import GraphFormatError
from fairreps.utils.rationals import format_fraction
from fairreps.utils.rationals import parse_fraction


def weighted_family_from_json(data: dict[str, Any]) -> WeightedFamily:
    try:
        functions = []
        for function in data["functions"]:
            support: dict[int, Any] = {}
            for item in function["weights"]:
                element = json_int(item["element"], "weighted element")
                if element in support:
                    msg = f"element {element} weighted twice in one function"
                    raise GraphFormatError(msg)
                support[element] = parse_fraction(item["w"])
            functions.append(WeightFunction(support))
    except (KeyError, TypeError, ValueError) as exc:
        msg = f"malformed weighted family JSON: {exc}"
        raise GraphFormatError(msg) from exc
    return WeightedFamily(tuple(functions))


def violation_to_json(v: Violation) -> dict[str, Any]:
    return {"member": v.index, "achieved": format_fraction(v.achieved), "required": format_fraction(v.required)}


def report_to_json(report: SymmetrizationReport) -> dict[str, Any]:
    rhs = report.bound_rhs
    guaranteed = report.guaranteed_size
    return {
        "mode": report.mode,
        "Y": sorted(report.y),
        "size": len(report.y),
        "k": report.k,
        "bound": format_fraction(report.bound) if report.bound is not None else None,
        "auxiliary_size": report.auxiliary_size,
        "guaranteed_size": format_fraction(guaranteed) if guaranteed is not None else None,
        "bound_check": {
            "lhs": format_fraction(report.bound_lhs),
            "rhs": format_fraction(rhs) if rhs is not None else None,
            "holds": report.bound_holds,
        },
        "ledger": [
            {"orbit": e.orbit, "size": e.size, "hits": e.hits, "admitted": e.admitted}
            for e in report.ledger
        ],
    }
