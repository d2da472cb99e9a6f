from __future__ import annotations

from typing import Any

from fairreps.groups.models import OrbitPartition
from fairreps.groups.models import PermGroup
from fairreps.utils.decoding import json_int
from fairreps.utils.exceptions.errors import GraphFormatError
from fairreps.utils.exceptions.errors import InvalidInputError


def _plain(element: Any) -> Any:
    return list(element) if isinstance(element, tuple) else element


def orbits_to_json(partition: OrbitPartition) -> list[list[Any]]:
    return [[_plain(e) for e in cls] for cls in partition.classes]


def group_to_json(group: PermGroup) -> dict[str, Any]:
    return {"n": group.n, "generators": [list(p.image) for p in group.generators]}


def group_from_json(data: dict[str, Any]) -> PermGroup:
    """Read ``{"n": degree, "generators": [[image...], ...]}``."""
    try:
        images = [[json_int(point, "image point") for point in image] for image in data["generators"]]
        return PermGroup.from_images(json_int(data["n"], "degree"), images)
    except (KeyError, TypeError, ValueError, InvalidInputError) as exc:
        msg = f"malformed permutation group JSON: {exc}"
        raise GraphFormatError(msg) from exc
