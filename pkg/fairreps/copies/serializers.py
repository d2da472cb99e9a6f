from __future__ import annotations

from typing import Any

from fairreps.copies.models import Copy
from fairreps.graphs.serializers import edges_to_json


def copy_to_json(c: Copy) -> dict[str, Any]:
    return {"vertices": sorted(c.vertices), "edges": edges_to_json(c.edges)}
