from __future__ import annotations

from typing import Any

from fairreps.matching.models import BipartiteGraph
from fairreps.matching.models import Cover


def cover_to_json(cover: Cover, tau: int) -> dict[str, Any]:
    return {"tau": tau, "a": sorted(cover.a_part), "b": sorted(cover.b_part)}


def bipartite_to_json(g: BipartiteGraph) -> dict[str, Any]:
    return {"a_size": g.a_size, "b_size": g.b_size, "edges": [[a, b] for a, b in sorted(g.edges)]}
