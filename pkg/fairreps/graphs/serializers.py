from __future__ import annotations

from collections.abc import Iterable
from typing import Any

from fairreps.graphs.models import Edge
from fairreps.graphs.models import Graph
from fairreps.utils.decoding import json_int
from fairreps.utils.exceptions.errors import GraphFormatError


def edges_to_json(edges: Iterable[Edge]) -> list[list[int]]:
    return [[u, v] for u, v in sorted(edges)]


def graph_to_json(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": edges_to_json(g.edges)}


def graph_from_json(data: dict[str, Any]) -> Graph:
    try:
        n = data.get("n")
        edges = [[json_int(v, "vertex label") for v in edge] for edge in data["edges"]]
        return Graph.from_edges(edges, n=None if n is None else json_int(n, "vertex count"))
    except (KeyError, TypeError, ValueError) as exc:
        msg = f"malformed graph JSON: {exc}"
        raise GraphFormatError(msg) from exc
