"""Edge-list text format.

One edge per line as ``u v``. An optional first line ``n <count>`` declares
the vertex count so that isolated vertices survive. Blank lines and lines
starting with ``#`` are ignored.
"""

from __future__ import annotations

from fairreps.graphs.models import Edge
from fairreps.graphs.models import Graph
from fairreps.graphs.models import normalize_edge
from fairreps.utils.decoding import is_decimal
from fairreps.utils.exceptions.errors import GraphFormatError


def _label(token: str, line: int) -> int:
    if not is_decimal(token):
        msg = f"expected a nonnegative integer, got {token!r}"
        raise GraphFormatError(msg, line=line)
    return int(token)


def parse_graph(text: str) -> Graph:
    declared: int | None = None
    edges: dict[Edge, int] = {}
    seen_content = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if seen_content:
                msg = "the vertex count must be declared on the first line"
                raise GraphFormatError(msg, line=number)
            if len(tokens) != 2:
                msg = "expected 'n <count>'"
                raise GraphFormatError(msg, line=number)
            declared = _label(tokens[1], number)
            seen_content = True
            continue
        seen_content = True
        if len(tokens) != 2:
            msg = f"expected two vertex labels, got {len(tokens)} tokens"
            raise GraphFormatError(msg, line=number)
        u, v = _label(tokens[0], number), _label(tokens[1], number)
        if u == v:
            msg = f"loop at vertex {u}"
            raise GraphFormatError(msg, line=number)
        edge = normalize_edge(u, v)
        if edge in edges:
            msg = f"duplicate edge {u} {v} (first seen on line {edges[edge]})"
            raise GraphFormatError(msg, line=number)
        edges[edge] = number

    top = 1 + max((v for e in edges for v in e), default=-1)
    if declared is None:
        declared = top
    elif declared < top:
        msg = f"declared {declared} vertices but label {top - 1} is used"
        raise GraphFormatError(msg, line=1)
    return Graph(declared, frozenset(edges))


def serialize_graph(g: Graph) -> str:
    """Edge-list text that ``parse_graph`` reads back to an equal graph."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"
