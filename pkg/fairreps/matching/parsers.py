"""
Bipartite text format: a header ``p <a_size> <b_size>`` followed by one
``a b`` edge per line. Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from fairreps.matching.models import BipartiteEdge
from fairreps.matching.models import BipartiteGraph
from fairreps.utils.decoding import is_decimal
from fairreps.utils.exceptions.errors import GraphFormatError
from fairreps.utils.exceptions.errors import InvalidInputError


def _ints(tokens: list[str], line: int) -> list[int]:
    if not all(is_decimal(t) for t in tokens):
        msg = f"expected nonnegative integers, got {' '.join(tokens)!r}"
        raise GraphFormatError(msg, line=line)
    return [int(t) for t in tokens]


def parse_bipartite(text: str) -> BipartiteGraph:
    sizes: tuple[int, int] | None = None
    edges: dict[BipartiteEdge, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if sizes is None:
            if tokens[0] != "p" or len(tokens) != 3:
                msg = "expected header 'p <a_size> <b_size>'"
                raise GraphFormatError(msg, line=number)
            a_size, b_size = _ints(tokens[1:], number)
            sizes = (a_size, b_size)
            continue
        if len(tokens) != 2:
            msg = f"expected 'a b', got {len(tokens)} tokens"
            raise GraphFormatError(msg, line=number)
        a, b = _ints(tokens, number)
        if (a, b) in edges:
            msg = f"duplicate edge {a} {b} (first seen on line {edges[(a, b)]})"
            raise GraphFormatError(msg, line=number)
        edges[(a, b)] = number
    if sizes is None:
        msg = "missing header 'p <a_size> <b_size>'"
        raise GraphFormatError(msg, line=1)
    try:
        return BipartiteGraph(sizes[0], sizes[1], frozenset(edges))
    except InvalidInputError as exc:
        raise GraphFormatError(exc.detail) from exc


def serialize_bipartite(g: BipartiteGraph) -> str:
    lines = [f"p {g.a_size} {g.b_size}"]
    lines.extend(f"{a} {b}" for a, b in sorted(g.edges))
    return "\n".join(lines) + "\n"
