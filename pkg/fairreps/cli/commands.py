"""
Command-line front end.

Every command prints JSON on stdout (or a short summary with ``--text``) and
sends diagnostics to stderr. Exit codes: 0 success, 1 infeasible input or a
failed check, 2 usage or format errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
from collections.abc import Callable
from collections.abc import Sequence
from pathlib import Path
from typing import Any
from typing import TextIO
from typing import TypeAlias

from fairreps import __version__
from fairreps.conf import configure_logging
from fairreps.copies.search import enumerate_copies
from fairreps.copies.serializers import copy_to_json
from fairreps.covers.representativeness import cost_of_symmetry
from fairreps.covers.representativeness import upsilon_edge
from fairreps.covers.representativeness import upsilon_vertex
from fairreps.covers.serializers import family_from_json
from fairreps.covers.serializers import hitting_result_to_json
from fairreps.covers.serializers import symmetry_cost_to_json
from fairreps.graphs.models import Graph
from fairreps.graphs.parsers import parse_graph
from fairreps.graphs.serializers import edges_to_json
from fairreps.groups.automorphisms import automorphism_group
from fairreps.groups.models import OrbitPartition
from fairreps.groups.models import PermGroup
from fairreps.groups.models import induced_on_edges
from fairreps.groups.serializers import group_from_json
from fairreps.groups.serializers import group_to_json
from fairreps.groups.serializers import orbits_to_json
from fairreps.matching.dulmage_mendelsohn import invariant_min_cover
from fairreps.matching.hopcroft_karp import max_matching
from fairreps.matching.parsers import parse_bipartite
from fairreps.matching.serializers import cover_to_json
from fairreps.symmetrize.checks import check_family_invariance
from fairreps.symmetrize.product import product_oracle
from fairreps.symmetrize.serializers import report_to_json
from fairreps.symmetrize.serializers import violation_to_json
from fairreps.symmetrize.serializers import weighted_family_from_json
from fairreps.symmetrize.theorems import symmetrize_multiple
from fairreps.symmetrize.theorems import symmetrize_weighted
from fairreps.tadpole.pipeline import symmetric_tadpole_representatives
from fairreps.tadpole.serializers import trace_to_json
from fairreps.utils.decoding import is_decimal
from fairreps.utils.exceptions.errors import CapExceededError
from fairreps.utils.exceptions.errors import FairRepsError
from fairreps.utils.exceptions.errors import GraphFormatError
from fairreps.utils.exceptions.errors import NotRepresentativeError

logger = logging.getLogger(__name__)

Outcome: TypeAlias = tuple[dict[str, Any], list[str], int]


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        msg = f"cannot read {path}: {exc.strerror}"
        raise GraphFormatError(msg) from exc


def _read_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _read_json(path: str) -> dict[str, Any]:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        msg = f"{path}: {exc.msg}"
        raise GraphFormatError(msg, line=exc.lineno) from exc


def _parse_ids(text: str) -> list[int]:
    tokens = [t for t in text.replace(",", " ").split() if t]
    if not all(is_decimal(t) for t in tokens):
        msg = f"expected comma-separated nonnegative ids, got {text!r}"
        raise GraphFormatError(msg)
    return [int(t) for t in tokens]


def _load_group(path: str, action: str) -> tuple[PermGroup, OrbitPartition]:
    """A group on element ids: a permutation JSON file, or Aut of a graph file."""
    if path.endswith(".json"):
        group = group_from_json(_read_json(path))
        return group, group.vertex_orbits()
    graph = _read_graph(path)
    aut = automorphism_group(graph)
    if action == "edges":
        group = induced_on_edges(aut, graph)
        return group, group.vertex_orbits()
    return aut, aut.vertex_orbits()


# Commands
# ------------------------------------------------------------------------------


def cmd_aut(args: argparse.Namespace) -> Outcome:
    graph = _read_graph(args.graph)
    group = automorphism_group(graph)
    try:
        order: int | None = group.order
    except CapExceededError as exc:
        logger.warning("group order not reported: %s", exc.detail)
        order = None
    vertex_orbits = group.vertex_orbits()
    edge_orbits = group.edge_orbits(graph)
    payload = {
        **group_to_json(group),
        "order": order,
        "vertex_orbits": orbits_to_json(vertex_orbits),
        "edge_orbits": orbits_to_json(edge_orbits),
    }
    text = [
        f"generators: {len(group.generators)}",
        f"order: {order if order is not None else 'unknown (cap exceeded)'}",
        f"vertex orbits: {len(vertex_orbits)}",
        f"edge orbits: {len(edge_orbits)}",
    ]
    return payload, text, 0


def cmd_copies(args: argparse.Namespace) -> Outcome:
    pattern, host = _read_graph(args.pattern), _read_graph(args.host)
    copies = enumerate_copies(pattern, host)
    payload = {"count": len(copies), "copies": [copy_to_json(c) for c in copies]}
    return payload, [f"copies: {len(copies)}"], 0


def cmd_upsilon(args: argparse.Namespace) -> Outcome:
    pattern, host = _read_graph(args.pattern), _read_graph(args.host)
    if args.vertices:
        result = upsilon_vertex(pattern, host, symmetric=args.symmetric)
        payload = hitting_result_to_json(result)
    else:
        result = upsilon_edge(pattern, host, symmetric=args.symmetric)
        payload = {**hitting_result_to_json(result), "witness_edges": edges_to_json(host.edges_of(result.witness))}
    kind = ("vertex" if args.vertices else "edge") + (" symmetric" if args.symmetric else "")
    return payload, [f"{kind} representativeness: {result.value}"], 0


def cmd_cost(args: argparse.Namespace) -> Outcome:
    pattern, host = _read_graph(args.pattern), _read_graph(args.host)
    cost = cost_of_symmetry(pattern, host, vertices=args.vertices)
    payload = symmetry_cost_to_json(cost)
    text = [
        f"plain {cost.plain.value}, symmetric {cost.symmetric.value}, "
        f"ratio {payload['ratio']}, bound factor {cost.bound_factor}" + (" (tight)" if cost.tight else ""),
    ]
    return payload, text, 0


def cmd_symmetrize(args: argparse.Namespace) -> Outcome:
    group, orbits = _load_group(args.group, args.action)
    x = _parse_ids(args.x)
    data = _read_json(args.family)
    if args.mode == "multiple":
        if args.k is None:
            msg = "--mode multiple needs --k"
            raise GraphFormatError(msg)
        fam = family_from_json(data)
        if not check_family_invariance(fam, group):
            logger.warning("the family is not invariant under the group; Y may fail to represent it")
        report = symmetrize_multiple(fam, x, args.k, orbits)
        payload = report_to_json(report)
        return payload, [f"|X| = {len(report.x)}, |Y| = {len(report.y)}, m = {payload['bound']}"], 0

    wfam = weighted_family_from_json(data)
    if not check_family_invariance(wfam, group):
        logger.warning("the family is not invariant under the group; Y may fail to represent it")
    report = symmetrize_weighted(wfam, x, orbits)
    payload = report_to_json(report)
    text = [f"|X| = {len(report.x)}, |Y| = {len(report.y)}, M = {payload['bound']}"]
    if not args.oracle:
        return payload, text, 0
    lifted = product_oracle(wfam, x, orbits)
    agree = lifted.y == report.y
    if not agree:
        logger.error("weighted symmetrization and the product construction disagree")
    text.append(f"product construction with |E| = {lifted.auxiliary_size}: {'agrees' if agree else 'DISAGREES'}")
    return {"weighted": payload, "product": report_to_json(lifted), "agree": agree}, text, 0 if agree else 1


def cmd_dm_cover(args: argparse.Namespace) -> Outcome:
    graph = parse_bipartite(_read(args.bipartite))
    tau = len(max_matching(graph))
    cover = invariant_min_cover(graph)
    text = [f"tau = {tau}, |A part| = {len(cover.a_part)}, |B part| = {len(cover.b_part)}"]
    return cover_to_json(cover, tau), text, 0


def cmd_tadpole(args: argparse.Namespace) -> Outcome:
    pattern, host = _read_graph(args.pattern), _read_graph(args.host)
    x = host.edges_of(_parse_ids(args.x)) if args.x is not None else None
    trace = symmetric_tadpole_representatives(pattern, host, x)
    text = [
        f"|X| = {len(trace.x)}, |Y'| = {len(trace.y_prime)}, "
        f"|Y''| = {len(trace.y_double_prime)}, |Y| = {len(trace.y)}",
    ]
    text.extend(f"FAILED {c.name}: {c.lhs} > {c.rhs}" for c in trace.failed_checks)
    return trace_to_json(trace), text, 0 if trace.ok else 1


# Parser
# ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fairreps",
        description="Automorphism-invariant systems of representatives.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--text", action="store_true", help="print a short summary instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    aut = sub.add_parser("aut", parents=[common], help="automorphism group and orbits of a graph")
    aut.add_argument("graph")
    aut.set_defaults(handler=cmd_aut)

    copies = sub.add_parser("copies", parents=[common], help="copies of a pattern in a host")
    copies.add_argument("--pattern", required=True)
    copies.add_argument("--host", required=True)
    copies.set_defaults(handler=cmd_copies)

    upsilon = sub.add_parser("upsilon", parents=[common], help="exact (symmetric) representativeness")
    upsilon.add_argument("--pattern", required=True)
    upsilon.add_argument("--host", required=True)
    upsilon.add_argument("--symmetric", action="store_true")
    upsilon.add_argument("--vertices", action="store_true", help="hit copies with vertices instead of edges")
    upsilon.set_defaults(handler=cmd_upsilon)

    cost = sub.add_parser("cost", parents=[common], help="symmetric against plain representativeness")
    cost.add_argument("--pattern", required=True)
    cost.add_argument("--host", required=True)
    cost.add_argument("--vertices", action="store_true", help="hit copies with vertices instead of edges")
    cost.set_defaults(handler=cmd_cost)

    sym = sub.add_parser("symmetrize", parents=[common], help="invariant system from a given one")
    sym.add_argument("--mode", choices=["multiple", "weighted"], required=True)
    sym.add_argument("--family", required=True, help="family JSON")
    sym.add_argument("--x", required=True, help="comma-separated element ids")
    sym.add_argument("--k", type=int, help="multiplicity (multiple mode)")
    sym.add_argument("--group", required=True, help="permutation JSON (.json) or a graph file")
    sym.add_argument(
        "--action",
        choices=["vertices", "edges"],
        default="vertices",
        help="what the element ids name when --group is a graph",
    )
    sym.add_argument("--oracle", action="store_true", help="also run the product construction and compare")
    sym.set_defaults(handler=cmd_symmetrize)

    dm = sub.add_parser("dm-cover", parents=[common], help="canonical minimum cover of a bipartite graph")
    dm.add_argument("bipartite")
    dm.set_defaults(handler=cmd_dm_cover)

    tadpole = sub.add_parser("tadpole", parents=[common], help="invariant edge representatives for a tadpole")
    tadpole.add_argument("--pattern", required=True)
    tadpole.add_argument("--host", required=True)
    tadpole.add_argument("--x", help="comma-separated host edge ids (default: an optimal set)")
    tadpole.set_defaults(handler=cmd_tadpole)
    return parser


def _emit(stream: TextIO, payload: dict[str, Any], text: list[str], *, as_text: bool) -> None:
    if as_text:
        stream.write("\n".join(text) + "\n")
    else:
        stream.write(json.dumps(payload, indent=2) + "\n")


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
    handler: Callable[[argparse.Namespace], Outcome] = args.handler
    try:
        payload, text, code = handler(args)
    except NotRepresentativeError as exc:
        stderr.write(f"error: {exc.detail}\n")
        violations = [violation_to_json(v) for v in exc.violations if hasattr(v, "index")]
        if violations:
            stderr.write(json.dumps({"violations": violations}) + "\n")
        return exc.exit_code
    except FairRepsError as exc:
        stderr.write(f"error: {exc.detail}\n")
        return exc.exit_code
    except Exception as exc:
        logger.debug("unexpected failure in %s", args.command, exc_info=True)
        stderr.write(f"error: unexpected {type(exc).__name__}: {exc}\n")
        return 1
    _emit(stdout, payload, text, as_text=args.text)
    return code


def main() -> None:
    configure_logging()
    sys.exit(run())
