from __future__ import annotations

from typing import Any

from fairreps.graphs.serializers import edges_to_json
from fairreps.graphs.serializers import graph_to_json
from fairreps.matching.serializers import bipartite_to_json
from fairreps.tadpole.models import PipelineTrace


def trace_to_json(trace: PipelineTrace) -> dict[str, Any]:
    d = trace.decomposition
    delta = trace.delta
    return {
        "ok": trace.ok,
        "pattern": {
            "tail_vertex": d.tail_vertex,
            "tail_edge": list(d.tail_edge),
            "body": graph_to_json(d.body),
        },
        "X": edges_to_json(trace.x),
        "Y_prime": edges_to_json(trace.y_prime),
        "Gamma_prime": graph_to_json(trace.gamma_prime),
        "X_prime": edges_to_json(trace.x_prime),
        "delta": {
            **bipartite_to_json(delta.graph),
            "a_labels": [sorted(a) for a in delta.a_labels],
            "b_labels": edges_to_json(delta.b_labels),
            "overlaps": [list(p) for p in delta.overlaps],
        },
        "Q_A": sorted(trace.q_a),
        "Q_B": sorted(trace.q_b),
        "Q_prime": {"a": sorted(trace.q_prime.a_part), "b": sorted(trace.q_prime.b_part)},
        "Y_double_prime": edges_to_json(trace.y_double_prime),
        "Y": edges_to_json(trace.y),
        "bound_checks": [
            {"name": c.name, "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds} for c in trace.bound_checks
        ],
    }
