"""JSON documents shared by the CLI and the library.

metric         {"labels": [...]?, "dist": [[r, ...], ...]}
graph          {"n": int, "edges": [[u, v], ...]}
decomposition  {"n": int, "cuts": [{"side": [...], "weight": r}, ...]}

``r`` is an integer or a ``"p/q"`` string on input; output always uses
``"p/q"`` in lowest terms so documents are byte-stable.
"""
from __future__ import annotations

import json
from pathlib import Path

from .cuts import Cut, CutDecomposition, evaluate_decomposition
from .exceptions import ParameterError
from .metric import FinitePseudometricSpace, SimpleGraph, validate_metric
from .rational import as_rational, format_rational


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load(path):
    with open(Path(path), encoding="utf-8") as fh:
        return json.load(fh)


def metric_from_doc(doc, allow_pseudo: bool = False):
    if not isinstance(doc, dict) or "dist" not in doc:
        raise ParameterError('metric document needs a "dist" matrix')
    return validate_metric(doc["dist"], allow_pseudo=allow_pseudo, labels=doc.get("labels"))


def metric_to_doc(space: FinitePseudometricSpace) -> dict:
    doc = {}
    if space.labels is not None:
        doc["labels"] = list(space.labels)
    doc["dist"] = [[format_rational(v) for v in row] for row in space.dist]
    return doc


def graph_from_doc(doc) -> SimpleGraph:
    if not isinstance(doc, dict) or "n" not in doc:
        raise ParameterError('graph document needs "n" and "edges"')
    edges = doc.get("edges", [])
    if any(len(e) != 2 for e in edges):
        raise ParameterError("every edge must have two endpoints")
    return SimpleGraph.from_edges(int(doc["n"]), [(int(u), int(v)) for u, v in edges])


def graph_to_doc(graph: SimpleGraph) -> dict:
    return {"n": graph.n, "edges": [list(e) for e in graph.sorted_edges()]}


def decomposition_from_doc(doc) -> CutDecomposition:
    if not isinstance(doc, dict) or "cuts" not in doc or "n" not in doc:
        raise ParameterError('decomposition document needs "n" and "cuts"')
    n = int(doc["n"])
    terms = [(Cut.from_side(c["side"], n), as_rational(c["weight"])) for c in doc["cuts"]]
    return CutDecomposition(n, tuple(sorted(terms)))


def cut_to_doc(cut: Cut) -> list:
    return list(cut.side)


def decomposition_to_doc(dec: CutDecomposition) -> dict:
    return {
        "n": dec.n,
        "cuts": [{"side": cut_to_doc(c), "weight": format_rational(w)} for c, w in dec.terms],
    }


def space_or_decomposition(doc):
    """Read a metric or a decomposition document.

    Returns ``(space, decomposition_or_None)``; a decomposition is evaluated
    into its pseudometric.
    """
    if isinstance(doc, dict) and "cuts" in doc:
        dec = decomposition_from_doc(doc)
        return evaluate_decomposition(dec), dec
    return metric_from_doc(doc, allow_pseudo=True), None


def hypergraph_to_doc(H) -> dict:
    return {
        "cuts": [cut_to_doc(c) for c in H.cuts],
        "pairs": [list(p) for p in sorted(H.pair_edges)],
        "triples": [list(t) for t in sorted(H.triple_edges)],
    }


def report_to_doc(report) -> dict:
    """Serialize an :class:`~l1embed.l1dim.L1Report`."""
    return {
        "dimension": report.dimension,
        "routes": {
            "gh": report.route_gh,
            "coloring": report.route_coloring,
            "hypergraph": report.route_hypergraph,
        },
        "gh_table": [
            {"m": row.m, "min_twice_gh": format_rational(row.min_twice_gh), "below_b": row.below_b}
            for row in report.gh_table
        ],
        "decomposition": decomposition_to_doc(report.decomposition),
        "nesting": hypergraph_to_doc(report.hypergraph),
        "family_size": report.family_size,
        "coloring": list(report.coloring),
        "embedding": [[format_rational(v) for v in row] for row in report.embedding],
    }
