"""Nesting hypergraph of a cut family and its simple-graph family."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .cuts import Cut
from .exceptions import AmbientMismatch, DuplicateCut, FamilyTooLarge, InternalConsistencyError
from .metric import SimpleGraph

__all__ = [
    "NestingHypergraph",
    "GraphFamily",
    "MAX_TRIPLES",
    "incompatible",
    "asteroid_triplet",
    "build_nesting_hypergraph",
    "enumerate_graph_family",
    "hypergraph_colorable",
    "hypergraph_chromatic_number",
]

MAX_TRIPLES = 12


@dataclass(frozen=True)
class NestingHypergraph:
    """Vertices are cut indices; edges are incompatible pairs and asteroid triplets."""

    cuts: tuple
    pair_edges: frozenset = frozenset()
    triple_edges: frozenset = frozenset()

    @property
    def n_vertices(self) -> int:
        return len(self.cuts)

    def pair_graph(self) -> SimpleGraph:
        return SimpleGraph(len(self.cuts), self.pair_edges)


@dataclass(frozen=True)
class GraphFamily:
    graphs: tuple

    def __len__(self):
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


def _check_ambient(*cuts):
    if len({c.n for c in cuts}) > 1:
        raise AmbientMismatch("cuts live on different point sets")


def incompatible(cA: Cut, cB: Cut) -> bool:
    _check_ambient(cA, cB)
    a, a2, b, b2 = cA.mask, cA.other_mask, cB.mask, cB.other_mask
    return bool(a & b and a & b2 and a2 & b and a2 & b2)


def asteroid_triplet(cA: Cut, cB: Cut, cC: Cut) -> bool:
    """Some choice of one side per cut gives three pairwise disjoint sets."""
    _check_ambient(cA, cB, cC)
    if cA == cB or cB == cC or cA == cC:
        raise DuplicateCut("asteroid triplet needs three distinct cuts")
    for sa, sb, sc in product((cA.mask, cA.other_mask), (cB.mask, cB.other_mask), (cC.mask, cC.other_mask)):
        if not (sa & sb or sb & sc or sa & sc):
            return True
    return False


def build_nesting_hypergraph(cuts: Sequence[Cut]) -> NestingHypergraph:
    cuts = tuple(cuts)
    if len(set(cuts)) != len(cuts):
        raise DuplicateCut("cut family contains a repeated cut")
    if cuts:
        _check_ambient(*cuts)
    k = len(cuts)
    pairs = frozenset((i, j) for i, j in combinations(range(k), 2) if incompatible(cuts[i], cuts[j]))
    triples = set()
    for i, j, l in combinations(range(k), 3):
        if asteroid_triplet(cuts[i], cuts[j], cuts[l]):
            # disjoint sides force every pair in an asteroid triplet to be compatible
            if {(i, j), (i, l), (j, l)} & pairs:
                raise InternalConsistencyError(f"asteroid triplet {(i, j, l)} contains an incompatible pair")
            triples.add((i, j, l))
    return NestingHypergraph(cuts, pairs, frozenset(triples))


def enumerate_graph_family(H: NestingHypergraph, max_triples: int = MAX_TRIPLES) -> GraphFamily:
    """All graphs got by replacing each asteroid triplet with one of its pairs.

    Graphs are labelled on the cut indices; duplicates are removed by edge set
    and the result is sorted by edge list.
    """
    triples = sorted(H.triple_edges)
    if len(triples) > max_triples:
        raise FamilyTooLarge(f"{len(triples)} asteroid triplets exceed the budget of {max_triples}")
    options = [((i, j), (i, l), (j, l)) for i, j, l in triples]
    seen = set()
    for choice in product(*options):
        seen.add(H.pair_edges | frozenset(choice))
    n = H.n_vertices
    graphs = sorted((SimpleGraph(n, edges) for edges in seen), key=lambda g: g.sorted_edges())
    return GraphFamily(tuple(graphs))


def hypergraph_colorable(H: NestingHypergraph, m: int):
    """Exact ``m``-colorability without monochromatic edges.

    Returns ``(True, coloring)`` where ``coloring[i]`` is the color of cut
    ``i``, or ``(False, None)``.
    """
    k = H.n_vertices
    if m < 1:
        return k == 0, (() if k == 0 else None)
    pair_nbrs = [[] for _ in range(k)]
    for i, j in H.pair_edges:
        pair_nbrs[max(i, j)].append(min(i, j))
    # each triple is checked once its last vertex gets colored
    closing = [[] for _ in range(k)]
    for t in H.triple_edges:
        a, b, c = sorted(t)
        closing[c].append((a, b))
    color = [-1] * k

    def rec(v, used):
        if v == k:
            return True
        for col in range(min(used + 1, m)):
            if any(color[u] == col for u in pair_nbrs[v]):
                continue
            if any(color[a] == col and color[b] == col for a, b in closing[v]):
                continue
            color[v] = col
            if rec(v + 1, max(used, col + 1)):
                return True
        color[v] = -1
        return False

    if rec(0, 0):
        return True, tuple(color)
    return False, None


def hypergraph_chromatic_number(H: NestingHypergraph):
    """Least ``m`` with an ``m``-coloring, and that coloring (0 for no vertices)."""
    m = 0 if H.n_vertices == 0 else 1
    while True:
        ok, coloring = hypergraph_colorable(H, m)
        if ok:
            return m, coloring
        m += 1
