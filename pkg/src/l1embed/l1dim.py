"""l1-dimension of a finite metric, three ways, plus an explicit embedding.

Given a positive cut decomposition ``d = sum(w_c * delta_c)``:

* GH route: the least ``m`` with ``min_G 2 d_GH(a Delta_m, C_G) < b`` over the
  graph family of the nesting hypergraph, where ``C_G`` is the two-distance
  space putting adjacent cuts at ``b`` and the rest at ``a``;
* coloring route: ``min_G chi(G)`` over the same family;
* hypergraph route: the chromatic number of the nesting hypergraph itself.

A coloring of the hypergraph is turned into coordinates by
:func:`embed_from_coloring`, which certifies the answer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .chromatic import chromatic_number
from .cuts import MAX_CUT_POINTS, CutDecomposition, decompose, evaluate_decomposition
from .exceptions import DisagreementDetected, InternalConsistencyError, NoLinearRealization, ParameterError
from .gh import DEFAULT_SIZE_LIMIT, gh_distance_exact
from .metric import FinitePseudometricSpace, TwoDistanceParams, simplex, two_distance_from_graph
from .nesting import (
    MAX_TRIPLES,
    GraphFamily,
    NestingHypergraph,
    build_nesting_hypergraph,
    enumerate_graph_family,
    hypergraph_chromatic_number,
    hypergraph_colorable,
)

__all__ = [
    "Budgets",
    "GHScanRow",
    "L1Report",
    "analyze",
    "l1_dimension_via_gh",
    "l1_dimension_via_coloring",
    "embeddable_in_dim",
    "embed_from_coloring",
    "cross_validate",
]


@dataclass(frozen=True)
class Budgets:
    gh_points: int = DEFAULT_SIZE_LIMIT
    family_triples: int = MAX_TRIPLES
    cut_points: int = MAX_CUT_POINTS


@dataclass(frozen=True)
class GHScanRow:
    m: int
    min_twice_gh: Fraction
    below_b: bool


@dataclass(frozen=True)
class Analysis:
    """Decomposition, nesting hypergraph and graph family of one metric."""

    space: FinitePseudometricSpace
    decomposition: CutDecomposition
    hypergraph: NestingHypergraph
    family: GraphFamily


@dataclass(frozen=True)
class L1Report:
    dimension: int
    route_gh: Optional[int]
    route_coloring: Optional[int]
    route_hypergraph: Optional[int]
    gh_table: tuple
    embedding: tuple
    coloring: tuple
    decomposition: CutDecomposition
    hypergraph: NestingHypergraph = field(repr=False)
    family_size: int = 0


def analyze(X: FinitePseudometricSpace, budgets: Budgets = Budgets(), decomposition=None) -> Analysis:
    """Decompose ``X`` (unless a decomposition is supplied) and build ``Gamma(C)``, ``G(C)``."""
    if decomposition is None:
        decomposition = decompose(X, budgets.cut_points)
    elif evaluate_decomposition(decomposition).dist != X.dist:
        raise ParameterError("supplied decomposition does not reproduce the metric")
    H = build_nesting_hypergraph(decomposition.cuts)
    family = enumerate_graph_family(H, budgets.family_triples)
    return Analysis(X, decomposition, H, family)


def _as_analysis(X, budgets, decomposition=None):
    return X if isinstance(X, Analysis) else analyze(X, budgets, decomposition)


def _min_twice_gh(family, m, params, size_limit):
    # isomorphic graphs give isometric spaces, so one solve per class suffices
    reps = {}
    for G in family:
        reps.setdefault(G.canonical_form(), G)
    best = None
    for G in reps.values():
        V = two_distance_from_graph(G, params, adjacent_gets="b")
        twice = 2 * gh_distance_exact(simplex(m, params.a), V, size_limit).distance
        if best is None or twice < best:
            best = twice
    return best


def l1_dimension_via_gh(
    X,
    params: TwoDistanceParams = TwoDistanceParams(),
    budgets: Budgets = Budgets(),
    full_scan: bool = False,
):
    """Least ``m`` with ``min_G 2 d_GH(a Delta_m, C_G) < b``, and the scan table.

    With ``full_scan`` the table covers every ``m <= #C + 1`` and upward
    closure of the ``< b`` set is asserted.
    """
    an = _as_analysis(X, budgets)
    k = an.hypergraph.n_vertices
    if k == 0:
        return 1, ()
    table = []
    for m in range(1, k + 2):
        value = _min_twice_gh(an.family, m, params, budgets.gh_points)
        table.append(GHScanRow(m, value, value < params.b))
        if value < params.b and not full_scan:
            break
    below = [row.m for row in table if row.below_b]
    if not below:
        raise InternalConsistencyError("no m reached min 2 d_GH < b within #C + 1")
    dim = below[0]
    if below != list(range(dim, table[-1].m + 1)):
        raise InternalConsistencyError(f"GH scan is not upward closed: {table}")
    return dim, tuple(table)


def l1_dimension_via_coloring(X, budgets: Budgets = Budgets()) -> int:
    """``min_G chi(G)`` over the graph family, checked against ``chi(Gamma(C))``."""
    an = _as_analysis(X, budgets)
    if an.hypergraph.n_vertices == 0:
        return 1
    by_graphs = min(chromatic_number(G).chi for G in an.family)
    by_hypergraph, _ = hypergraph_chromatic_number(an.hypergraph)
    if by_graphs != by_hypergraph:
        raise DisagreementDetected({"graph_family": by_graphs, "hypergraph": by_hypergraph})
    return by_graphs


def embeddable_in_dim(
    X, m: int, params: TwoDistanceParams = TwoDistanceParams(), budgets: Budgets = Budgets()
) -> bool:
    """Hypergraph ``m``-colorability, cross-checked against the GH criterion."""
    if m < 1:
        raise ParameterError("dimension must be positive")
    an = _as_analysis(X, budgets)
    if an.hypergraph.n_vertices == 0:
        return True
    colorable, _ = hypergraph_colorable(an.hypergraph, m)
    via_gh = _min_twice_gh(an.family, m, params, budgets.gh_points) < params.b
    if colorable != via_gh:
        raise DisagreementDetected({"hypergraph": colorable, "gh": via_gh, "m": m})
    return colorable


def _chain_orientation(cuts):
    """Pick one side per cut so that the chosen sides form an inclusion chain."""
    chosen = []

    def comparable(s, t):
        return s & t == s or s & t == t

    def rec(i):
        if i == len(cuts):
            return True
        for side in (cuts[i].mask, cuts[i].other_mask):
            if all(comparable(side, t) for t in chosen):
                chosen.append(side)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    return list(chosen) if rec(0) else None


def embed_from_coloring(dec: CutDecomposition, coloring, m: Optional[int] = None) -> tuple:
    """Coordinates in ``R^m`` realizing ``dec`` isometrically in the l1 norm.

    Each color class must be realizable on a line: its cuts are oriented so the
    chosen sides are nested (equivalently, initial segments of one point
    order), and a point's coordinate is the total weight of the sides that
    contain it. Every coordinate is shifted to have minimum 0.
    """
    if len(coloring) != len(dec):
        raise ParameterError("coloring must assign a color to every cut")
    if m is None:
        m = max(coloring, default=-1) + 1
    m = max(m, 1)
    n = dec.n
    coords = [[Fraction(0)] * m for _ in range(n)]
    for k in range(m):
        members = [i for i, col in enumerate(coloring) if col == k]
        sides = _chain_orientation([dec.terms[i][0] for i in members])
        if sides is None:
            raise NoLinearRealization(f"color class {k} (cuts {members}) is not realizable on a line")
        for i, side in zip(members, sides):
            w = dec.terms[i][1]
            for p in range(n):
                if side >> p & 1:
                    coords[p][k] += w
        low = min(coords[p][k] for p in range(n))
        for p in range(n):
            coords[p][k] -= low
    target = evaluate_decomposition(dec).dist
    for p in range(n):
        for q in range(p + 1, n):
            if sum(abs(u - v) for u, v in zip(coords[p], coords[q])) != target[p][q]:
                raise NoLinearRealization(f"embedding misses d({p},{q})")
    return tuple(tuple(row) for row in coords)


def cross_validate(
    X,
    params: TwoDistanceParams = TwoDistanceParams(),
    budgets: Budgets = Budgets(),
    route: str = "all",
    decomposition=None,
    full_scan: bool = False,
) -> L1Report:
    """Run the requested routes, compare them and attach an embedding.

    ``route`` is ``"gh"``, ``"coloring"`` or ``"all"``. Raises
    :class:`DisagreementDetected` when any two computed values differ.
    """
    if route not in ("gh", "coloring", "all"):
        raise ParameterError(f"unknown route {route!r}")
    an = _as_analysis(X, budgets, decomposition)
    H = an.hypergraph
    dim_gh = dim_col = dim_hyp = None
    table = ()
    if route in ("gh", "all"):
        dim_gh, table = l1_dimension_via_gh(an, params, budgets, full_scan)
    if route in ("coloring", "all"):
        dim_col = l1_dimension_via_coloring(an, budgets)
    dim_hyp, coloring = hypergraph_chromatic_number(H)
    dim_hyp = max(dim_hyp, 1)
    values = {"gh": dim_gh, "coloring": dim_col, "hypergraph": dim_hyp}
    computed = {v for v in values.values() if v is not None}
    if len(computed) != 1:
        raise DisagreementDetected(values)
    dim = computed.pop()
    if dim >= 2 and hypergraph_colorable(H, dim - 1)[0]:
        raise DisagreementDetected(values, "reported dimension is not minimal")
    embedding = embed_from_coloring(an.decomposition, coloring, dim)
    return L1Report(
        dimension=dim,
        route_gh=dim_gh,
        route_coloring=dim_col,
        route_hypergraph=dim_hyp,
        gh_table=table,
        embedding=embedding,
        coloring=tuple(coloring),
        decomposition=an.decomposition,
        hypergraph=H,
        family_size=len(an.family),
    )
