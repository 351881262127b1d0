"""Exact chromatic and clique cover numbers, directly and through GH distances."""
from __future__ import annotations

from dataclasses import dataclass

from .exceptions import InternalConsistencyError, ParameterError, SizeLimitExceeded
from .gh import DEFAULT_SIZE_LIMIT, gh_distance_exact
from .metric import SimpleGraph, TwoDistanceParams, complement, simplex, two_distance_from_graph

__all__ = [
    "ColoringResult",
    "MAX_COLORING_VERTICES",
    "chromatic_number",
    "clique_cover_number",
    "is_proper_coloring",
    "gh_threshold_scan",
    "chromatic_via_gh",
    "clique_cover_via_gh",
    "gh_color_bound_check",
]

MAX_COLORING_VERTICES = 16


@dataclass(frozen=True)
class ColoringResult:
    chi: int
    coloring: tuple


def is_proper_coloring(G: SimpleGraph, coloring) -> bool:
    return len(coloring) == G.n and all(coloring[u] != coloring[v] for u, v in G.edges)


def _max_clique_size(adj, order):
    best = 0

    def rec(size, cand):
        nonlocal best
        if size > best:
            best = size
        if size + bin(cand).count("1") <= best:
            return
        while cand:
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            rec(size + 1, cand & adj[v])
            if size + bin(cand).count("1") <= best:
                return

    rec(0, sum(1 << v for v in order))
    return best


def _k_coloring(adj, order, k):
    n = len(order)
    color = [-1] * len(adj)

    def rec(idx, used):
        if idx == n:
            return True
        v = order[idx]
        taken = 0
        nb = adj[v]
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            if color[u] >= 0:
                taken |= 1 << color[u]
        for col in range(min(used + 1, k)):
            if not taken >> col & 1:
                color[v] = col
                if rec(idx + 1, max(used, col + 1)):
                    return True
        color[v] = -1
        return False

    return tuple(color) if rec(0, 0) else None


def chromatic_number(G: SimpleGraph, max_vertices: int = MAX_COLORING_VERTICES) -> ColoringResult:
    """Exact chromatic number with an optimal coloring.

    Greedy coloring in descending-degree order gives the upper bound, a
    maximum clique the lower bound; the gap is closed by backtracking.
    """
    if G.n < 1:
        raise ParameterError("graph must have at least one vertex")
    if G.n > max_vertices:
        raise SizeLimitExceeded(f"exact coloring limited to {max_vertices} vertices")
    adj = G.adjacency_masks()
    order = sorted(range(G.n), key=lambda v: (-bin(adj[v]).count("1"), v))

    greedy = [-1] * G.n
    for v in order:
        taken = {greedy[u] for u in range(G.n) if adj[v] >> u & 1}
        greedy[v] = next(c for c in range(G.n) if c not in taken)
    upper = max(greedy) + 1
    best = tuple(greedy)

    for k in range(_max_clique_size(adj, order), upper):
        found = _k_coloring(adj, order, k)
        if found is not None:
            best, upper = found, k
            break
    if not is_proper_coloring(G, best) or len(set(best)) != upper:
        raise InternalConsistencyError("coloring search returned an invalid witness")
    return ColoringResult(upper, best)


def clique_cover_number(G: SimpleGraph, max_vertices: int = MAX_COLORING_VERTICES):
    """Least number of cliques partitioning ``V(G)``, with the cliques."""
    res = chromatic_number(complement(G), max_vertices)
    cover = tuple(
        tuple(v for v in range(G.n) if res.coloring[v] == c) for c in range(res.chi)
    )
    for clique in cover:
        for i, u in enumerate(clique):
            for v in clique[i + 1:]:
                if not G.has_edge(u, v):
                    raise InternalConsistencyError(f"cover class {clique} is not a clique")
    return res.chi, cover


def gh_threshold_scan(V, a, b, size_limit: int = DEFAULT_SIZE_LIMIT, full: bool = False):
    """List ``(k, 2 d_GH(a Delta_k, V))`` for ``k = 1, 2, ...``.

    Stops after the first ``k`` whose value is below ``b`` unless ``full``, in
    which case every ``k <= #V + 1`` is computed.
    """
    rows = []
    for k in range(1, V.n + 2):
        twice = 2 * gh_distance_exact(simplex(k, a), V, size_limit).distance
        if twice > b:
            raise InternalConsistencyError(f"2 d_GH = {twice} exceeds b = {b}")
        rows.append((k, twice))
        if twice < b and not full:
            break
    return rows


def _greatest_k_at_b(rows, b):
    """Greatest ``k`` with value ``b`` (0 if none), checking monotonicity."""
    hits = [k for k, v in rows if v == b]
    m = max(hits, default=0)
    if hits != list(range(1, m + 1)):
        raise InternalConsistencyError(f"threshold scan is not monotone: {rows}")
    return m


def chromatic_via_gh(
    G: SimpleGraph, params: TwoDistanceParams = TwoDistanceParams(), size_limit: int = DEFAULT_SIZE_LIMIT
) -> int:
    V = two_distance_from_graph(G, params, adjacent_gets="b")
    rows = gh_threshold_scan(V, params.a, params.b, size_limit)
    return _greatest_k_at_b(rows, params.b) + 1


def clique_cover_via_gh(
    G: SimpleGraph, params: TwoDistanceParams = TwoDistanceParams(), size_limit: int = DEFAULT_SIZE_LIMIT
) -> int:
    V = two_distance_from_graph(G, params, adjacent_gets="a")
    rows = gh_threshold_scan(V, params.a, params.b, size_limit)
    return _greatest_k_at_b(rows, params.b) + 1


def gh_color_bound_check(
    G: SimpleGraph, k: int, params: TwoDistanceParams = TwoDistanceParams(), size_limit: int = DEFAULT_SIZE_LIMIT
) -> bool:
    """Whether ``2 d_GH(a Delta_k, V) = b``; if so, ``chi(G) > k`` is confirmed."""
    if k < 1:
        raise ParameterError("k must be positive")
    V = two_distance_from_graph(G, params, adjacent_gets="b")
    twice = 2 * gh_distance_exact(simplex(k, params.a), V, size_limit).distance
    hit = twice == params.b
    if hit and chromatic_number(G).chi <= k:
        raise InternalConsistencyError(f"2 d_GH = b at k={k} but the graph is {k}-colorable")
    return hit
