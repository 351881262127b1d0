"""Finite metric and pseudometric spaces with exact rational distances.

Points are always labelled ``0..n-1``. Optional string labels are carried
along for I/O only and never influence any computation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable, Optional, Sequence

from .exceptions import EmptySubset, MetricError, ParameterError
from .rational import as_rational

__all__ = [
    "FinitePseudometricSpace",
    "FiniteMetricSpace",
    "SimpleGraph",
    "TwoDistanceParams",
    "validate_metric",
    "check_distance_matrix",
    "diam",
    "simplex",
    "two_distance_from_graph",
    "complement",
    "hausdorff_distance",
]


@dataclass(frozen=True)
class FinitePseudometricSpace:
    """A validated finite pseudometric; build via :func:`validate_metric`."""

    dist: tuple
    labels: Optional[tuple] = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.dist)

    def __len__(self):
        return len(self.dist)

    def d(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]

    def values(self):
        """Distinct off-diagonal distances, ascending."""
        return sorted({self.dist[i][j] for i, j in combinations(range(self.n), 2)})

    def to_lists(self):
        return [list(row) for row in self.dist]


@dataclass(frozen=True)
class FiniteMetricSpace(FinitePseudometricSpace):
    """A finite metric space: a pseudometric with no zero off-diagonal entry."""


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("vertex count must be nonnegative")
        canon = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ParameterError(f"edge {e} out of range for n={self.n}")
            canon.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "SimpleGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> list:
        return [u for u in range(self.n) if u != v and self.has_edge(u, v)]

    def adjacency_masks(self) -> list:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def canonical_form(self) -> tuple:
        """Isomorphism-invariant key ``(n, edges)``.

        Vertices are split by iterated degree refinement; the lexicographically
        least edge list over relabelings that respect the split is returned.
        """
        n = self.n
        adj = self.adjacency_masks()
        nbrs = [[u for u in range(n) if adj[v] >> u & 1] for v in range(n)]
        color = [0] * n
        while True:
            sig = [(color[v], tuple(sorted(color[u] for u in nbrs[v]))) for v in range(n)]
            ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
            stable = len(ranks) == len(set(color))
            color = [ranks[sig[v]] for v in range(n)]
            if stable:
                break
        cells = [[v for v in range(n) if color[v] == c] for c in sorted(set(color))]
        best = None
        for parts in product(*(permutations(cell) for cell in cells)):
            pos = {}
            for v in (v for part in parts for v in part):
                pos[v] = len(pos)
            code = sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in self.edges)
            if best is None or code < best:
                best = code
        return n, tuple(best)


@dataclass(frozen=True)
class TwoDistanceParams:
    """Distances ``a < b <= 2a`` for two-distance spaces built from graphs."""

    a: Fraction = Fraction(1)
    b: Fraction = Fraction(2)

    def __post_init__(self):
        a, b = as_rational(self.a), as_rational(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not (0 < a < b <= 2 * a):
            raise ParameterError(f"need 0 < a < b <= 2a, got a={a}, b={b}")


def check_distance_matrix(matrix) -> list:
    """Coerce a square array-like into a list-of-lists of Fractions.

    Works with nested lists, tuples and numpy arrays (integer or object
    dtype). Only shape and scalar types are checked here.
    """
    if hasattr(matrix, "tolist"):
        matrix = matrix.tolist()
    rows = [list(row) for row in matrix]
    n = len(rows)
    if n == 0:
        raise MetricError("EmptyMatrix", (), "distance matrix has no points")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MetricError("NotSquare", (i,), f"row {i} has {len(row)} entries, expected {n}")
    return [[as_rational(v) for v in row] for row in rows]


def validate_metric(matrix, allow_pseudo: bool = False, labels: Optional[Sequence] = None):
    """Validate a distance matrix and wrap it as a space.

    Raises :class:`MetricError` naming the first violated axiom; pairs are
    scanned in row-major order before triangles ``d(i,j) <= d(i,k) + d(k,j)``.
    """
    rows = check_distance_matrix(matrix)
    n = len(rows)
    for i in range(n):
        if rows[i][i] != 0:
            raise MetricError("NonzeroDiagonal", (i,))
        for j in range(i + 1, n):
            if rows[i][j] < 0 or rows[j][i] < 0:
                raise MetricError("NegativeDistance", (i, j))
            if rows[i][j] != rows[j][i]:
                raise MetricError("Asymmetric", (i, j))
            if rows[i][j] == 0 and not allow_pseudo:
                raise MetricError("ZeroOffDiagonal", (i, j))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                if rows[i][j] > rows[i][k] + rows[k][j]:
                    raise MetricError("TriangleViolation", (i, j, k))
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise MetricError("LabelCount", (len(labels),), "label count does not match matrix")
    dist = tuple(tuple(row) for row in rows)
    if allow_pseudo:
        return FinitePseudometricSpace(dist, labels)
    return FiniteMetricSpace(dist, labels)


def diam(space: FinitePseudometricSpace) -> Fraction:
    best = Fraction(0)
    for row in space.dist:
        for v in row:
            if v > best:
                best = v
    return best


def simplex(m: int, lam=1) -> FiniteMetricSpace:
    """The ``m``-point space with every nonzero distance equal to ``lam``.

    ``lam == 0`` collapses to the one-point space.
    """
    lam = as_rational(lam)
    if lam < 0:
        raise ParameterError("NegativeLambda")
    if m < 1:
        raise ParameterError("simplex needs at least one point")
    if lam == 0:
        m = 1
    zero = Fraction(0)
    dist = tuple(tuple(zero if i == j else lam for j in range(m)) for i in range(m))
    return FiniteMetricSpace(dist)


def two_distance_from_graph(
    graph: SimpleGraph, params: TwoDistanceParams = TwoDistanceParams(), adjacent_gets: str = "b"
) -> FiniteMetricSpace:
    """Two-distance space on the vertices of ``graph``.

    Adjacent vertices are put at distance ``params.b`` (``adjacent_gets="b"``)
    or ``params.a`` (``adjacent_gets="a"``); nonadjacent ones get the other value.
    """
    if adjacent_gets not in ("a", "b"):
        raise ParameterError("adjacent_gets must be 'a' or 'b'")
    if graph.n < 1:
        raise ParameterError("graph must have at least one vertex")
    on, off = (params.b, params.a) if adjacent_gets == "b" else (params.a, params.b)
    zero = Fraction(0)
    dist = tuple(
        tuple(zero if i == j else (on if graph.has_edge(i, j) else off) for j in range(graph.n))
        for i in range(graph.n)
    )
    return FiniteMetricSpace(dist)


def complement(graph: SimpleGraph) -> SimpleGraph:
    pairs = combinations(range(graph.n), 2)
    return SimpleGraph(graph.n, frozenset(p for p in pairs if p not in graph.edges))


def hausdorff_distance(space: FinitePseudometricSpace, A: Iterable[int], B: Iterable[int]) -> Fraction:
    A, B = sorted(set(A)), sorted(set(B))
    if not A or not B:
        raise EmptySubset("Hausdorff distance needs nonempty subsets")
    d = space.dist
    forward = max(min(d[a][b] for b in B) for a in A)
    backward = max(min(d[a][b] for a in A) for b in B)
    return max(forward, backward)
