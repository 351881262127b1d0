"""Cuts, cut pseudometrics and exact cut-cone membership."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .exceptions import InternalConsistencyError, NotInCutCone, ParameterError, TooManyPoints
from .metric import FinitePseudometricSpace, validate_metric
from .rational import as_rational

__all__ = [
    "Cut",
    "CutDecomposition",
    "MAX_CUT_POINTS",
    "cut_metric",
    "all_cuts",
    "evaluate_decomposition",
    "decompose",
    "is_in_cut_cone",
    "feasibility_lp",
    "lp_cut_order",
]

MAX_CUT_POINTS = 14


@dataclass(frozen=True, order=True)
class Cut:
    """A bipartition ``{S, S'}`` of ``0..n-1`` stored by the side holding 0.

    Ordering and equality follow ``(n, mask)`` where ``mask`` is the bitmask
    of the canonical side.
    """

    n: int
    mask: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.n < 2 or not 0 < self.mask < full:
            raise ParameterError(f"not a proper nonempty side: mask={self.mask:b}, n={self.n}")
        if not self.mask & 1:
            object.__setattr__(self, "mask", full ^ self.mask)

    @classmethod
    def from_side(cls, side: Iterable[int], n: int) -> "Cut":
        mask = 0
        for p in side:
            if not 0 <= p < n:
                raise ParameterError(f"point {p} out of range for n={n}")
            mask |= 1 << p
        return cls(n, mask)

    @property
    def side(self) -> tuple:
        return tuple(p for p in range(self.n) if self.mask >> p & 1)

    @property
    def other(self) -> tuple:
        return tuple(p for p in range(self.n) if not self.mask >> p & 1)

    @property
    def other_mask(self) -> int:
        return ((1 << self.n) - 1) ^ self.mask

    def separates(self, i: int, j: int) -> bool:
        return bool((self.mask >> i ^ self.mask >> j) & 1)

    def __repr__(self):
        return f"Cut({set(self.side)}|{set(self.other)})"


@dataclass(frozen=True)
class CutDecomposition:
    """The pseudometric ``sum(weight * delta_cut)`` over ``terms``."""

    n: int
    terms: tuple = ()

    def __post_init__(self):
        terms = tuple((c, as_rational(w)) for c, w in self.terms)
        seen = set()
        for c, w in terms:
            if c.n != self.n:
                raise ParameterError("cut ambient size differs from decomposition")
            if w <= 0:
                raise ParameterError(f"cut weights must be positive, got {w}")
            if c in seen:
                raise ParameterError(f"repeated cut {c!r}")
            seen.add(c)
        object.__setattr__(self, "terms", terms)

    @property
    def cuts(self) -> list:
        return [c for c, _ in self.terms]

    @property
    def weights(self) -> list:
        return [w for _, w in self.terms]

    def __len__(self):
        return len(self.terms)


def cut_metric(c: Cut, i: int, j: int) -> int:
    return 1 if c.separates(i, j) else 0


def all_cuts(n: int, max_points: int = MAX_CUT_POINTS) -> list:
    """All ``2**(n-1) - 1`` cuts of ``n`` points, ascending by canonical mask."""
    if n < 2:
        raise ParameterError("cuts need at least two points")
    if n > max_points:
        raise TooManyPoints(f"{n} points exceeds the cut enumeration bound {max_points}")
    full = (1 << n) - 1
    return [Cut(n, mask) for mask in range(1, full, 2)]


def evaluate_decomposition(dec: CutDecomposition) -> FinitePseudometricSpace:
    n = dec.n
    M = [[Fraction(0)] * n for _ in range(n)]
    for c, w in dec.terms:
        for i, j in combinations(range(n), 2):
            if c.separates(i, j):
                M[i][j] += w
                M[j][i] += w
    return validate_metric(M, allow_pseudo=True)


def feasibility_lp(A: Sequence[Sequence], b: Sequence):
    """Phase-1 simplex for ``A x = b, x >= 0`` in exact arithmetic.

    ``b`` must be nonnegative. Pivoting follows Bland's rule over the column
    order given. Returns ``(x, None)`` with a basic feasible solution, or
    ``(None, y)`` with a Farkas vector: ``y @ A <= 0`` columnwise and
    ``y @ b > 0``.
    """
    rows, cols = len(A), len(A[0]) if A else 0
    if any(v < 0 for v in b):
        raise ParameterError("right-hand side must be nonnegative")
    width = cols + rows
    T = [[Fraction(v) for v in A[i]] + [Fraction(int(k == i)) for k in range(rows)] + [Fraction(b[i])]
         for i in range(rows)]
    basis = [cols + i for i in range(rows)]
    # reduced costs of min sum(artificials)
    cost = [-sum(T[i][j] for i in range(rows)) for j in range(cols)] + [Fraction(0)] * rows
    obj = sum((T[i][-1] for i in range(rows)), Fraction(0))

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(rows):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # phase-1 objective is bounded below by 0
            raise InternalConsistencyError("unbounded phase-1 direction")
        piv_row = T[leave]
        p = piv_row[enter]
        if p != 1:
            piv_row = [v / p for v in piv_row]
            T[leave] = piv_row
        for i in range(rows):
            if i != leave:
                factor = T[i][enter]
                if factor:
                    Ti = T[i]
                    T[i] = [u - factor * v for u, v in zip(Ti, piv_row)]
        factor = cost[enter]
        cost = [u - factor * v for u, v in zip(cost, piv_row[:width])]
        obj += factor * piv_row[-1]
        basis[leave] = enter

    if obj > 0:
        y = [1 - cost[cols + i] for i in range(rows)]
        return None, y
    x = [Fraction(0)] * cols
    for i, var in enumerate(basis):
        if var < cols:
            x[var] = T[i][-1]
    return x, None


def lp_cut_order(cuts: Sequence[Cut]) -> list:
    """Indices of ``cuts`` sorted by ``(|S| * |S'|, mask)``."""

    def key(k):
        c = cuts[k]
        s = bin(c.mask).count("1")
        return s * (c.n - s), c.mask

    return sorted(range(len(cuts)), key=key)


def decompose(
    d: FinitePseudometricSpace,
    max_points: int = MAX_CUT_POINTS,
    variable_order: Optional[Sequence[int]] = None,
) -> CutDecomposition:
    """Write ``d`` as a positive combination of cut metrics, exactly.

    Decompositions are not unique; the one returned is the basic solution
    reached by Bland's rule with columns ordered by :func:`lp_cut_order`
    (fewest separated pairs first, then mask), or by ``variable_order``
    (a permutation of :func:`all_cuts` indices) when given.
    Raises :class:`NotInCutCone` carrying a separating certificate.
    """
    n = d.n
    if n == 1:
        return CutDecomposition(1, ())
    cuts = all_cuts(n, max_points)
    if variable_order is None:
        variable_order = lp_cut_order(cuts)
    elif sorted(variable_order) != list(range(len(cuts))):
        raise ParameterError("variable_order must permute the cut indices")
    cuts = [cuts[k] for k in variable_order]
    pairs = list(combinations(range(n), 2))
    A = [[1 if c.separates(i, j) else 0 for c in cuts] for i, j in pairs]
    b = [d.dist[i][j] for i, j in pairs]
    x, y = feasibility_lp(A, b)
    if x is None:
        raise NotInCutCone(dict(zip(pairs, y)))
    terms = sorted((c, w) for c, w in zip(cuts, x) if w > 0)
    dec = CutDecomposition(n, tuple(terms))
    if evaluate_decomposition(dec).dist != d.dist:
        raise InternalConsistencyError("cut decomposition does not reproduce the input")
    return dec


def is_in_cut_cone(d: FinitePseudometricSpace, max_points: int = MAX_CUT_POINTS) -> bool:
    try:
        decompose(d, max_points)
    except NotInCutCone:
        return False
    return True
