"""Exact Gromov-Hausdorff distance between small finite metric spaces.

The distance is half the least distortion of a correspondence. The minimum is
attained at one of finitely many candidate values ``|d_X(x,x') - d_Y(y,y')|``,
so :func:`gh_distance_exact` binary-searches those candidates with an exact
decision procedure.

Decision procedure
------------------
A relation has distortion ``<= t`` iff its pairs are pairwise *compatible*:
``|d_X(x,x') - d_Y(y,y')| <= t``. Every correspondence contains one of the form
``{(x, f(x))} | {(g(y), y) : y not in f(X)}``, so it suffices to search maps
``f`` then ``g``, keeping the set of nodes compatible with everything chosen
so far as a bitmask. Twin points of the codomain (points a transposition
swaps isometrically) are interchangeable, which lets the search fix the order
in which members of a twin class are first used.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .exceptions import NotACorrespondence, ParameterError, SizeLimitExceeded
from .metric import FinitePseudometricSpace, diam, simplex
from .rational import as_rational, common_denominator

__all__ = [
    "Correspondence",
    "GHResult",
    "BorsukReport",
    "DEFAULT_SIZE_LIMIT",
    "distortion",
    "gh_distance_exact",
    "gh_distance_below",
    "gh_simplex_closed_form",
    "gh_bounds",
    "borsuk_partition_exists",
    "verify_borsuk_theorem",
    "twin_classes",
]

DEFAULT_SIZE_LIMIT = 8


@dataclass(frozen=True)
class Correspondence:
    pairs: frozenset

    @classmethod
    def from_pairs(cls, pairs) -> "Correspondence":
        return cls(frozenset((int(i), int(j)) for i, j in pairs))

    def check(self, nx: int, ny: int) -> None:
        xs = {i for i, _ in self.pairs}
        ys = {j for _, j in self.pairs}
        if any(not (0 <= i < nx and 0 <= j < ny) for i, j in self.pairs):
            raise NotACorrespondence("pair index out of range")
        if xs != set(range(nx)) or ys != set(range(ny)):
            raise NotACorrespondence("relation is not surjective in both directions")

    def transpose(self) -> "Correspondence":
        return Correspondence(frozenset((j, i) for i, j in self.pairs))

    def sorted_pairs(self) -> list:
        return sorted(self.pairs)

    def is_irreducible(self) -> bool:
        """True iff no pair can be dropped without losing surjectivity."""
        img, pre = {}, {}
        for i, j in self.pairs:
            img[i] = img.get(i, 0) + 1
            pre[j] = pre.get(j, 0) + 1
        return all(img[i] == 1 or pre[j] == 1 for i, j in self.pairs)


@dataclass(frozen=True)
class GHResult:
    distance: Fraction
    witness: Correspondence


@dataclass(frozen=True)
class BorsukReport:
    m: int
    lam: Fraction
    diam: Fraction
    partition_exists: bool
    partition: Optional[tuple]
    twice_gh: Fraction

    @property
    def passed(self) -> bool:
        if self.partition_exists:
            return self.twice_gh < self.diam
        return self.twice_gh == self.diam


def distortion(R: Correspondence, X: FinitePseudometricSpace, Y: FinitePseudometricSpace) -> Fraction:
    R.check(X.n, Y.n)
    pairs = R.sorted_pairs()
    worst = Fraction(0)
    for a, (x, y) in enumerate(pairs):
        for x2, y2 in pairs[a + 1:]:
            gap = abs(X.dist[x][x2] - Y.dist[y][y2])
            if gap > worst:
                worst = gap
    return worst


def twin_classes(matrix) -> tuple:
    """Partition points into classes of mutual twins.

    ``x`` and ``x'`` are twins when ``d(x, z) == d(x', z)`` for every other
    ``z``, so swapping them is an isometry; the relation is an equivalence.
    Returns ``(class_of, position_in_class, classes)``.
    """
    n = len(matrix)
    classes = []
    class_of = [0] * n
    pos = [0] * n
    for x in range(n):
        for c, members in enumerate(classes):
            r = members[0]
            if all(matrix[x][z] == matrix[r][z] for z in range(n) if z != x and z != r):
                class_of[x] = c
                pos[x] = len(members)
                members.append(x)
                break
        else:
            class_of[x] = len(classes)
            classes.append([x])
    return class_of, pos, classes


def _scaled(X: FinitePseudometricSpace, Y: FinitePseudometricSpace):
    den = common_denominator(v for M in (X.dist, Y.dist) for row in M for v in row)
    DX = [[int(v * den) for v in row] for row in X.dist]
    DY = [[int(v * den) for v in row] for row in Y.dist]
    return DX, DY, den


class _Decider:
    """Exact test ``exists correspondence with distortion <= t`` for fixed X, Y.

    ``X`` is the domain of the map ``f``; twin symmetry is broken on ``Y``.
    """

    def __init__(self, DX, DY):
        self.nx, self.ny = len(DX), len(DY)
        nx, ny = self.nx, self.ny
        big = max([abs(v) for row in DX + DY for v in row] + [0])
        dtype = np.int64 if big < 2**60 else object
        ax = np.array(DX, dtype=dtype).reshape(nx, nx)
        ay = np.array(DY, dtype=dtype).reshape(ny, ny)
        # gap[(x, y), (x', y')] = |d_X(x, x') - d_Y(y, y')|
        self.gap = np.abs(ax[:, None, :, None] - ay[None, :, None, :]).reshape(nx * ny, nx * ny)
        self.row_masks = [sum(1 << (x * ny + y) for y in range(ny)) for x in range(nx)]
        self.col_masks = [sum(1 << (x * ny + y) for x in range(nx)) for y in range(ny)]
        self.y_class, self.y_pos, self.y_classes = twin_classes(DY)

    def _compat(self, t):
        ok = self.gap <= t
        n = ok.shape[1]
        packed = np.packbits(ok, axis=1, bitorder="little")
        return [int.from_bytes(row.tobytes(), "little") & ((1 << n) - 1) for row in packed]

    def decide(self, t):
        """Return ``(f, g_pairs)`` for a witness, or ``None``."""
        nx, ny = self.nx, self.ny
        compat = self._compat(t)
        row_masks, col_masks = self.row_masks, self.col_masks
        y_class, y_pos = self.y_class, self.y_pos
        used = [0] * len(self.y_classes)
        f = [0] * nx

        def alive(cand, first_x):
            for y in range(ny):
                if not cand & col_masks[y]:
                    return False
            for x in range(first_x, nx):
                if not cand & row_masks[x]:
                    return False
            return True

        def rec_g(k, cand, todo, g):
            if k == len(todo):
                return list(g)
            y = todo[k]
            lo = g[k - 1] if k and y_class[todo[k - 1]] == y_class[y] else 0
            for x in range(lo, nx):
                node = x * ny + y
                if cand >> node & 1:
                    nc = cand & compat[node]
                    if all(nc & col_masks[z] for z in todo[k + 1:]):
                        g.append(x)
                        res = rec_g(k + 1, nc, todo, g)
                        if res is not None:
                            return res
                        g.pop()
            return None

        def rec_f(x, cand):
            if x == nx:
                todo = sorted(
                    (y for y in range(ny) if y_pos[y] >= used[y_class[y]]),
                    key=lambda y: (y_class[y], y_pos[y]),
                )
                g = rec_g(0, cand, todo, [])
                if g is None:
                    return None
                return list(f), list(zip(g, todo))
            base = x * ny
            for y in range(ny):
                node = base + y
                if not cand >> node & 1:
                    continue
                c, p = y_class[y], y_pos[y]
                if p > used[c]:
                    continue
                nc = cand & compat[node]
                if not alive(nc, x + 1):
                    continue
                fresh = p == used[c]
                if fresh:
                    used[c] += 1
                f[x] = y
                res = rec_f(x + 1, nc)
                if res is not None:
                    return res
                if fresh:
                    used[c] -= 1
            return None

        full = (1 << (nx * ny)) - 1
        return rec_f(0, full)


def _orient(X, Y):
    """Decide which space is the search domain; returns True to swap."""
    _, _, cx = twin_classes(X.dist)
    _, _, cy = twin_classes(Y.dist)
    gain_x, gain_y = X.n - len(cx), Y.n - len(cy)
    if gain_x != gain_y:
        return gain_x > gain_y
    return X.n > Y.n


def _candidates(DX, DY, lo, hi):
    vx = {v for row in DX for v in row}
    vy = {v for row in DY for v in row}
    return sorted({abs(p - q) for p in vx for q in vy if lo <= abs(p - q) <= hi})


def _check_size(X, Y, size_limit):
    if max(X.n, Y.n) > size_limit:
        raise SizeLimitExceeded(
            f"exact GH search limited to {size_limit} points per side, got {X.n} and {Y.n}"
        )


def _witness(res, swap):
    f, gpairs = res
    pairs = {(x, y) for x, y in enumerate(f)} | set(gpairs)
    # drop redundant pairs in sorted order; distortion cannot grow
    img, pre = {}, {}
    for x, y in pairs:
        img[x] = img.get(x, 0) + 1
        pre[y] = pre.get(y, 0) + 1
    for x, y in sorted(pairs):
        if img[x] > 1 and pre[y] > 1:
            pairs.discard((x, y))
            img[x] -= 1
            pre[y] -= 1
    R = Correspondence(frozenset(pairs))
    return R.transpose() if swap else R


def gh_distance_exact(
    X: FinitePseudometricSpace, Y: FinitePseudometricSpace, size_limit: int = DEFAULT_SIZE_LIMIT
) -> GHResult:
    """Exact ``d_GH(X, Y)`` with a correspondence of least distortion.

    Raises :class:`SizeLimitExceeded` when either side has more than
    ``size_limit`` points; nothing is approximated.
    """
    _check_size(X, Y, size_limit)
    swap = _orient(X, Y)
    A, B = (Y, X) if swap else (X, Y)
    DA, DB, den = _scaled(A, B)
    da = max((v for row in DA for v in row), default=0)
    db = max((v for row in DB for v in row), default=0)
    cands = _candidates(DA, DB, abs(da - db), max(da, db))
    decider = _Decider(DA, DB)
    lo, hi = 0, len(cands) - 1
    best = decider.decide(cands[hi])
    if best is None:
        raise AssertionError("full relation must realize the diameter bound")
    while lo < hi:
        mid = (lo + hi) // 2
        res = decider.decide(cands[mid])
        if res is None:
            lo = mid + 1
        else:
            hi, best = mid, res
    return GHResult(Fraction(cands[hi], 2 * den), _witness(best, swap))


def gh_distance_below(
    X: FinitePseudometricSpace,
    Y: FinitePseudometricSpace,
    bound,
    size_limit: int = DEFAULT_SIZE_LIMIT,
) -> bool:
    """Decide ``2 d_GH(X, Y) < bound`` with a single exact decision."""
    _check_size(X, Y, size_limit)
    bound = as_rational(bound)
    swap = _orient(X, Y)
    A, B = (Y, X) if swap else (X, Y)
    den = common_denominator(
        [bound] + [v for M in (A.dist, B.dist) for row in M for v in row]
    )
    DA = [[int(v * den) for v in row] for row in A.dist]
    DB = [[int(v * den) for v in row] for row in B.dist]
    limit = int(bound * den)
    below = [c for c in _candidates(DA, DB, 0, limit) if c < limit]
    if not below:
        return False
    return _Decider(DA, DB).decide(below[-1]) is not None


def gh_simplex_closed_form(lam, m: int, X: FinitePseudometricSpace) -> Fraction:
    """``d_GH(lam * Delta_m, X)`` for ``m > #X``: half of ``max(lam, diam X - lam)``."""
    lam = as_rational(lam)
    if lam < 0:
        raise ParameterError("NegativeLambda")
    if m <= X.n:
        raise ParameterError(f"PreconditionViolated: need m > #X, got m={m}, #X={X.n}")
    return max(lam, diam(X) - lam) / 2


def gh_bounds(X: FinitePseudometricSpace, Y: FinitePseudometricSpace) -> tuple:
    dx, dy = diam(X), diam(Y)
    return abs(dx - dy) / 2, max(dx, dy) / 2


def borsuk_partition_exists(X: FinitePseudometricSpace, m: int):
    """Split ``X`` into exactly ``m`` nonempty parts of diameter ``< diam X``.

    Returns ``(True, parts)`` with parts as sorted tuples, or ``(False, None)``.
    """
    if not 2 <= m <= X.n:
        raise ParameterError(f"BadCardinality: need 2 <= m <= #X, got m={m}, #X={X.n}")
    D = diam(X)
    d = X.dist
    n = X.n
    parts: list = []

    def rec(p):
        if n - p < m - len(parts):
            return False
        if p == n:
            return len(parts) == m
        for part in parts:
            if all(d[p][q] < D for q in part):
                part.append(p)
                if rec(p + 1):
                    return True
                part.pop()
        if len(parts) < m:
            parts.append([p])
            if rec(p + 1):
                return True
            parts.pop()
        return False

    if rec(0):
        return True, tuple(tuple(part) for part in parts)
    return False, None


def verify_borsuk_theorem(
    X: FinitePseudometricSpace, m: int, lam, size_limit: int = DEFAULT_SIZE_LIMIT
) -> BorsukReport:
    """Compare the partition criterion against ``2 d_GH(lam * Delta_m, X)``."""
    lam = as_rational(lam)
    D = diam(X)
    if not 0 < lam < D:
        raise ParameterError(f"need 0 < lambda < diam X = {D}, got {lam}")
    exists, parts = borsuk_partition_exists(X, m)
    twice = 2 * gh_distance_exact(simplex(m, lam), X, size_limit).distance
    return BorsukReport(m, lam, D, exists, parts, twice)
