"""Slow, obviously-correct reference implementations used only by tests."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product


def _distortion(pairs, dx, dy):
    return max(
        (abs(dx[x][x2] - dy[y][y2]) for (x, y) in pairs for (x2, y2) in pairs),
        default=Fraction(0),
    )


def _is_correspondence(pairs, nx, ny):
    return {x for x, _ in pairs} == set(range(nx)) and {y for _, y in pairs} == set(range(ny))


def brute_gh_subsets(X, Y):
    """Half the least distortion over every subset of ``X x Y``; keep ``#X * #Y <= 12``."""
    cells = list(product(range(X.n), range(Y.n)))
    best = None
    for mask in range(1, 1 << len(cells)):
        pairs = [c for k, c in enumerate(cells) if mask >> k & 1]
        if not _is_correspondence(pairs, X.n, Y.n):
            continue
        dis = _distortion(pairs, X.dist, Y.dist)
        if best is None or dis < best:
            best = dis
    return best / 2


def brute_gh_maps(X, Y):
    """Same value from relations ``graph(f) U graph(g)^T``, which suffice by monotonicity."""
    best = None
    for f in product(range(Y.n), repeat=X.n):
        for g in product(range(X.n), repeat=Y.n):
            pairs = set(enumerate(f)) | {(x, y) for y, x in enumerate(g)}
            dis = _distortion(pairs, X.dist, Y.dist)
            if best is None or dis < best:
                best = dis
    return best / 2


def set_partitions(n, m):
    """All partitions of ``range(n)`` into exactly ``m`` nonempty blocks."""

    def rec(i, blocks):
        if i == n:
            if len(blocks) == m:
                yield [tuple(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        if len(blocks) < m:
            blocks.append([i])
            yield from rec(i + 1, blocks)
            blocks.pop()

    yield from rec(0, [])


def brute_borsuk(X, m):
    D = max((v for row in X.dist for v in row), default=Fraction(0))
    for parts in set_partitions(X.n, m):
        if all(X.dist[p][q] < D for part in parts for p, q in combinations(part, 2)):
            return True
    return False


def brute_chromatic(G):
    for k in range(1, G.n + 1):
        for colors in product(range(k), repeat=G.n):
            if all(colors[u] != colors[v] for u, v in G.edges):
                return k
    return max(G.n, 1) if G.n else 0


def brute_hypergraph_colorable(k, pairs, triples, m):
    for colors in product(range(m), repeat=k):
        if any(colors[i] == colors[j] for i, j in pairs):
            continue
        if any(colors[i] == colors[j] == colors[l] for i, j, l in triples):
            continue
        return True
    return k == 0
