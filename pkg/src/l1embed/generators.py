"""Seeded instance generators for tests, the CLI and the self-test.

Every generator takes an explicit ``seed`` and draws only from its own
``random.Random``, so equal arguments give equal instances on every platform.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .cuts import Cut, CutDecomposition, evaluate_decomposition
from .exceptions import ParameterError
from .metric import SimpleGraph, TwoDistanceParams, two_distance_from_graph, validate_metric
from .metric import simplex as _simplex

__all__ = [
    "random_metric",
    "random_graph",
    "two_distance",
    "simplex",
    "random_decomposition",
    "cut_sum",
    "path_metric",
    "equilateral",
    "k23_metric",
]


def random_metric(n: int, seed: int, max_value: int = 6, den: int = 2):
    """Random rational metric on ``n`` points.

    Raw entries are drawn from ``[1/den, 2 * max_value]``, clamped to
    ``max_value`` and then replaced by shortest-path distances, which
    restores the triangle inequality without creating zeros.
    """
    if n < 1 or max_value < 1 or den < 1:
        raise ParameterError("need n >= 1, max_value >= 1, den >= 1")
    rng = random.Random(seed)
    cap = Fraction(max_value)
    M = [[Fraction(0)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        v = min(Fraction(rng.randint(1, 2 * max_value * den), den), cap)
        M[i][j] = M[j][i] = v
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if M[i][k] + M[k][j] < M[i][j]:
                    M[i][j] = M[i][k] + M[k][j]
    return validate_metric(M)


def random_graph(n: int, seed: int, p: Fraction = Fraction(1, 2)) -> SimpleGraph:
    if n < 1 or not 0 <= p <= 1:
        raise ParameterError("need n >= 1 and 0 <= p <= 1")
    rng = random.Random(seed)
    p = Fraction(p)
    scale = 1 << 30
    edges = [e for e in combinations(range(n), 2) if rng.randrange(scale) < p * scale]
    return SimpleGraph(n, frozenset(edges))


def two_distance(n: int, seed: int, params: TwoDistanceParams = TwoDistanceParams(), p=Fraction(1, 2)):
    return two_distance_from_graph(random_graph(n, seed, p), params, adjacent_gets="b")


def simplex(m: int, lam=1):
    return _simplex(m, lam)


def random_decomposition(n: int, cuts: int, seed: int, max_weight: int = 4, den: int = 2) -> CutDecomposition:
    """``cuts`` distinct random cuts of ``n`` points with weights in ``(0, max_weight]``."""
    total = (1 << (n - 1)) - 1 if n >= 2 else 0
    if n < 2 or not 1 <= cuts <= total:
        raise ParameterError(f"need n >= 2 and 1 <= cuts <= {total}")
    rng = random.Random(seed)
    masks = sorted(rng.sample(range(1, (1 << n) - 1, 2), cuts))
    terms = [(Cut(n, mask), Fraction(rng.randint(1, max_weight * den), den)) for mask in masks]
    return CutDecomposition(n, tuple(terms))


def cut_sum(n: int, cuts: int, seed: int, max_weight: int = 4, den: int = 2):
    """Pseudometric ``sum(w_c * delta_c)`` of a random decomposition; always in the cut cone."""
    return evaluate_decomposition(random_decomposition(n, cuts, seed, max_weight, den))


def path_metric(n: int = 3):
    """Points ``0..n-1`` on a line with unit gaps."""
    return validate_metric([[abs(i - j) for j in range(n)] for i in range(n)])


def equilateral(n: int, distance=2):
    return _simplex(n, distance)


def k23_metric():
    """Shortest-path metric of K_{2,3}: parts {0, 1} and {2, 3, 4}."""
    left = {0, 1}
    return validate_metric(
        [[0 if i == j else (2 if (i in left) == (j in left) else 1) for j in range(5)] for i in range(5)]
    )
