"""Acceptance gate: one pass/fail line per criterion.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``. Every comparison is exact rational
equality; nothing here has a tolerance.
"""
from __future__ import annotations

import io
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import brute_borsuk  # noqa: E402

from l1embed.chromatic import chromatic_number, chromatic_via_gh, clique_cover_number, clique_cover_via_gh  # noqa: E402
from l1embed.cli import main as cli_main  # noqa: E402
from l1embed.cuts import all_cuts, cut_metric, decompose, evaluate_decomposition  # noqa: E402
from l1embed.exceptions import L1EmbedError, NotInCutCone  # noqa: E402
from l1embed.generators import (  # noqa: E402
    cut_sum,
    equilateral,
    k23_metric,
    path_metric,
    random_decomposition,
    random_graph,
    random_metric,
)
from l1embed.gh import gh_distance_exact, gh_simplex_closed_form, verify_borsuk_theorem  # noqa: E402
from l1embed.l1dim import cross_validate  # noqa: E402
from l1embed.metric import MetricError, SimpleGraph, TwoDistanceParams, diam, simplex, validate_metric  # noqa: E402
from l1embed.nesting import NestingHypergraph, enumerate_graph_family, hypergraph_colorable  # noqa: E402

RESULTS: dict = {}
PARAMS = [TwoDistanceParams(1, 2), TwoDistanceParams(2, 3), TwoDistanceParams(3, 4)]


def _l1_exact(points, space):
    return all(
        sum(abs(u - v) for u, v in zip(points[i], points[j])) == space.d(i, j)
        for i, j in combinations(range(space.n), 2)
    )


def _pipeline_ok(space):
    rep = cross_validate(space, full_scan=True)
    routes = (rep.route_gh, rep.route_coloring, rep.route_hypergraph)
    return len(set(routes)) == 1 and rep.dimension == routes[0] and _l1_exact(rep.embedding, space)


def _cut_sum_instance(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    k = rng.randint(1, min(4, (1 << (n - 1)) - 1))
    return cut_sum(n, k, seed)


def _grid_metrics():
    grids = {
        1: [],
        2: [Fraction(1, 2), Fraction(1), Fraction(2)],
        3: [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)],
        4: [Fraction(1), Fraction(2), Fraction(3)],
    }
    yield simplex(1)
    for n in (2, 3, 4):
        pairs = list(combinations(range(n), 2))
        for values in product(grids[n], repeat=len(pairs)):
            M = [[Fraction(0)] * n for _ in range(n)]
            for (i, j), v in zip(pairs, values):
                M[i][j] = M[j][i] = v
            try:
                yield validate_metric(M)
            except MetricError:
                continue


def criterion_1():
    """l1-dimension routes agree and embeddings are exact."""
    failures, count = [], 0
    for seed in range(500):
        count += 1
        if not _pipeline_ok(_cut_sum_instance(seed)):
            failures.append(f"cut-sum seed {seed}")
    grid = 0
    for X in _grid_metrics():
        grid += 1
        if not _pipeline_ok(X):
            failures.append(f"grid {X.dist}")
    return not failures, f"{count} cut-sum + {grid} grid metrics, {len(failures)} failures {failures[:3]}"


def criterion_2():
    """Partition into m smaller-diameter parts iff 2 d_GH(lam Delta_m, X) < diam X."""
    failures, checks = [], 0
    for seed in range(200):
        X = random_metric(2 + seed % 6, seed)
        D = diam(X)
        for m in range(2, X.n + 1):
            oracle = brute_borsuk(X, m)
            for k in range(1, 8):
                rep = verify_borsuk_theorem(X, m, D * k / 8)
                checks += 1
                if not rep.passed or rep.partition_exists != oracle:
                    failures.append((seed, m, k))
    return not failures, f"200 metrics (n 2..7), {checks} (m, lambda) checks, {len(failures)} failures {failures[:3]}"


def criterion_3():
    """d_GH(lam Delta_m, X) = max(lam, diam X - lam) / 2 whenever m > #X."""
    failures = []
    for seed in range(200):
        rng = random.Random(seed)
        X = random_metric(rng.randint(1, 5), seed)
        m = X.n + rng.randint(1, 3)
        D = diam(X)
        lam = Fraction(rng.randint(0, 24), 12) * D if D else Fraction(rng.randint(0, 24), 12)
        got = gh_distance_exact(simplex(m, lam), X).distance
        if got != gh_simplex_closed_form(lam, m, X) or got != max(lam, D - lam) / 2:
            failures.append((seed, m, lam))
    return not failures, f"200 instances, {len(failures)} mismatches {failures[:3]}"


def _all_graphs(max_n):
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield SimpleGraph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def criterion_4():
    """Chromatic and clique cover numbers recovered from GH distances."""
    graphs = list(_all_graphs(5))
    exhaustive = sum(1 for G in graphs if G.n == 5)
    graphs += [random_graph(6 + seed % 2, seed) for seed in range(100)]
    failures = []
    for G in graphs:
        chi, theta = chromatic_number(G).chi, clique_cover_number(G)[0]
        for p in PARAMS:
            if chromatic_via_gh(G, p) != chi or clique_cover_via_gh(G, p) != theta:
                failures.append((G.n, G.sorted_edges(), p))
    return not failures, (
        f"{len(graphs)} graphs ({exhaustive} on 5 vertices, 100 on 6-7) x 3 (a, b), "
        f"{len(failures)} failures {failures[:2]}"
    )


def criterion_5():
    """Hypergraph m-colorable iff its graph family has an m-colorable member."""
    chi_cache: dict = {}

    def chi(G):
        key = (G.n, G.edges)
        if key not in chi_cache:
            chi_cache[key] = chromatic_number(G).chi
        return chi_cache[key]

    failures, count = [], 0
    for k in range(1, 6):
        pairs = list(combinations(range(k), 2))
        triples = list(combinations(range(k), 3))
        pair_sets = [s for r in range(3) for s in combinations(pairs, r)]
        triple_sets = [s for r in range(4) for s in combinations(triples, r)]
        for P in pair_sets:
            for T in triple_sets:
                H = NestingHypergraph(tuple(range(k)), frozenset(P), frozenset(T))
                best = min(chi(G) for G in enumerate_graph_family(H))
                count += 1
                for m in range(1, 5):
                    if hypergraph_colorable(H, m)[0] != (best <= m):
                        failures.append((k, P, T, m))
    return not failures, f"{count} hypergraphs x m = 1..4, {len(failures)} failures {failures[:2]}"


def criterion_6():
    """Cut cone membership, K_{2,3} rejection with certificate, round trips."""
    notes = []
    bad = []
    for seed in range(500):
        X = random_metric(3 + seed % 2, seed)
        if evaluate_decomposition(decompose(X)).dist != X.dist:
            bad.append(seed)
    notes.append(f"500 random 3/4-point metrics decompose ({len(bad)} failures)")

    d = k23_metric()
    # independent certificate: b = (-1, -1, +1, +1, +1) over parts {0,1} and {2,3,4};
    # sum_{i<j} b_i b_j d(i,j) = 3 * 2 + 1 * 2 - 6 * 1 = 2 > 0, impossible for l1 metrics
    b = [-1, -1, 1, 1, 1]
    inequality = sum(b[i] * b[j] * d.d(i, j) for i, j in combinations(range(5), 2))
    cone_ok = all(sum(b[i] * b[j] * cut_metric(c, i, j) for i, j in combinations(range(5), 2)) <= 0
                  for c in all_cuts(5))
    try:
        decompose(d)
        rejected, lp_cert_ok = False, False
    except NotInCutCone as exc:
        y = exc.certificate
        rejected = True
        lp_cert_ok = all(
            sum(v * cut_metric(c, i, j) for (i, j), v in y.items()) <= 0 for c in all_cuts(5)
        ) and sum(v * d.d(i, j) for (i, j), v in y.items()) > 0
    k23_ok = rejected and lp_cert_ok and inequality == 2 and cone_ok
    notes.append(f"K23 rejected={rejected} LP certificate valid={lp_cert_ok} hand inequality value={inequality}")

    trips = 0
    for seed in range(500):
        rng = random.Random(seed)
        n = rng.randint(2, 6)
        dec = random_decomposition(n, rng.randint(1, min(6, (1 << (n - 1)) - 1)), seed)
        target = evaluate_decomposition(dec)
        if evaluate_decomposition(decompose(target)).dist != target.dist:
            bad.append(("round-trip", seed))
        trips += 1
    notes.append(f"{trips} round trips")
    return not bad and k23_ok, "; ".join(notes)


def criterion_7():
    """Named instances: dimensions 1, 2, 2 with checked coordinates."""
    named = [("path (1,1,2)", path_metric(3), 1), ("triangle 2", equilateral(3, 2), 2),
             ("4-point equilateral 2", equilateral(4, 2), 2)]
    parts, ok = [], True
    for label, X, expected in named:
        rep = cross_validate(X, full_scan=True)
        good = rep.dimension == expected and _l1_exact(rep.embedding, X) and len(rep.embedding[0]) == expected
        ok &= good
        parts.append(f"{label} -> {rep.dimension}")
    # hand coordinates for the 4-point case
    hand = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    ok &= _l1_exact(hand, equilateral(4, 2))
    return ok, ", ".join(parts)


def _cli_bytes(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli_main(argv)
    return code, out.getvalue()


def _golden_run(case):
    from test_cli import DATA

    name, argv, _ = case
    argv = [str(DATA / a) if a.endswith(".json") else a for a in argv]
    return name, _cli_bytes(argv)


def criterion_8():
    """Byte-identical self-test and goldens, sequential vs parallel."""
    from test_cli import CASES, GOLDEN

    s1 = _cli_bytes(["selftest"])
    s2 = _cli_bytes(["selftest"])
    s3 = _cli_bytes(["selftest", "--jobs", "2"])
    selftest_ok = s1 == s2 == s3 and s1[0] == 0
    seq = [_golden_run(c) for c in CASES]
    seq2 = [_golden_run(c) for c in CASES]
    with ProcessPoolExecutor(max_workers=2) as pool:
        par = list(pool.map(_golden_run, CASES))
    matches = sum(out == (GOLDEN / f"{name}.json").read_text() for name, (_, out) in seq)
    golden_ok = seq == seq2 == par and matches == len(CASES)
    return selftest_ok and golden_ok, (
        f"selftest identical x3 (jobs 1, 1, 2): {selftest_ok}; "
        f"{matches}/{len(CASES)} goldens match, sequential == parallel: {seq == par}"
    )


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def _run(number):
    func = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        ok, detail = func()
    except L1EmbedError as exc:
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {func.__doc__.strip()} :: {detail} ({elapsed:.1f}s)"
    RESULTS[number] = line
    print(line)
    return ok, line


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number):
    ok, line = _run(number)
    assert ok, line


if __name__ == "__main__":
    outcomes = [_run(k)[0] for k in range(1, len(CRITERIA) + 1)]
    sys.exit(0 if all(outcomes) else 1)
