"""Fixed cross-validation suite behind ``l1embed selftest``.

Tasks are plain tuples handled by a top-level function, so the suite runs the
same sequentially or in a process pool; results keep task order either way.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from . import generators as gen
from .chromatic import chromatic_number, chromatic_via_gh, clique_cover_number, clique_cover_via_gh
from .cuts import decompose
from .exceptions import L1EmbedError, NotInCutCone
from .gh import gh_distance_exact, gh_simplex_closed_form, verify_borsuk_theorem
from .l1dim import cross_validate
from .metric import SimpleGraph, TwoDistanceParams, diam, simplex
from .rational import format_rational

NAMED = {
    "path-1-1-2": (gen.path_metric, 1),
    "triangle-2": (lambda: gen.equilateral(3, 2), 2),
    "equilateral4-2": (lambda: gen.equilateral(4, 2), 2),
}


def build_tasks(quick: bool = False) -> list:
    scale = 1 if quick else 4
    tasks = [("named", name) for name in NAMED]
    tasks.append(("k23",))
    tasks += [("cut-sum", seed) for seed in range(15 * scale)]
    tasks += [("borsuk", seed) for seed in range(5 * scale)]
    tasks += [("proposition", seed) for seed in range(5 * scale)]
    for n in range(1, 5):
        pairs = len(list(combinations(range(n), 2)))
        tasks += [("coloring-via-gh", n, mask) for mask in range(1 << pairs)]
    return tasks


def _cut_sum_instance(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 5)
    k = rng.randint(1, min(4, (1 << (n - 1)) - 1))
    return gen.cut_sum(n, k, seed)


def run_task(task) -> dict:
    kind = task[0]
    row = {"check": kind, "id": "/".join(str(t) for t in task[1:])}
    try:
        row.update(_run(kind, task[1:]))
    except L1EmbedError as exc:
        row.update(ok=False, error=f"{type(exc).__name__}: {exc}")
    return row


def _run(kind, args):
    if kind == "named":
        factory, expected = NAMED[args[0]]
        rep = cross_validate(factory())
        return {"ok": rep.dimension == expected, "dimension": rep.dimension}
    if kind == "k23":
        try:
            decompose(gen.k23_metric())
        except NotInCutCone:
            return {"ok": True, "in_cut_cone": False}
        return {"ok": False, "in_cut_cone": True}
    if kind == "cut-sum":
        rep = cross_validate(_cut_sum_instance(args[0]))
        return {"ok": True, "dimension": rep.dimension, "cuts": len(rep.decomposition)}
    if kind == "borsuk":
        seed = args[0]
        X = gen.random_metric(random.Random(seed).randint(2, 6), seed)
        D = diam(X)
        ok = all(
            verify_borsuk_theorem(X, m, D * k / 8).passed for m in range(2, X.n + 1) for k in range(1, 8)
        )
        return {"ok": ok, "n": X.n}
    if kind == "proposition":
        seed = args[0]
        rng = random.Random(seed)
        X = gen.random_metric(rng.randint(1, 4), seed)
        lam = diam(X) * rng.randint(0, 16) / 8
        m = X.n + rng.randint(1, 3)
        got = gh_distance_exact(simplex(m, lam), X).distance
        return {"ok": got == gh_simplex_closed_form(lam, m, X), "value": format_rational(got)}
    if kind == "coloring-via-gh":
        n, mask = args
        pairs = list(combinations(range(n), 2))
        G = SimpleGraph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
        chi, theta = chromatic_number(G).chi, clique_cover_number(G)[0]
        p = TwoDistanceParams(1, 2)
        ok = chromatic_via_gh(G, p) == chi and clique_cover_via_gh(G, p) == theta
        return {"ok": ok, "chi": chi, "theta": theta}
    raise ValueError(f"unknown self-test task {kind!r}")


def selftest(jobs: int = 1, quick: bool = False) -> dict:
    tasks = build_tasks(quick)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(run_task, tasks, chunksize=8))
    else:
        rows = [run_task(t) for t in tasks]
    failed = [r for r in rows if not r["ok"]]
    return {"passed": not failed, "total": len(rows), "failed": len(failed), "checks": rows}
