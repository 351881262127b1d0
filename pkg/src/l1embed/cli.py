"""Command-line front end.

JSON goes to stdout, a one-line human summary to stderr. Exit codes:
0 success, 1 parse or validation error, 2 not in the cut cone,
3 budget exceeded, 4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import generators
from . import io as docs
from .chromatic import chromatic_number, chromatic_via_gh, clique_cover_number, clique_cover_via_gh
from .cuts import MAX_CUT_POINTS, decompose
from .exceptions import (
    BudgetExceeded,
    InternalConsistencyError,
    L1EmbedError,
    MetricError,
    NotInCutCone,
)
from .gh import DEFAULT_SIZE_LIMIT, gh_distance_exact, verify_borsuk_theorem
from .l1dim import Budgets, cross_validate
from .metric import TwoDistanceParams, diam
from .nesting import MAX_TRIPLES, build_nesting_hypergraph, enumerate_graph_family
from .rational import as_rational, format_rational
from .selftest import selftest

EXIT_OK, EXIT_INPUT, EXIT_NOT_IN_CONE, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _params(args) -> TwoDistanceParams:
    return TwoDistanceParams(as_rational(args.a), as_rational(args.b))


def _budgets(args) -> Budgets:
    return Budgets(args.budget_gh, args.budget_family, args.budget_cuts)


def _decomposition_for(args):
    space, dec = docs.space_or_decomposition(docs.load(args.input))
    if dec is None:
        dec = decompose(space, args.budget_cuts)
    return space, dec


def cmd_validate(args):
    doc = docs.load(args.input)
    try:
        space = docs.metric_from_doc(doc, allow_pseudo=args.pseudo)
    except MetricError as exc:
        return {"valid": False, "error": exc.kind, "index": list(exc.index)}, EXIT_INPUT
    return {"valid": True, "n": space.n, "pseudo": args.pseudo}, EXIT_OK


def cmd_diam(args):
    space = docs.metric_from_doc(docs.load(args.input), allow_pseudo=True)
    return {"diam": format_rational(diam(space))}, EXIT_OK


def cmd_gh(args):
    X = docs.metric_from_doc(docs.load(args.first))
    Y = docs.metric_from_doc(docs.load(args.second))
    res = gh_distance_exact(X, Y, args.budget_gh)
    return {
        "distance": format_rational(res.distance),
        "witness": [list(p) for p in res.witness.sorted_pairs()],
    }, EXIT_OK


def cmd_borsuk(args):
    X = docs.metric_from_doc(docs.load(args.input))
    D = diam(X)
    lams = [as_rational(args.lam)] if args.lam is not None else [D * k / 8 for k in range(1, 8)]
    rows = []
    for lam in lams:
        rep = verify_borsuk_theorem(X, args.m, lam, args.budget_gh)
        rows.append({
            "lambda": format_rational(lam),
            "partition_exists": rep.partition_exists,
            "partition": [list(p) for p in rep.partition] if rep.partition else None,
            "twice_gh": format_rational(rep.twice_gh),
            "diam": format_rational(rep.diam),
            "passed": rep.passed,
        })
    ok = all(r["passed"] for r in rows)
    return {"m": args.m, "checks": rows, "passed": ok}, EXIT_OK if ok else EXIT_INTERNAL


def cmd_cut_decompose(args):
    space = docs.metric_from_doc(docs.load(args.input), allow_pseudo=True)
    try:
        dec = decompose(space, args.budget_cuts)
    except NotInCutCone as exc:
        cert = [
            {"pair": list(pair), "coefficient": format_rational(y)}
            for pair, y in sorted(exc.certificate.items())
        ]
        return {"in_cut_cone": False, "certificate": cert}, EXIT_NOT_IN_CONE
    out = {"in_cut_cone": True}
    out.update(docs.decomposition_to_doc(dec))
    return out, EXIT_OK


def cmd_nesting(args):
    _, dec = _decomposition_for(args)
    return docs.hypergraph_to_doc(build_nesting_hypergraph(dec.cuts)), EXIT_OK


def cmd_graph_family(args):
    _, dec = _decomposition_for(args)
    fam = enumerate_graph_family(build_nesting_hypergraph(dec.cuts), args.budget_family)
    return {"graphs": [docs.graph_to_doc(G) for G in fam]}, EXIT_OK


def cmd_chromatic(args):
    G = docs.graph_from_doc(docs.load(args.input))
    if args.via == "gh":
        return {"chi": chromatic_via_gh(G, _params(args), args.budget_gh)}, EXIT_OK
    res = chromatic_number(G)
    return {"chi": res.chi, "coloring": list(res.coloring)}, EXIT_OK


def cmd_clique_cover(args):
    G = docs.graph_from_doc(docs.load(args.input))
    if args.via == "gh":
        return {"theta": clique_cover_via_gh(G, _params(args), args.budget_gh)}, EXIT_OK
    theta, cover = clique_cover_number(G)
    return {"theta": theta, "cover": [list(c) for c in cover]}, EXIT_OK


def cmd_l1dim(args):
    space, dec = docs.space_or_decomposition(docs.load(args.input))
    report = cross_validate(space, _params(args), _budgets(args), args.route, decomposition=dec)
    return docs.report_to_doc(report), EXIT_OK


def cmd_selftest(args):
    out = selftest(jobs=args.jobs, quick=args.quick)
    return out, EXIT_OK if out["passed"] else EXIT_INTERNAL


def cmd_gen(args):
    kind, seed = args.kind, args.seed
    if kind == "random-metric":
        return docs.metric_to_doc(generators.random_metric(args.n, seed)), EXIT_OK
    if kind == "random-graph":
        return docs.graph_to_doc(generators.random_graph(args.n, seed, as_rational(args.p))), EXIT_OK
    if kind == "two-distance":
        space = generators.two_distance(args.n, seed, _params(args), as_rational(args.p))
        return docs.metric_to_doc(space), EXIT_OK
    if kind == "simplex":
        return docs.metric_to_doc(generators.simplex(args.m, as_rational(args.lam or 1))), EXIT_OK
    if kind == "cut-sum":
        return docs.metric_to_doc(generators.cut_sum(args.n, args.cuts, seed)), EXIT_OK
    raise ValueError(f"unknown generator {kind!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", default="1", help="smaller two-distance value (p/q)")
    common.add_argument("--b", default="2", help="larger two-distance value (p/q), a < b <= 2a")
    common.add_argument("--budget-gh", type=int, default=DEFAULT_SIZE_LIMIT, help="max points per side in exact GH")
    common.add_argument("--budget-family", type=int, default=MAX_TRIPLES, help="max asteroid triplets")
    common.add_argument("--budget-cuts", type=int, default=MAX_CUT_POINTS, help="max points for cut enumeration")

    parser = argparse.ArgumentParser(prog="l1embed", description="Exact l1-embeddability toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check metric axioms")
    p.add_argument("input")
    p.add_argument("--pseudo", action="store_true", help="allow zero off-diagonal distances")
    add("diam", cmd_diam, "diameter of a metric").add_argument("input")
    p = add("gh", cmd_gh, "exact Gromov-Hausdorff distance")
    p.add_argument("first")
    p.add_argument("second")
    p = add("borsuk", cmd_borsuk, "check the partition criterion against GH")
    p.add_argument("input")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default=None, help="simplex distance; default grid diam*k/8")
    add("cut-decompose", cmd_cut_decompose, "exact cut decomposition").add_argument("input")
    add("nesting", cmd_nesting, "nesting hypergraph of the decomposition").add_argument("input")
    add("graph-family", cmd_graph_family, "simple-graph family of the hypergraph").add_argument("input")
    for name, func in (("chromatic", cmd_chromatic), ("clique-cover", cmd_clique_cover)):
        p = add(name, func, f"exact {name.replace('-', ' ')} number of a graph")
        p.add_argument("input")
        p.add_argument("--via", choices=("gh", "direct"), default="direct")
    p = add("l1dim", cmd_l1dim, "l1-dimension with certificate")
    p.add_argument("input")
    p.add_argument("--route", choices=("gh", "coloring", "all"), default="all")
    p = add("selftest", cmd_selftest, "run the cross-validation suite")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--quick", action="store_true")
    p = add("gen", cmd_gen, "generate a seeded instance")
    p.add_argument("kind", choices=("random-metric", "random-graph", "two-distance", "simplex", "cut-sum"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--cuts", type=int, default=3)
    p.add_argument("--p", default="1/2", help="edge probability (p/q)")
    p.add_argument("--lambda", dest="lam", default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except NotInCutCone as exc:
        out, code = {"error": "NotInCutCone", "in_cut_cone": False, "message": str(exc)}, EXIT_NOT_IN_CONE
    except BudgetExceeded as exc:
        out, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_BUDGET
    except InternalConsistencyError as exc:
        out, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INTERNAL
    except (L1EmbedError, ValueError, TypeError, KeyError, OSError, json.JSONDecodeError) as exc:
        out, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INPUT
    sys.stdout.write(docs.dumps(out))
    print(f"l1embed {args.command}: exit {code}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
