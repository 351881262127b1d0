import pytest
from hypothesis import given

from conftest import graphs
from oracles import brute_chromatic
from l1embed.chromatic import (
    chromatic_number,
    chromatic_via_gh,
    clique_cover_number,
    clique_cover_via_gh,
    gh_color_bound_check,
    is_proper_coloring,
)
from l1embed.exceptions import BudgetExceeded
from l1embed.metric import SimpleGraph, TwoDistanceParams, complement

P12 = TwoDistanceParams(1, 2)


@pytest.mark.parametrize(
    "G, chi", [(SimpleGraph(5), 1), (SimpleGraph.complete(3), 3), (SimpleGraph.cycle(5), 3)]
)
def test_chromatic_examples(G, chi):
    res = chromatic_number(G)
    assert res.chi == chi and is_proper_coloring(G, res.coloring)


@pytest.mark.parametrize(
    "G, theta", [(SimpleGraph.complete(5), 1), (SimpleGraph(4), 4), (SimpleGraph.cycle(5), 3)]
)
def test_clique_cover_examples(G, theta):
    t, cover = clique_cover_number(G)
    assert t == theta == len(cover)
    assert sorted(v for c in cover for v in c) == list(range(G.n))


@pytest.mark.parametrize(
    "G, chi", [(SimpleGraph(3), 1), (SimpleGraph.complete(2), 2), (SimpleGraph.cycle(5), 3)]
)
def test_chromatic_via_gh_examples(G, chi):
    assert chromatic_via_gh(G, P12) == chi


@pytest.mark.parametrize(
    "G, theta", [(SimpleGraph.complete(3), 1), (SimpleGraph(3), 3), (SimpleGraph.path(3), 2)]
)
def test_clique_cover_via_gh_examples(G, theta):
    assert clique_cover_via_gh(G, P12) == theta


def test_color_bound_examples():
    assert gh_color_bound_check(SimpleGraph.complete(3), 2, P12)
    assert not gh_color_bound_check(SimpleGraph.complete(2), 2, P12)
    assert gh_color_bound_check(SimpleGraph.path(4), 1, P12)


def test_vertex_budget():
    with pytest.raises(BudgetExceeded):
        chromatic_number(SimpleGraph(5), max_vertices=4)


@given(graphs(max_n=6))
def test_chromatic_matches_enumeration(G):
    assert chromatic_number(G).chi == brute_chromatic(G)


@given(graphs(max_n=5))
def test_gh_routes_and_duality(G):
    p = TwoDistanceParams(2, 3)
    assert chromatic_via_gh(G, p) == chromatic_number(G).chi
    assert clique_cover_via_gh(G, p) == chromatic_via_gh(complement(G), p)
