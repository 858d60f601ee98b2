import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permrun import BudgetExceeded, Graph, Permutation, brute_force_match, has_clique, lis_length, parse_graph
from permrun.oracle import format_graph

WORKED_GRAPH = Graph(6, ((1, 2), (1, 6), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5), (4, 6)))


def test_brute_force_examples():
    t = Permutation.of(5, 3, 1, 4, 2)
    e = brute_force_match(Permutation.of(2, 3, 1), t)
    # values 3 4 2 sit at positions 2 4 5 of this text
    assert e.positions == (2, 4, 5) and e.values == (3, 4, 2)
    assert brute_force_match(Permutation.of(1, 2, 3), t) is None
    assert brute_force_match(Permutation.of(1), Permutation.of(1)).positions == (1,)


def test_brute_force_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_match(Permutation.of(1, 2, 3), Permutation(tuple(range(1, 21))), budget=100)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("PERMRUN_BUDGET", "5")
    with pytest.raises(BudgetExceeded):
        brute_force_match(Permutation.of(1, 2), Permutation.of(1, 2, 3, 4))


@pytest.mark.parametrize("values, expected", [((5, 3, 1, 4, 2), 2), ((1, 2, 3), 3), ((3, 2, 1), 1), ((), 0)])
def test_lis_examples(values, expected):
    assert lis_length(Permutation(values)) == expected


@given(st.lists(st.integers(0, 50), unique=True, max_size=9))
def test_lis_matches_subsets(seq):
    best = 0
    for r in range(len(seq) + 1):
        for sub in itertools.combinations(seq, r):
            if list(sub) == sorted(sub):
                best = max(best, r)
    assert lis_length(seq) == best


def test_clique_examples():
    assert has_clique(WORKED_GRAPH, 3) == (2, 3, 5)
    assert has_clique(WORKED_GRAPH, 1) == (1,)
    assert has_clique(WORKED_GRAPH, 4) is None
    c5 = Graph(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5)))
    assert has_clique(c5, 3) is None
    assert has_clique(c5, 9) is None


def test_graph_normalisation_and_errors():
    g = Graph(3, ((3, 1), (2, 1)))
    assert g.edges == ((1, 2), (1, 3))
    for bad in (((1, 1),), ((1, 2), (2, 1)), ((1, 4),)):
        with pytest.raises(ValueError):
            Graph(3, bad)


def test_graph_round_trip():
    assert parse_graph(format_graph(WORKED_GRAPH)) == WORKED_GRAPH
    with pytest.raises(ValueError):
        parse_graph("3 2\n1 2\n")
