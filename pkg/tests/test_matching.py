import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from pcfactor.errors import TooLarge
from pcfactor.graph import Graph, odd_components
from pcfactor.matching import (augmenting_path_exists, brute_matching, is_matching, maximum_matching,
                               perfect_matching, tutte_witness, tutte_witness_exhaustive)

from conftest import plain_graphs


def _nx(g):
    H = nx.Graph()
    H.add_nodes_from(g.vertices)
    H.add_edges_from(g.edges)
    return H


@given(plain_graphs(max_n=9))
def test_blossom_is_maximum(g):
    M = maximum_matching(g)
    assert is_matching(g, M)
    assert len(M) == len(nx.max_weight_matching(_nx(g), maxcardinality=True)) == brute_matching(g, cap=None)
    assert not augmenting_path_exists(g, M)


def test_blossom_deterministic():
    g = Graph(tuple("abcdef"), (("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "d")))
    assert maximum_matching(g) == maximum_matching(Graph(g.vertices[::-1], g.edges[::-1]))


def test_odd_cycle_with_tail_needs_blossom():
    # a 5-cycle whose base is matched outside: a greedy search misses the augmenting path
    g = Graph(tuple("abcdefg"), (("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"),
                                 ("a", "f"), ("c", "g")))
    assert len(maximum_matching(g)) == 3


def test_perfect_matching_parity():
    assert perfect_matching(Graph(("a",), ())) is None
    assert perfect_matching(Graph((), ())) == frozenset()
    assert perfect_matching(Graph(("a", "b"), (("a", "b"),))) == frozenset({("a", "b")})


@given(plain_graphs(max_n=8))
def test_tutte_witness(g):
    X = tutte_witness(g)
    if perfect_matching(g) is not None:
        assert X is None and tutte_witness_exhaustive(g) is None
    else:
        assert odd_components(g, X) > len(X)
        Y = tutte_witness_exhaustive(g)
        assert odd_components(g, Y) > len(Y)
        assert len(Y) <= len(X)


def test_brute_matching_cap():
    edges = tuple(combinations([f"v{i}" for i in range(8)], 2))
    with pytest.raises(TooLarge):
        brute_matching(Graph(tuple(f"v{i}" for i in range(8)), edges), cap=10)


def test_matching_against_networkx_on_larger_random_graphs():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(10, 40)
        names = tuple(f"v{i}" for i in range(n))
        p = rng.uniform(0.05, 0.4)
        g = Graph(names, tuple(e for e in combinations(names, 2) if rng.random() < p))
        assert len(maximum_matching(g)) == len(nx.max_weight_matching(_nx(g), maxcardinality=True))
