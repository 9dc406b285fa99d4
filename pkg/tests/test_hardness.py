from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from pcfactor.errors import InvalidColouring, NotAFactor, NotRegular, SearchCapExceeded, TooLarge
from pcfactor.graph import ColouredGraph, edge_set, is_distance_d_coloured, is_distance_d_factor, is_rc_factor
from pcfactor.hardness import (FactorSearch, Hypergraph3, all_1in3, brute_1in3, build_d2c_gadget,
                               build_rc_gadget, canonical_colouring, complete_3_uniform,
                               d2c_colouring_from_factor, d2c_factor_from_colouring,
                               d2c_factor_search, d2c_forced_edges, girth, is_1in3, kneser,
                               rc_colouring_from_factor, rc_factor_from_colouring,
                               rc_factor_search, rc_gadget_size, regular_hypergraphs)


def test_single_edge_first_colouring():
    h = Hypergraph3(("a", "b", "c"), (("a", "b", "c"),))
    assert brute_1in3(h) == {"a": 1, "b": -1, "c": -1}
    assert len(all_1in3(h)) == 3


def test_k43_has_no_colouring(k43):
    assert brute_1in3(k43) is None
    assert all_1in3(k43) == []
    # same edge sets as the complete hypergraph, in the fixture's order
    assert {frozenset(e) for e in k43.edges} == {frozenset(e) for e in complete_3_uniform("zwxy").edges}
    assert k43.incidence["x"] == (0, 1, 2)


def test_positive9(positive9):
    phi = brute_1in3(positive9)
    assert all(phi[u] == 1 for u in ("u1", "u2", "u3"))
    assert positive9.regularity() == 3


def test_brute_cap():
    h = Hypergraph3(tuple(f"a{i}" for i in range(30)), ())
    with pytest.raises(TooLarge):
        brute_1in3(h)


@given(st.integers(3, 7).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.sampled_from(list(combinations(range(n), 3))), unique=True, max_size=8))))
def test_brute_1in3_agrees_with_enumeration(data):
    n, edges = data
    names = tuple(f"a{i}" for i in range(n))
    h = Hypergraph3(names, tuple(tuple(names[i] for i in e) for e in edges))
    found = brute_1in3(h)
    every = all_1in3(h)
    assert (found is None) == (not every)
    if found is not None:
        assert is_1in3(h, found)
        # lexicographically first with +1 before -1
        key = lambda phi: tuple(-phi[v] for v in names)
        assert key(found) == min(map(key, every))


# --- Kneser --------------------------------------------------------------------------

def test_petersen():
    g = kneser(5, 2)
    assert len(g.vertices) == 10 and len(g.edges) == 15
    assert all(g.degree(v) == 3 for v in g.vertices)
    assert girth(g) == 5
    H = nx.Graph(g.edges)
    assert nx.is_isomorphic(H, nx.petersen_graph())


def test_kneser_small_cases():
    assert kneser(4, 0).vertices == ("{}",) and kneser(4, 0).edges == ()
    assert len(kneser(3, 1).edges) == 3
    with pytest.raises(ValueError):
        kneser(2, 3)


def test_canonical_triangle():
    g = canonical_colouring(2)
    assert g.edges == (("{1}", "{2}", 3), ("{1}", "{3}", 2), ("{2}", "{3}", 1))


@pytest.mark.parametrize("r", [2, 3, 4])
def test_canonical_colouring_properties(r):
    g = canonical_colouring(r)
    assert all(g.degree(v) == r for v in g.vertices)
    assert is_distance_d_coloured(g, 2)
    assert {c for *_, c in g.edges} <= set(range(1, 2 * r))
    # colour class c: disjoint pairs of (r-1)-sets covering [2r-1] minus c
    for u, v, c in g.edges:
        A = set(map(int, u.strip("{}").split(",")))
        B = set(map(int, v.strip("{}").split(",")))
        assert A | B | {c} == set(range(1, 2 * r)) and not A & B


# --- rc reduction ----------------------------------------------------------------

def test_rc_gadget_k43(k43):
    g = build_rc_gadget(k43, 2)
    assert len(g.vertices) == 40 and g.k == 3
    assert {c for *_, c in g.edges} == {1, 2, 3}
    assert (len(g.vertices), len(g.edges)) == rc_gadget_size(k43, 2)
    # all small-clique edges get colour 1 when r = 2
    assert all(c == 1 for u, v, c in g.edges if ".q." in u and ".q." in v)
    assert rc_factor_search(g, 2) is None


def test_rc_not_regular():
    h = Hypergraph3(("a", "b", "c"), (("a", "b", "c"),))
    with pytest.raises(NotRegular):
        build_rc_gadget(h, 2)


def test_rc_positive9(positive9):
    g = build_rc_gadget(positive9, 2)
    assert (len(g.vertices), len(g.edges)) == rc_gadget_size(positive9, 2)
    for phi in all_1in3(positive9):
        F = rc_factor_from_colouring(positive9, 2, phi)
        assert is_rc_factor(g, F, 2)
        assert rc_colouring_from_factor(positive9, 2, F) == phi
    F = rc_factor_search(g, 2)
    assert F is not None and is_rc_factor(g, F, 2)
    assert is_1in3(positive9, rc_colouring_from_factor(positive9, 2, F))


def test_rc_r3():
    # r = 3 needs a 4-regular hypergraph
    h = next(h for h in regular_hypergraphs(6, 4))
    g = build_rc_gadget(h, 3)
    assert (len(g.vertices), len(g.edges)) == rc_gadget_size(h, 3)
    found = rc_factor_search(g, 3)
    assert (found is not None) == (brute_1in3(h) is not None)
    for phi in all_1in3(h):
        assert is_rc_factor(g, rc_factor_from_colouring(h, 3, phi), 3)


def test_rc_forward_rejects_bad_colouring(positive9):
    bad = {v: 1 for v in positive9.vertices}
    with pytest.raises(InvalidColouring):
        rc_factor_from_colouring(positive9, 2, bad)


def test_rc_reverse_rejects_non_factor(positive9):
    with pytest.raises(NotAFactor):
        rc_colouring_from_factor(positive9, 2, set())


def test_rainbow_c4():
    c4 = ColouredGraph(tuple("abcd"), (("a", "b", 1), ("b", "c", 2), ("c", "d", 3), ("d", "a", 4)), 4)
    assert rc_factor_search(c4, 2) == edge_set(c4.edges)
    c4b = ColouredGraph(c4.vertices, (("a", "b", 1), ("b", "c", 2), ("c", "d", 1), ("d", "a", 3)), 3)
    assert rc_factor_search(c4b, 2) is None


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_rc_reduction_biconditional(n):
    for h in regular_hypergraphs(n):
        assert (brute_1in3(h) is not None) == (rc_factor_search(build_rc_gadget(h, 2), 2) is not None)


# --- d2c reduction ---------------------------------------------------------------

def test_d2c_k43(k43):
    g = build_d2c_gadget(k43, 2)
    assert len(g.vertices) == 76 and g.k == 3
    assert {c for *_, c in g.edges} <= {1, 2, 3}
    assert d2c_factor_search(g, 2) is None
    assert d2c_factor_search(g, 2, forced=d2c_forced_edges(k43, 2, g)) is None


def test_d2c_positive9(positive9):
    g = build_d2c_gadget(positive9, 2)
    forced = d2c_forced_edges(positive9, 2, g)
    for phi in all_1in3(positive9):
        F = d2c_factor_from_colouring(positive9, 2, phi)
        assert is_distance_d_factor(g, F, 2, 2)
        assert forced <= F
        assert d2c_colouring_from_factor(positive9, 2, F) == phi
    F = d2c_factor_search(g, 2)
    assert F is not None and is_distance_d_factor(g, F, 2, 2)
    assert forced <= F
    assert is_1in3(positive9, d2c_colouring_from_factor(positive9, 2, F))


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_d2c_reduction_biconditional(n):
    for h in regular_hypergraphs(n):
        g = build_d2c_gadget(h, 2)
        assert (brute_1in3(h) is not None) == (d2c_factor_search(g, 2) is not None)


def test_d2c_not_regular(positive9):
    h = Hypergraph3(("a", "b", "c"), (("a", "b", "c"),))
    with pytest.raises(NotRegular):
        build_d2c_gadget(h, 2)


def test_d2c_colour_budget_r3():
    # rho = C(5, 2) = 10; a 10-regular 3-uniform hypergraph: K6^(3) is 10-regular
    h = complete_3_uniform([f"a{i}" for i in range(6)])
    g = build_d2c_gadget(h, 3)
    assert {c for *_, c in g.edges} <= set(range(1, 6))
    assert len(g.vertices) == 6 * 2 * 10 * 10 + 20
    phi = brute_1in3(h)
    if phi is not None:
        assert is_distance_d_factor(g, d2c_factor_from_colouring(h, 3, phi), 3, 2)


def test_petersen_all_edges_is_distance2_factor():
    g = canonical_colouring(3)
    assert d2c_factor_search(g, 3) == edge_set(g.edges)


# --- generic search ----------------------------------------------------------------

def test_search_node_cap(k43):
    g = build_rc_gadget(k43, 2)
    with pytest.raises(SearchCapExceeded):
        FactorSearch(g, 2, "rc", max_nodes=0).search()


def test_search_edge_cap(k43):
    with pytest.raises(TooLarge):
        FactorSearch(build_rc_gadget(k43, 2), 2, "rc", max_edges=10)


@st.composite
def small_coloured(draw):
    n = draw(st.integers(2, 7))
    names = tuple(f"v{i}" for i in range(n))
    edges = tuple((u, v, draw(st.integers(1, 3))) for u, v in combinations(names, 2) if draw(st.booleans()))
    return ColouredGraph(names, edges, 3)


@given(small_coloured(), st.integers(1, 3), st.integers(1, 3))
def test_search_matches_subset_enumeration(g, r, d):
    edges = sorted(edge_set(g.edges))
    rc_expected = dist_expected = False
    if len(edges) <= 14:
        for size in range(len(edges) + 1):
            for F in combinations(edges, size):
                rc_expected |= is_rc_factor(g, F, r)
                dist_expected |= is_distance_d_factor(g, F, r, d)
        assert (rc_factor_search(g, r) is not None) == rc_expected
        assert (d2c_factor_search(g, r, d=d) is not None) == dist_expected
