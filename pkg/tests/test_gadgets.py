import pytest
from hypothesis import given

from pcfactor.errors import Infeasible, NotAFactor, NotPerfect
from pcfactor.gadgets import (SVertex, TVertex, build_gf, build_gfc, gadget_to_dot, gadget_to_json,
                              lift_matching, push_factor)
from pcfactor.graph import ColouredGraph, Graph, iter_f_factors, is_f_factor, is_pc_factor
from pcfactor.matching import is_matching, perfect_matching

from conftest import coloured_instances


def test_fig1_gadget_size(fig1):
    g, f = fig1
    gg = build_gfc(g, f)
    assert len(gg.graph.vertices) == 22
    assert len(gg.graph.edges) == 32
    assert gg.s_vertices("x0") == ("x0.s.1", "x0.s.3")
    assert gg.t_vertices("x0") == ()
    assert gg.t_vertices("x1") == ("x1.t.1", "x1.t.2")
    assert gg.vertex_tags["x1.s.2"] == SVertex("x1", 2)
    assert gg.vertex_tags["x1.t.2"] == TVertex("x1", 2)


def test_size_formula(fig1):
    g, f = fig1
    gg = build_gfc(g, f)
    cs = g.colour_sets
    n = sum(2 * len(cs[u]) - f[u] for u in g.vertices)
    m = sum(len(cs[u]) * (len(cs[u]) - f[u]) for u in g.vertices) + len(g.edges)
    assert (len(gg.graph.vertices), len(gg.graph.edges)) == (n, m)


def test_plain_gadget_of_k2():
    g = Graph(("a", "b"), (("a", "b"),))
    gg = build_gf(g, {"a": 1, "b": 1})
    assert gg.graph.vertices == ("a.s.b", "b.s.a")
    assert gg.graph.edges == (("a.s.b", "b.s.a"),)


def test_infeasible_reports_first_sorted_vertex(star):
    g, f = star
    with pytest.raises(Infeasible) as info:
        build_gfc(g, {**f, "z": 3, "a": 2})
    assert (info.value.vertex, info.value.f_value, info.value.degree) == ("a", 2, 1)


@given(coloured_instances(max_n=5))
def test_matching_and_factor_correspond(inst):
    g, f = inst
    gg = build_gfc(g, f)
    M = perfect_matching(gg.graph)
    factors = set(iter_f_factors(g, f, proper=True))
    assert (M is not None) == bool(factors)
    if M is not None:
        assert lift_matching(gg, M) in factors
    for F in factors:
        M2 = push_factor(gg, F)
        assert is_matching(gg.graph, M2) and 2 * len(M2) == len(gg.graph.vertices)
        assert lift_matching(gg, M2) == F


@given(coloured_instances(max_n=5))
def test_plain_gadget_matches_f_factors(inst):
    g, f = inst
    plain = g.plain
    if any(f[v] > plain.degree(v) for v in g.vertices):
        return
    gg = build_gf(plain, f)
    M = perfect_matching(gg.graph)
    has = next(iter_f_factors(plain, f), None) is not None
    assert (M is not None) == has
    if M is not None:
        assert is_f_factor(plain, f, lift_matching(gg, M))


def test_lift_rejects_non_perfect(fig1):
    g, f = fig1
    gg = build_gfc(g, f)
    with pytest.raises(NotPerfect):
        lift_matching(gg, [])
    with pytest.raises(NotPerfect):
        lift_matching(gg, [("x0.s.1", "x2.s.1")])


def test_push_rejects_improper(fig1):
    g, f = fig1
    gg = build_gfc(g, f)
    with pytest.raises(NotAFactor):
        push_factor(gg, {("x0", "x1"), ("x0", "x4"), ("x2", "x3")})
    M = push_factor(gg, {("x0", "x1"), ("x0", "x2"), ("x3", "x4")})
    # free S-vertices paired with T-vertices in ascending order
    assert ("x1.s.2", "x1.t.1") in M and ("x1.s.3", "x1.t.2") in M


def test_exports(fig1):
    g, f = fig1
    gg = build_gfc(g, f)
    data = gadget_to_json(gg)
    assert len(data["vertices"]) == 22 and len(data["edge_origin"]) == 8
    dot = gadget_to_dot(gg)
    assert dot.count(" -- ") == 32
    assert gadget_to_dot(gg) == dot
