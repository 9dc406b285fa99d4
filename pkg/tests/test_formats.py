import json
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given

from pcfactor.errors import ParseError
from pcfactor.formats import (export_dot, graph_from_json, graph_to_json, load_graph, parse_ecg,
                              parse_hypergraph, serialize_ecg, serialize_hypergraph)

from conftest import FIXTURES, coloured_instances

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


@pytest.mark.parametrize("text, line, needle", [
    ("vertex a\n", 1, "colours"),
    ("colours 2\ncolours 3\n", 2, "twice"),
    ("colours x\n", 1, "integer"),
    ("colours 2\nvertex a f=z\n", 2, "integer"),
    ("colours 2\nvertex a\nvertex a\n", 3, "duplicate"),
    ("colours 2\nvertex a\nedge a b\n", 3, "usage"),
    ("colours 2\nfoo\n", 2, "unknown directive"),
    ("# only a comment\n", None, "missing"),
    ("colours 2\nvertex a f=-1\n", 2, "non-negative"),
])
def test_parse_errors_carry_line_numbers(text, line, needle):
    with pytest.raises(ParseError) as info:
        parse_ecg(text)
    assert info.value.line == line
    assert needle in str(info.value)


def test_fig1_fixture(fig1):
    g, f = fig1
    assert len(g.vertices) == 5 and len(g.edges) == 8 and g.k == 3
    assert f == {"x0": 2, "x1": 1, "x2": 1, "x3": 1, "x4": 1}


def test_f_defaults_to_zero():
    g, f = parse_ecg("colours 1\nvertex a\n")
    assert f == {"a": 0}


@given(coloured_instances(max_n=5, feasible=False))
def test_ecg_and_json_round_trip(inst):
    g, f = inst
    assert parse_ecg(serialize_ecg(g, f, "round trip")) == (g, f)
    data = graph_to_json(g, f)
    jsonschema.validate(data, json.loads((SCHEMAS / "graph.schema.json").read_text()))
    assert graph_from_json(data) == (g, f)
    assert load_graph(json.dumps(data)) == (g, f)


def test_load_graph_bad_json():
    with pytest.raises(ParseError):
        load_graph("{ not json")
    with pytest.raises(ParseError):
        load_graph('{"vertices": []}')


def test_dot_export_mentions_every_edge(fig1):
    g, f = fig1
    dot = export_dot(g, f)
    assert dot.startswith("graph G {")
    assert dot.count(" -- ") == 8


def test_hypergraph_fixtures_round_trip():
    for name in ("k43.hg", "positive9.hg"):
        h = parse_hypergraph((FIXTURES / name).read_text())
        assert parse_hypergraph(serialize_hypergraph(h)) == h


@pytest.mark.parametrize("text, needle", [
    ("hvertex a\nhvertex a\n", "duplicate"),
    ("hvertex a\nhvertex b\nhedge a b c\n", "unknown vertex c"),
    ("hvertex a\nhvertex b\nhedge a b a\n", "distinct"),
    ("hvertex a\nhedge a\n", "usage"),
])
def test_hypergraph_parse_errors(text, needle):
    with pytest.raises(ParseError, match=needle):
        parse_hypergraph(text)
