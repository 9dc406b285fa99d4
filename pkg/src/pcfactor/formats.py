"""Text, JSON and DOT formats for coloured graphs and 3-uniform hypergraphs.

ECG is line oriented::

    # comment
    colours 3
    vertex x0 f=2
    vertex x1 f=1
    edge x0 x1 1

``colours`` must be the first non-comment line; ``f`` defaults to 0.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .errors import ParseError
from .graph import ColouredGraph, DegreeSpec, Graph

# Cycled by colour index for DOT output.
DOT_PALETTE = (
    "#2ca02c", "#1f77b4", "#ff7f0e", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a",
)


def dot_colour(c: int) -> str:
    return DOT_PALETTE[(c - 1) % len(DOT_PALETTE)]


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", lineno) from None


def parse_ecg(text: str) -> tuple[ColouredGraph, dict[str, int]]:
    k = None
    vertices: list[str] = []
    f: dict[str, int] = {}
    edges: list[tuple[str, str, int]] = []
    for lineno, tokens in _lines(text):
        kind, args = tokens[0], tokens[1:]
        if k is None:
            if kind != "colours":
                raise ParseError("expected 'colours <k>' first", lineno)
            if len(args) != 1:
                raise ParseError("usage: colours <k>", lineno)
            k = _int(args[0], "colour count", lineno)
            if k < 1:
                raise ParseError("colour count must be positive", lineno)
        elif kind == "colours":
            raise ParseError("'colours' given twice", lineno)
        elif kind == "vertex":
            if not 1 <= len(args) <= 2:
                raise ParseError("usage: vertex <id> [f=<n>]", lineno)
            v = args[0]
            if v in f:
                raise ParseError(f"duplicate vertex {v}", lineno)
            value = 0
            if len(args) == 2:
                if not args[1].startswith("f="):
                    raise ParseError(f"expected f=<n>, got {args[1]!r}", lineno)
                value = _int(args[1][2:], "f", lineno)
                if value < 0:
                    raise ParseError("f must be non-negative", lineno)
            vertices.append(v)
            f[v] = value
        elif kind == "edge":
            if len(args) != 3:
                raise ParseError("usage: edge <u> <v> <colour>", lineno)
            edges.append((args[0], args[1], _int(args[2], "colour", lineno)))
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    if k is None:
        raise ParseError("missing 'colours <k>' line")
    return ColouredGraph(tuple(vertices), tuple(edges), k), f


def serialize_ecg(g: ColouredGraph, f: DegreeSpec | None = None, header: str | None = None) -> str:
    out = []
    if header:
        out.extend(f"# {line}" for line in header.splitlines())
    out.append(f"colours {g.k}")
    for v in g.vertices:
        out.append(f"vertex {v} f={f[v] if f is not None else 0}")
    for u, v, c in g.edges:
        out.append(f"edge {u} {v} {c}")
    return "\n".join(out) + "\n"


def graph_to_json(g: ColouredGraph, f: DegreeSpec | None = None) -> dict[str, Any]:
    return {
        "colours": g.k,
        "vertices": [{"id": v, "f": f[v] if f is not None else 0} for v in g.vertices],
        "edges": [[u, v, c] for u, v, c in g.edges],
    }


def graph_from_json(data: Mapping[str, Any]) -> tuple[ColouredGraph, dict[str, int]]:
    try:
        vertices = [str(item["id"]) for item in data["vertices"]]
        f = {str(item["id"]): int(item.get("f", 0)) for item in data["vertices"]}
        edges = [(str(u), str(v), int(c)) for u, v, c in data["edges"]]
        k = int(data["colours"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from None
    return ColouredGraph(tuple(vertices), tuple(edges), k), f


def load_graph(text: str) -> tuple[ColouredGraph, dict[str, int]]:
    """Parse ECG or, if the text starts with ``{``, its JSON mirror."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        return graph_from_json(data)
    return parse_ecg(text)


def _q(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def export_dot(g: ColouredGraph | Graph, f: DegreeSpec | None = None, name: str = "G") -> str:
    out = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for v in g.vertices:
        label = v if f is None else f"{v}\\nf={f[v]}"
        out.append(f"  {_q(v)} [label={_q(label)}];")
    for e in g.edges:
        if len(e) == 3:
            u, v, c = e
            out.append(f"  {_q(u)} -- {_q(v)} [color={_q(dot_colour(c))}, label=\"{c}\", penwidth=2];")
        else:
            out.append(f"  {_q(e[0])} -- {_q(e[1])};")
    out.append("}")
    return "\n".join(out) + "\n"


# --- hypergraphs ------------------------------------------------------------------

def parse_hypergraph(text: str):
    from .hardness import Hypergraph3

    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []
    for lineno, tokens in _lines(text):
        kind, args = tokens[0], tokens[1:]
        if kind == "hvertex":
            if len(args) != 1:
                raise ParseError("usage: hvertex <id>", lineno)
            if args[0] in vertices:
                raise ParseError(f"duplicate vertex {args[0]}", lineno)
            vertices.append(args[0])
        elif kind == "hedge":
            if len(args) != 3:
                raise ParseError("usage: hedge <a> <b> <c>", lineno)
            if len(set(args)) != 3:
                raise ParseError("hyperedge needs three distinct vertices", lineno)
            for x in args:
                if x not in vertices:
                    raise ParseError(f"unknown vertex {x}", lineno)
            edges.append((args[0], args[1], args[2]))
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    return Hypergraph3(tuple(vertices), tuple(edges))


def serialize_hypergraph(h) -> str:
    out = [f"hvertex {v}" for v in h.vertices]
    out.extend(f"hedge {a} {b} {c}" for a, b, c in h.edges)
    return "\n".join(out) + "\n"
