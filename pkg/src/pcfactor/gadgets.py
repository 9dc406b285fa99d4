"""Gadget graphs whose perfect matchings encode (properly coloured) f-factors.

Each vertex ``u`` becomes a complete bipartite gadget between its
S-vertices and ``slack(u)`` T-vertices. In the coloured construction the
S-vertices are indexed by the colours present at ``u`` and named
``u.s.<colour>``; in the plain construction they are indexed by the
neighbours of ``u`` and named ``u.s.<neighbour>``. T-vertices are
``u.t.<j>`` for ``j = 1..slack(u)``. Cross edges join ``u.s.i`` to
``v.s.j`` for every original edge ``uv`` (with ``i = j = c(uv)`` in the
coloured case).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import Infeasible, NotAFactor, NotPerfect
from .graph import (AnyGraph, ColouredGraph, DegreeSpec, Edge, EdgeSet, Graph,
                    edge_key, edge_set, is_f_factor, is_pc_factor)


@dataclass(frozen=True)
class SVertex:
    vertex: str
    index: int | str  # colour (coloured gadget) or neighbour (plain gadget)


@dataclass(frozen=True)
class TVertex:
    vertex: str
    index: int


@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph
    vertex_tags: dict[str, SVertex | TVertex]
    edge_origin: dict[Edge, Edge]
    source: AnyGraph
    f: dict[str, int]
    coloured: bool
    s_sets: dict[str, dict[Any, str]]
    t_sets: dict[str, tuple[str, ...]]

    def s_vertices(self, u: str) -> tuple[str, ...]:
        return tuple(self.s_sets[u].values())

    def t_vertices(self, u: str) -> tuple[str, ...]:
        return self.t_sets[u]


def _check_feasible(g: AnyGraph, f: DegreeSpec, degree) -> None:
    for v in sorted(g.vertices):
        if f[v] > degree(v):
            raise Infeasible(v, f[v], degree(v))


def _assemble(g, f, s_index, cross, coloured) -> GadgetGraph:
    vertices: list[str] = []
    edges: list[Edge] = []
    vertex_tags: dict[str, SVertex | TVertex] = {}
    s_sets: dict[str, dict[Any, str]] = {}
    t_sets: dict[str, tuple[str, ...]] = {}
    for u in sorted(g.vertices):
        s_names = {i: f"{u}.s.{i}" for i in s_index[u]}
        t_names = tuple(f"{u}.t.{j}" for j in range(1, len(s_index[u]) - f[u] + 1))
        for i, name in s_names.items():
            vertex_tags[name] = SVertex(u, i)
        for j, name in enumerate(t_names, start=1):
            vertex_tags[name] = TVertex(u, j)
        vertices.extend(s_names.values())
        vertices.extend(t_names)
        edges.extend((s, t) for s in s_names.values() for t in t_names)
        s_sets[u] = s_names
        t_sets[u] = t_names
    origin: dict[Edge, Edge] = {}
    for (u, i), (v, j) in cross:
        key = edge_key(s_sets[u][i], s_sets[v][j])
        edges.append(key)
        origin[key] = edge_key(u, v)
    return GadgetGraph(Graph(tuple(vertices), tuple(edges)), vertex_tags, origin,
                       g, dict(f), coloured, s_sets, t_sets)


def build_gfc(g: ColouredGraph, f: DegreeSpec) -> GadgetGraph:
    """The coloured gadget graph; raises Infeasible if f(v) > d^c(v)."""
    cs = g.colour_sets
    _check_feasible(g, f, lambda v: len(cs[v]))
    s_index = {u: sorted(cs[u]) for u in g.vertices}
    cross = [((u, c), (v, c)) for u, v, c in g.edges]
    return _assemble(g, f, s_index, cross, coloured=True)


def build_gf(g: AnyGraph, f: DegreeSpec) -> GadgetGraph:
    """The plain gadget graph; raises Infeasible if f(v) > d(v)."""
    _check_feasible(g, f, g.degree)
    s_index = {u: list(g.adj[u]) for u in g.vertices}
    cross = [((u, v), (v, u)) for u, v in (e[:2] for e in g.edges)]
    return _assemble(g, f, s_index, cross, coloured=False)


def lift_matching(gg: GadgetGraph, M) -> EdgeSet:
    """Original edges whose cross edges lie in the perfect matching ``M``."""
    M = edge_set(M)
    covered: set[str] = set()
    for u, v in M:
        if not gg.graph.has_edge(u, v):
            raise NotPerfect(f"{u}-{v} is not a gadget edge")
        if u in covered or v in covered:
            raise NotPerfect(f"{u}-{v} overlaps another matching edge")
        covered.update((u, v))
    missing = sorted(set(gg.graph.vertices) - covered)
    if missing:
        raise NotPerfect(f"vertex {missing[0]} is exposed")
    return frozenset(gg.edge_origin[e] for e in M if e in gg.edge_origin)


def push_factor(gg: GadgetGraph, F) -> EdgeSet:
    """A perfect matching of the gadget whose cross edges are exactly ``F``.

    Each gadget's unused S-vertices are paired with its T-vertices in
    ascending order.
    """
    F = edge_set(F)
    g = gg.source
    ok = is_pc_factor(g, gg.f, F) if gg.coloured else is_f_factor(g, gg.f, F)
    if not ok:
        raise NotAFactor("edge set is not a " + ("pc-f-factor" if gg.coloured else "f-factor"))
    matching: set[Edge] = set()
    used: set[str] = set()
    for u, v in F:
        if gg.coloured:
            c = g.colour(u, v)
            a, b = gg.s_sets[u][c], gg.s_sets[v][c]
        else:
            a, b = gg.s_sets[u][v], gg.s_sets[v][u]
        matching.add(edge_key(a, b))
        used.update((a, b))
    for u in sorted(g.vertices):
        free = [s for s in gg.s_sets[u].values() if s not in used]
        for s, t in zip(free, gg.t_sets[u], strict=True):
            matching.add(edge_key(s, t))
    return frozenset(matching)


def gadget_to_json(gg: GadgetGraph) -> dict[str, Any]:
    tags = {}
    for name, tag in gg.vertex_tags.items():
        kind = "S" if isinstance(tag, SVertex) else "T"
        tags[name] = {"kind": kind, "vertex": tag.vertex, "index": tag.index}
    return {
        "coloured": gg.coloured,
        "vertices": list(gg.graph.vertices),
        "edges": [list(e) for e in gg.graph.edges],
        "vertex_tags": tags,
        "edge_origin": [[list(k), list(v)] for k, v in gg.edge_origin.items()],
    }


def gadget_to_dot(gg: GadgetGraph) -> str:
    from .formats import dot_colour

    out = ["graph gadget {", "  node [shape=circle, style=filled, fontsize=9];"]
    for u in sorted(gg.source.vertices):
        out.append(f'  subgraph "cluster_{u}" {{ label="{u}";')
        for i, name in gg.s_sets[u].items():
            fill = dot_colour(i) if gg.coloured else "white"
            out.append(f'    "{name}" [fillcolor="{fill}"];')
        for name in gg.t_sets[u]:
            out.append(f'    "{name}" [fillcolor="grey"];')
        out.append("  }")
    for u, v in gg.graph.edges:
        style = ", penwidth=2" if (u, v) in gg.edge_origin else ""
        out.append(f'  "{u}" -- "{v}" [color="black"{style}];')
    out.append("}")
    return "\n".join(out) + "\n"
