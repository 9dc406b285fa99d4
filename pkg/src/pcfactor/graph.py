"""Edge-coloured graphs, factor predicates and component utilities.

Vertices are arbitrary string ids. Edges are stored as given; every
lookup goes through :func:`edge_key`, which orders the two endpoints, so
``(u, v)`` and ``(v, u)`` name the same edge. Algorithms iterate vertices
in sorted order so that their output does not depend on input order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

Edge = tuple[str, str]
EdgeSet = frozenset[Edge]
DegreeSpec = Mapping[str, int]

INF = float("inf")


def edge_key(u: str, v: str) -> Edge:
    return (u, v) if u <= v else (v, u)


def edge_set(edges: Iterable[tuple]) -> EdgeSet:
    """Normalise an iterable of ``(u, v, ...)`` tuples to an edge set."""
    return frozenset(edge_key(e[0], e[1]) for e in edges)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph without colours."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    @cached_property
    def adj(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        for nbrs in adj.values():
            nbrs.sort()
        return adj

    @cached_property
    def edge_keys(self) -> frozenset[Edge]:
        return frozenset(edge_key(u, v) for u, v in self.edges)

    def degree(self, v: str) -> int:
        return len(self.adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self.edge_keys


@dataclass(frozen=True)
class ColouredGraph:
    """A simple graph whose edges carry integer colours in ``1..k``."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    @cached_property
    def adj(self) -> dict[str, list[str]]:
        return self.plain.adj

    @cached_property
    def plain(self) -> Graph:
        return Graph(self.vertices, tuple((u, v) for u, v, _ in self.edges))

    @cached_property
    def colour_of(self) -> dict[Edge, int]:
        return {edge_key(u, v): c for u, v, c in self.edges}

    @cached_property
    def colour_sets(self) -> dict[str, frozenset[int]]:
        sets: dict[str, set[int]] = {v: set() for v in self.vertices}
        for u, v, c in self.edges:
            sets.setdefault(u, set()).add(c)
            sets.setdefault(v, set()).add(c)
        return {v: frozenset(s) for v, s in sets.items()}

    def colour(self, u: str, v: str) -> int:
        return self.colour_of[edge_key(u, v)]

    def degree(self, v: str) -> int:
        return len(self.adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self.colour_of


AnyGraph = Graph | ColouredGraph


# --- validation -------------------------------------------------------------

def validate(g: ColouredGraph, f: DegreeSpec | None = None) -> list[str]:
    """Return every invariant breach of ``g`` (and of ``f`` if given)."""
    problems = []
    if g.k < 1:
        problems.append(f"colour count k={g.k} is not positive")
    known = set()
    for v in g.vertices:
        if v in known:
            problems.append(f"duplicate vertex {v}")
        known.add(v)
    seen: set[Edge] = set()
    for i, (u, v, c) in enumerate(g.edges):
        where = f"edge {i} ({u},{v})"
        if u == v:
            problems.append(f"loop at {u}")
        for x in (u, v):
            if x not in known:
                problems.append(f"{where}: unknown vertex {x}")
        key = edge_key(u, v)
        if key in seen and u != v:
            problems.append(f"{where}: parallel edge")
        seen.add(key)
        if not isinstance(c, int) or not 1 <= c <= g.k:
            problems.append(f"{where}: colour {c} out of range 1..{g.k}")
    if f is not None:
        for v in g.vertices:
            if v not in f:
                problems.append(f"f undefined at {v}")
            elif not isinstance(f[v], int) or f[v] < 0:
                problems.append(f"f({v}) = {f[v]} is not a non-negative integer")
        for v in f:
            if v not in known:
                problems.append(f"f given for unknown vertex {v}")
    return problems


def fhat(f: DegreeSpec) -> int:
    """Maximum value of ``f`` (0 for the empty map)."""
    return max(f.values(), default=0)


def colour_set(g: ColouredGraph, v: str) -> frozenset[int]:
    if v not in g.colour_sets:
        raise KeyError(f"unknown vertex {v}")
    return g.colour_sets[v]


def colour_degree(g: ColouredGraph, v: str) -> int:
    return len(colour_set(g, v))


def is_proper_colouring(g: ColouredGraph) -> bool:
    return all(colour_degree(g, v) == g.degree(v) for v in g.vertices)


# --- components -------------------------------------------------------------

def components(g: AnyGraph, removed: Iterable[str] = ()) -> list[list[str]]:
    """Connected components of ``g - removed``, each sorted, in sorted order."""
    gone = set(removed)
    adj = g.adj
    seen = set(gone)
    comps = []
    for s in sorted(g.vertices):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def odd_components(g: AnyGraph, removed: Iterable[str] = ()) -> int:
    """Number of odd-order components of ``g - removed``."""
    return sum(len(c) % 2 for c in components(g, removed))


def neighbour_masks(g: AnyGraph) -> tuple[list[str], dict[str, int], list[int]]:
    """Bitmask adjacency for hot loops: (order, index, masks)."""
    order = sorted(g.vertices)
    index = {v: i for i, v in enumerate(order)}
    masks = [0] * len(order)
    for u, v in ((e[0], e[1]) for e in g.edges):
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]
    return order, index, masks


def odd_count_mask(masks: list[int], alive: int) -> int:
    """Odd components of the subgraph induced by the bits set in ``alive``."""
    odd = 0
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            reach = 0
            rest = frontier
            while rest:
                low = rest & -rest
                reach |= masks[low.bit_length() - 1]
                rest ^= low
            frontier = reach & alive & ~comp
            comp |= frontier
        alive &= ~comp
        odd += comp.bit_count() & 1
    return odd


# --- distances ---------------------------------------------------------------

def _bfs(adj: Mapping[str, Iterable[str]], sources: Iterable[str]) -> dict[str, int]:
    dist = {s: 0 for s in sources}
    queue = deque(dist)
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def edge_distance(g: AnyGraph, e1: Edge, e2: Edge) -> float:
    """Minimum graph distance between an endpoint of ``e1`` and one of ``e2``.

    Edges sharing an endpoint are at distance 0; edges in different
    components are at distance ``inf``.
    """
    for e in (e1, e2):
        if not g.has_edge(*e[:2]):
            raise KeyError(f"unknown edge {e[:2]}")
    dist = _bfs(g.adj, e1[:2])
    return min((dist.get(x, INF) for x in e2[:2]), default=INF)


def _factor_adj(vertices: Iterable[str], F: Iterable[Edge]) -> dict[str, list[str]]:
    adj: dict[str, list[str]] = {v: [] for v in vertices}
    for u, v in F:
        adj[u].append(v)
        adj[v].append(u)
    return adj


# --- factor predicates ---------------------------------------------------------

def _is_spanning_with_degrees(g: AnyGraph, F: EdgeSet, wanted) -> bool:
    degree = {v: 0 for v in g.vertices}
    for u, v in F:
        if not g.has_edge(u, v):
            return False
        degree[u] += 1
        degree[v] += 1
    return all(degree[v] == wanted(v) for v in g.vertices)


def is_f_factor(g: AnyGraph, f: DegreeSpec, F: Iterable[Edge]) -> bool:
    return _is_spanning_with_degrees(g, edge_set(F), lambda v: f[v])


def is_pc_factor(g: ColouredGraph, f: DegreeSpec, F: Iterable[Edge]) -> bool:
    """True iff ``F`` is an f-factor in which adjacent edges differ in colour."""
    F = edge_set(F)
    if not is_f_factor(g, f, F):
        return False
    used: set[tuple[str, int]] = set()
    for u, v in F:
        c = g.colour(u, v)
        for x in (u, v):
            if (x, c) in used:
                return False
            used.add((x, c))
    return True


def is_rc_factor(g: ColouredGraph, F: Iterable[Edge], r: int) -> bool:
    """True iff ``F`` is an r-factor whose components are rainbow."""
    F = edge_set(F)
    if not _is_spanning_with_degrees(g, F, lambda v: r):
        return False
    sub = Graph(g.vertices, tuple(F))
    label = {}
    for i, comp in enumerate(components(sub)):
        for v in comp:
            label[v] = i
    seen: set[tuple[int, int]] = set()
    for u, v in F:
        key = (label[u], g.colour(u, v))
        if key in seen:
            return False
        seen.add(key)
    return True


def monochromatic_violations(g: ColouredGraph, F: Iterable[Edge], d: int) -> list[tuple[Edge, Edge, float]]:
    """Pairs of equal-coloured F-edges closer than ``d`` inside the F-subgraph."""
    F = sorted(edge_set(F))
    adj = _factor_adj(g.vertices, F)
    by_colour: dict[int, list[Edge]] = {}
    for e in F:
        by_colour.setdefault(g.colour(*e), []).append(e)
    bad = []
    for edges in by_colour.values():
        for i, e1 in enumerate(edges):
            dist = _bfs(adj, e1)
            for e2 in edges[i + 1:]:
                dd = min(dist.get(x, INF) for x in e2)
                if dd < d:
                    bad.append((e1, e2, dd))
    return bad


def is_distance_d_factor(g: ColouredGraph, F: Iterable[Edge], r: int, d: int) -> bool:
    """True iff ``F`` is an r-factor that is distance-d-coloured as a graph."""
    F = edge_set(F)
    if not _is_spanning_with_degrees(g, F, lambda v: r):
        return False
    return not monochromatic_violations(g, F, d)


def is_distance_d_coloured(g: ColouredGraph, d: int) -> bool:
    return not monochromatic_violations(g, edge_set(g.edges), d)


# --- brute-force factor oracles ------------------------------------------------------

def iter_f_factors(g: AnyGraph, f: DegreeSpec, proper: bool = False) -> Iterator[EdgeSet]:
    """Yield every f-factor of ``g`` (properly coloured ones if ``proper``).

    Plain backtracking over the sorted edge list; an oracle for small graphs.
    """
    edges = sorted(edge_key(e[0], e[1]) for e in g.edges)
    colour = g.colour_of if proper else None
    need = {v: f[v] for v in g.vertices}
    # number of not-yet-decided edges at each vertex, for pruning
    left = {v: 0 for v in g.vertices}
    for u, v in edges:
        left[u] += 1
        left[v] += 1
    used: set[tuple[str, int]] = set()
    chosen: list[Edge] = []

    def rec(i):
        if i == len(edges):
            if all(n == 0 for n in need.values()):
                yield frozenset(chosen)
            return
        u, v = edges[i]
        left[u] -= 1
        left[v] -= 1
        c = colour[(u, v)] if colour is not None else None
        if need[u] > 0 and need[v] > 0 and (
                c is None or ((u, c) not in used and (v, c) not in used)):
            need[u] -= 1
            need[v] -= 1
            chosen.append((u, v))
            if c is not None:
                used.add((u, c))
                used.add((v, c))
            if need[u] <= left[u] and need[v] <= left[v]:
                yield from rec(i + 1)
            if c is not None:
                used.discard((u, c))
                used.discard((v, c))
            chosen.pop()
            need[u] += 1
            need[v] += 1
        if need[u] <= left[u] and need[v] <= left[v]:
            yield from rec(i + 1)
        left[u] += 1
        left[v] += 1

    if all(0 <= need[v] <= left[v] for v in g.vertices):
        yield from rec(0)


def brute_f_factor(g: AnyGraph, f: DegreeSpec) -> EdgeSet | None:
    return next(iter_f_factors(g, f), None)


def brute_pc_factor(g: ColouredGraph, f: DegreeSpec) -> EdgeSet | None:
    return next(iter_f_factors(g, f, proper=True), None)
