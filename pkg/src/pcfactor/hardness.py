"""Reductions from 1-in-3-colouring of 3-uniform hypergraphs.

Two gadget families are built here: one whose rainbow-component r-factors
correspond to 1-in-3-colourings (cliques joined through hyperedge vertices),
and one whose distance-2-coloured r-factors do (Kneser graphs
KG(2r-1, r-1) with their canonical colouring in place of the cliques).
Both come with the forward translation colouring -> factor, the reverse
translation factor -> colouring, and an exhaustive factor search that is
practical at desk scale thanks to constraint propagation.

Vertex names: the rc gadget uses ``x.c.<i>`` for the central clique of
``x``, ``x.q.<i>.<j>`` for its i-th small clique and ``v.e<k>`` for the
k-th hyperedge. The d2c gadget uses ``x.q.<i>.<X>`` and ``x.qb.<i>.<X>``
where ``<X>`` lists the elements of the subset, e.g. ``x.q.2.13``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

from .errors import InvalidColouring, NotAFactor, NotRegular, SearchCapExceeded, TooLarge
from .graph import (INF, ColouredGraph, Edge, EdgeSet, Graph, components, edge_key, edge_set,
                    is_distance_d_factor, is_rc_factor)


@dataclass(frozen=True)
class Hypergraph3:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            raise ValueError("duplicate hypergraph vertex")
        for e in self.edges:
            if len(e) != 3 or len(set(e)) != 3:
                raise ValueError(f"hyperedge {e} must have three distinct vertices")
            if not set(e) <= known:
                raise ValueError(f"hyperedge {e} uses an unknown vertex")

    @cached_property
    def incidence(self) -> dict[str, tuple[int, ...]]:
        """Indices of the edges containing each vertex, in input order."""
        inc: dict[str, list[int]] = {v: [] for v in self.vertices}
        for k, e in enumerate(self.edges):
            for v in e:
                inc[v].append(k)
        return {v: tuple(ks) for v, ks in inc.items()}

    def degree(self, v: str) -> int:
        return len(self.incidence[v])

    def regularity(self) -> int | None:
        """The common degree, or None if degrees differ."""
        degrees = {self.degree(v) for v in self.vertices}
        return degrees.pop() if len(degrees) == 1 else None

    def position(self, v: str, k: int) -> int:
        """1-based position of edge ``k`` among the edges of ``v``."""
        return self.incidence[v].index(k) + 1

    def require_regular(self, rho: int) -> None:
        for v in self.vertices:
            if self.degree(v) != rho:
                raise NotRegular(rho, v, self.degree(v))


def complete_3_uniform(vertices: Iterable[str]) -> Hypergraph3:
    vs = tuple(vertices)
    return Hypergraph3(vs, tuple(combinations(vs, 3)))


# --- 1-in-3-colourings ------------------------------------------------------------

def is_1in3(h: Hypergraph3, phi: Mapping[str, int]) -> bool:
    if set(phi) != set(h.vertices) or any(phi[v] not in (-1, 1) for v in h.vertices):
        return False
    return all(sum(phi[v] == 1 for v in e) == 1 for e in h.edges)


def check_1in3(h: Hypergraph3, phi: Mapping[str, int]) -> None:
    if not is_1in3(h, phi):
        raise InvalidColouring("not a 1-in-3-colouring")


def brute_1in3(h: Hypergraph3, cap: int = 24) -> dict[str, int] | None:
    """First valid assignment in lexicographic order (+1 before -1, vertices
    in input order), or None."""
    if len(h.vertices) > cap:
        raise TooLarge(f"{len(h.vertices)} vertices exceeds cap {cap}")
    order = h.vertices
    phi: dict[str, int] = {}

    def consistent(v: str) -> bool:
        for k in h.incidence[v]:
            values = [phi.get(x) for x in h.edges[k]]
            plus = values.count(1)
            if plus > 1 or (None not in values and plus == 0):
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for value in (1, -1):
            phi[v] = value
            if consistent(v) and rec(i + 1):
                return True
        del phi[v]
        return False

    return dict(phi) if rec(0) else None


def all_1in3(h: Hypergraph3) -> list[dict[str, int]]:
    """Every 1-in-3-colouring (plain enumeration, small inputs only)."""
    if len(h.vertices) > 20:
        raise TooLarge("too many vertices to enumerate colourings")
    out = []
    for bits in range(1 << len(h.vertices)):
        phi = {v: 1 if bits >> i & 1 else -1 for i, v in enumerate(h.vertices)}
        if is_1in3(h, phi):
            out.append(phi)
    return out


# --- Kneser graphs ------------------------------------------------------------------

def subset_name(A: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(A))) + "}"


def kneser_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return list(combinations(range(1, n + 1), k))


def kneser(n: int, k: int) -> Graph:
    """KG(n, k): k-subsets of [n] in lexicographic order, adjacent when disjoint."""
    subsets = kneser_subsets(n, k)
    names = [subset_name(A) for A in subsets]
    edges = tuple((names[i], names[j]) for i, j in combinations(range(len(subsets)), 2)
                  if not set(subsets[i]) & set(subsets[j]))
    return Graph(tuple(names), edges)


def canonical_colour(r: int, A: Iterable[int], B: Iterable[int]) -> int:
    """The element of [2r-1] missing from A and B (A, B disjoint (r-1)-sets)."""
    rest = set(range(1, 2 * r)) - set(A) - set(B)
    if len(rest) != 1:
        raise ValueError(f"{sorted(A)} and {sorted(B)} are not adjacent in KG({2 * r - 1},{r - 1})")
    return rest.pop()


def canonical_colouring(r: int) -> ColouredGraph:
    if r < 2:
        raise ValueError("r must be at least 2")
    subsets = kneser_subsets(2 * r - 1, r - 1)
    edges = []
    for A, B in combinations(subsets, 2):
        if not set(A) & set(B):
            edges.append((subset_name(A), subset_name(B), canonical_colour(r, A, B)))
    return ColouredGraph(tuple(map(subset_name, subsets)), tuple(edges), 2 * r - 1)


def girth(g: Graph) -> float:
    """Length of a shortest cycle (BFS from every vertex)."""
    best = INF
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: None}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
            frontier = nxt
    return best


# --- rc gadget --------------------------------------------------------------------

def _clique_edges(names: list[str]) -> list[Edge]:
    return [(names[a], names[b]) for a, b in combinations(range(len(names)), 2)]


def rc_central(x: str, i: int) -> str:
    return f"{x}.c.{i}"


def rc_small(x: str, i: int, j: int) -> str:
    return f"{x}.q.{i}.{j}"


def edge_vertex(k: int) -> str:
    return f"v.e{k + 1}"


def build_rc_gadget(h: Hypergraph3, r: int) -> ColouredGraph:
    if r < 2:
        raise ValueError("r must be at least 2")
    h.require_regular(r + 1)
    rho0 = comb(r, 2)
    vertices: list[str] = []
    edges: list[tuple[str, str, int]] = []
    for x in h.vertices:
        central = [rc_central(x, i) for i in range(1, r + 2)]
        vertices.extend(central)
        for c, (a, b) in enumerate(_clique_edges(central), start=1):
            edges.append((a, b, c))
        for i in range(1, r + 2):
            small = [rc_small(x, i, j) for j in range(1, r + 1)]
            vertices.extend(small)
            for c, (a, b) in enumerate(_clique_edges(small), start=1):
                edges.append((a, b, c))
            for j, q in enumerate(small, start=1):
                edges.append((central[i - 1], q, rho0 + j))
    for k, e in enumerate(h.edges):
        v = edge_vertex(k)
        vertices.append(v)
        for x in e:
            i = h.position(x, k)
            for j in range(1, r + 1):
                edges.append((v, rc_small(x, i, j), rho0 + j))
    return ColouredGraph(tuple(vertices), tuple(edges), comb(r + 1, 2))


def rc_gadget_size(h: Hypergraph3, r: int) -> tuple[int, int]:
    """Closed-form (vertex count, edge count) of the rc gadget."""
    n, m = len(h.vertices), len(h.edges)
    per_vertex_edges = comb(r + 1, 2) + (r + 1) * (comb(r, 2) + r)
    return n * (r + 1) ** 2 + m, n * per_vertex_edges + 3 * r * m


def rc_factor_from_colouring(h: Hypergraph3, r: int, phi: Mapping[str, int]) -> EdgeSet:
    check_1in3(h, phi)
    F: set[Edge] = set()
    for x in h.vertices:
        central = [rc_central(x, i) for i in range(1, r + 2)]
        if phi[x] == 1:
            F.update(_clique_edges(central))
        for i, k in enumerate(h.incidence[x], start=1):
            small = [rc_small(x, i, j) for j in range(1, r + 1)]
            apex = edge_vertex(k) if phi[x] == 1 else central[i - 1]
            F.update(_clique_edges([apex] + small))
    return edge_set(F)


def rc_colouring_from_factor(h: Hypergraph3, r: int, F: Iterable[Edge]) -> dict[str, int]:
    """+1 exactly for the vertices whose small cliques hang off hyperedge vertices."""
    F = edge_set(F)
    phi = {}
    for x in h.vertices:
        attached = {edge_key(edge_vertex(k), rc_small(x, i, 1)) in F
                    for i, k in enumerate(h.incidence[x], start=1)}
        if len(attached) != 1:
            raise NotAFactor(f"small cliques of {x} are attached inconsistently")
        phi[x] = 1 if attached.pop() else -1
    if not is_1in3(h, phi):
        raise NotAFactor("factor does not induce a 1-in-3-colouring")
    return phi


# --- d2c gadget -------------------------------------------------------------------

def d2c_name(x: str, i: int, X: Iterable[int], bar: bool = False) -> str:
    return f"{x}.{'qb' if bar else 'q'}.{i}.{''.join(map(str, sorted(X)))}"


def build_d2c_gadget(h: Hypergraph3, r: int) -> ColouredGraph:
    if r < 2:
        raise ValueError("r must be at least 2")
    rho = comb(2 * r - 1, r - 1)
    h.require_regular(rho)
    subsets = kneser_subsets(2 * r - 1, r - 1)
    low = set(range(1, r))            # x_i is x_i^{low}
    high = set(range(r + 1, 2 * r))   # the barred apex is xbar_i^{high}
    kn = [(A, B) for A, B in combinations(subsets, 2) if not set(A) & set(B)]
    vertices: list[str] = []
    edges: list[tuple[str, str, int]] = []
    for x in h.vertices:
        for i in range(1, rho + 1):
            for bar in (False, True):
                vertices.extend(d2c_name(x, i, X, bar) for X in subsets)
                for A, B in kn:
                    edges.append((d2c_name(x, i, A, bar), d2c_name(x, i, B, bar), canonical_colour(r, A, B)))
            apex = d2c_name(x, i, high, bar=True)
            for X in subsets:
                if not low & set(X):
                    edges.append((apex, d2c_name(x, i, X), canonical_colour(r, low, X)))
        # central gadget: x_i plays the role of the i-th subset
        for a, b in combinations(range(len(subsets)), 2):
            A, B = subsets[a], subsets[b]
            if not set(A) & set(B):
                edges.append((d2c_name(x, a + 1, low), d2c_name(x, b + 1, low), canonical_colour(r, A, B)))
    for k, e in enumerate(h.edges):
        v = edge_vertex(k)
        vertices.append(v)
        for x in e:
            i = h.position(x, k)
            for X in subsets:
                if not high & set(X):
                    edges.append((v, d2c_name(x, i, X, bar=True), canonical_colour(r, high, X)))
    return ColouredGraph(tuple(vertices), tuple(edges), 2 * r - 1)


def _d2c_parts(x: str, i: int, r: int):
    subsets = kneser_subsets(2 * r - 1, r - 1)
    low = tuple(range(1, r))
    high = tuple(range(r + 1, 2 * r))
    q = [d2c_name(x, i, X) for X in subsets]
    qb = [d2c_name(x, i, X, bar=True) for X in subsets]
    return subsets, d2c_name(x, i, low), d2c_name(x, i, high, bar=True), q, qb


def _induced(g: ColouredGraph, names: Iterable[str]) -> set[Edge]:
    keep = set(names)
    return {edge_key(u, v) for u, v, _ in g.edges if u in keep and v in keep}


def d2c_forced_edges(h: Hypergraph3, r: int, g: ColouredGraph | None = None) -> EdgeSet:
    """Kneser edges avoiding the two apexes of every copy: these lie in every
    distance-2-coloured r-factor of the gadget."""
    g = g or build_d2c_gadget(h, r)
    rho = comb(2 * r - 1, r - 1)
    F: set[Edge] = set()
    for x in h.vertices:
        for i in range(1, rho + 1):
            _, xi, xbar, q, qb = _d2c_parts(x, i, r)
            F |= _induced(g, set(q) - {xi})
            F |= _induced(g, set(qb) - {xbar})
    return edge_set(F)


def d2c_factor_from_colouring(h: Hypergraph3, r: int, phi: Mapping[str, int]) -> EdgeSet:
    check_1in3(h, phi)
    g = build_d2c_gadget(h, r)
    F: set[Edge] = set()
    for x in h.vertices:
        centrals = []
        for i, k in enumerate(h.incidence[x], start=1):
            _, xi, xbar, q, qb = _d2c_parts(x, i, r)
            centrals.append(xi)
            if phi[x] == 1:
                F |= _induced(g, (set(q) - {xi}) | {xbar})
                F |= _induced(g, (set(qb) - {xbar}) | {edge_vertex(k)})
            else:
                F |= _induced(g, q)
                F |= _induced(g, qb)
        if phi[x] == 1:
            F |= _induced(g, centrals)
    # _induced over the central set also picks up nothing else: x_i are pairwise
    # adjacent only through the central gadget
    return edge_set(F)


def d2c_colouring_from_factor(h: Hypergraph3, r: int, F: Iterable[Edge]) -> dict[str, int]:
    """+1 exactly for the vertices whose central gadget is used."""
    F = edge_set(F)
    phi = {}
    for x in h.vertices:
        centrals = {_d2c_parts(x, i, r)[1] for i in range(1, len(h.incidence[x]) + 1)}
        used = any(u in centrals and v in centrals for u, v in F)
        phi[x] = 1 if used else -1
    if not is_1in3(h, phi):
        raise NotAFactor("factor does not induce a 1-in-3-colouring")
    return phi


# --- exhaustive factor search -------------------------------------------------------

class _Rainbow:
    """Union-find over vertices tracking the colours used by each component."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.colours: list[frozenset[int]] = [frozenset()] * n

    def copy(self) -> _Rainbow:
        other = _Rainbow.__new__(_Rainbow)
        other.parent = self.parent[:]
        other.colours = self.colours[:]
        return other

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            a = self.parent[a]
        return a

    def allows(self, a: int, b: int, c: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if c in self.colours[ra] or c in self.colours[rb]:
            return False
        return ra == rb or not self.colours[ra] & self.colours[rb]

    def add(self, a: int, b: int, c: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.colours[ra] = self.colours[ra] | self.colours[rb]
        self.colours[ra] = self.colours[ra] | {c}


class _Distance:
    """Chosen edges as adjacency lists, checking distance-d colouring locally."""

    def __init__(self, n: int, d: int):
        self.d = d
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]

    def copy(self) -> _Distance:
        other = _Distance.__new__(_Distance)
        other.d = self.d
        other.adj = [lst[:] for lst in self.adj]
        return other

    def _ball(self, sources: Iterable[int], radius: int, extra: tuple[int, int] | None = None) -> dict[int, int]:
        dist = {s: 0 for s in sources}
        frontier = list(dist)
        for depth in range(1, radius + 1):
            nxt = []
            for u in frontier:
                nbrs = [w for w, _ in self.adj[u]]
                if extra and u in extra:
                    nbrs.append(extra[0] if u == extra[1] else extra[1])
                for w in nbrs:
                    if w not in dist:
                        dist[w] = depth
                        nxt.append(w)
            frontier = nxt
        return dist

    def allows(self, a: int, b: int, c: int) -> bool:
        d = self.d
        if d <= 0:
            return True
        # the new edge against existing edges of colour c
        near = self._ball((a, b), d - 1)
        for u in near:
            if any(col == c for _, col in self.adj[u]):
                return False
        if d == 1:
            return True
        # existing pairs brought closer than d through the new edge: each
        # such pair has one edge within d-2 of a and the other within d-2 of b
        # (measured through the new edge, so checking both sides suffices)
        side_a = self._ball((a,), d - 2)
        side_b = self._ball((b,), d - 2)
        cols_a: dict[int, list[tuple[int, tuple[int, int]]]] = {}
        for u, du in side_a.items():
            for w, col in self.adj[u]:
                cols_a.setdefault(col, []).append((du, (min(u, w), max(u, w))))
        for u, du in side_b.items():
            for w, col in self.adj[u]:
                here = (min(u, w), max(u, w))
                for da, other in cols_a.get(col, ()):
                    if other != here and da + du + 1 < d:
                        return False
        return True

    def add(self, a: int, b: int, c: int) -> None:
        self.adj[a].append((b, c))
        self.adj[b].append((a, c))


@dataclass
class SearchStats:
    nodes: int = 0
    forced: int = 0


class FactorSearch:
    """Exhaustive search for an r-factor under a monotone colour constraint.

    ``mode`` is ``"rc"`` (components rainbow) or ``"distance"`` (distance-d
    coloured). Edge states are undecided/in/out; after every decision the
    state is propagated to a fixpoint (edges that would break the
    constraint are dropped, vertices whose remaining options equal their
    need take them all, and a vertex needing as many edges as it has
    colour groups takes its singleton groups). Branching picks the vertex
    with the fewest completions and tries each combination of its options.
    """

    def __init__(self, g: ColouredGraph, r: int, mode: str = "rc", d: int = 2,
                 max_nodes: int = 2_000_000, max_edges: int = 5000):
        if mode not in ("rc", "distance"):
            raise ValueError(f"unknown mode {mode!r}")
        if len(g.edges) > max_edges:
            raise TooLarge(f"{len(g.edges)} edges exceeds cap {max_edges}")
        self.g, self.r, self.mode, self.d = g, r, mode, d
        self.max_nodes = max_nodes
        self.order = list(g.vertices)
        self.index = {v: i for i, v in enumerate(self.order)}
        self.edges = sorted((min(self.index[u], self.index[v]), max(self.index[u], self.index[v]), c)
                            for u, v, c in g.edges)
        self.incident: list[list[int]] = [[] for _ in self.order]
        for k, (a, b, _) in enumerate(self.edges):
            self.incident[a].append(k)
            self.incident[b].append(k)
        self.stats = SearchStats()

    def _fresh(self):
        n = len(self.order)
        cons = _Rainbow(n) if self.mode == "rc" else _Distance(n, self.d)
        return [None] * len(self.edges), [0] * n, cons

    def _include(self, state, k: int) -> bool:
        status, deg, cons = state
        a, b, c = self.edges[k]
        if deg[a] >= self.r or deg[b] >= self.r or not cons.allows(a, b, c):
            return False
        status[k] = True
        deg[a] += 1
        deg[b] += 1
        cons.add(a, b, c)
        return True

    def _propagate(self, state, dirty: set[int]) -> bool:
        status, deg, cons = state
        while dirty:
            v = dirty.pop()
            need = self.r - deg[v]
            viable = []
            for k in self.incident[v]:
                if status[k] is not None:
                    continue
                a, b, c = self.edges[k]
                if deg[a] < self.r and deg[b] < self.r and cons.allows(a, b, c):
                    viable.append(k)
                else:
                    status[k] = False
                    dirty.add(b if a == v else a)
            if len(viable) < need:
                return False
            take: list[int] = []
            if need == 0:
                for k in viable:
                    status[k] = False
                    a, b, _ = self.edges[k]
                    dirty.add(b if a == v else a)
                continue
            if len(viable) == need:
                take = viable
            else:
                groups: dict[int, list[int]] = {}
                for k in viable:
                    groups.setdefault(self.edges[k][2], []).append(k)
                if len(groups) < need:
                    return False
                if len(groups) == need:
                    take = [ks[0] for ks in groups.values() if len(ks) == 1]
            for k in take:
                if status[k] is not None:
                    continue
                if not self._include(state, k):
                    return False
                self.stats.forced += 1
                a, b, _ = self.edges[k]
                dirty.update((a, b))
                for u in (a, b):
                    dirty.update(self.edges[j][0] for j in self.incident[u])
                    dirty.update(self.edges[j][1] for j in self.incident[u])
            if take:
                dirty.add(v)
        return True

    def _touched(self, k: int) -> set[int]:
        a, b, _ = self.edges[k]
        out = {a, b}
        radius = 1 if self.mode == "rc" else max(self.d, 1)
        frontier = {a, b}
        for _ in range(radius):
            nxt = set()
            for u in frontier:
                for j in self.incident[u]:
                    nxt.update(self.edges[j][:2])
            frontier = nxt - out
            out |= nxt
        return out

    def _copy(self, state):
        status, deg, cons = state
        return status[:], deg[:], cons.copy()

    def search(self, forced: Iterable[Edge] = ()) -> EdgeSet | None:
        state = self._fresh()
        for u, v in edge_set(forced):
            k = self._edge_index(u, v)
            if state[0][k] is None and not self._include(state, k):
                return None
        if not self._propagate(state, set(range(len(self.order)))):
            return None
        result = self._search(state)
        if result is None:
            return None
        F = edge_set((self.order[a], self.order[b]) for a, b, _ in result)
        ok = is_rc_factor(self.g, F, self.r) if self.mode == "rc" else \
            is_distance_d_factor(self.g, F, self.r, self.d)
        assert ok, "search produced an invalid factor"
        return F

    def _edge_index(self, u: str, v: str) -> int:
        a, b = sorted((self.index[u], self.index[v]))
        for k in self.incident[a]:
            if self.edges[k][:2] == (a, b):
                return k
        raise KeyError(f"unknown edge {u}-{v}")

    def _search(self, state):
        self.stats.nodes += 1
        if self.stats.nodes > self.max_nodes:
            raise SearchCapExceeded(f"search exceeded {self.max_nodes} nodes")
        status, deg, cons = state
        best = None
        for v in range(len(self.order)):
            need = self.r - deg[v]
            if need == 0:
                continue
            options = [k for k in self.incident[v] if status[k] is None]
            count = comb(len(options), need)
            if best is None or count < best[0]:
                best = (count, v, options, need)
        if best is None:
            return [self.edges[k] for k, s in enumerate(status) if s]
        _, v, options, need = best
        for chosen in combinations(options, need):
            child = self._copy(state)
            ok = True
            dirty: set[int] = set()
            for k in options:
                if k not in chosen:
                    child[0][k] = False
                    dirty |= set(self.edges[k][:2])
            for k in chosen:
                if not self._include(child, k):
                    ok = False
                    break
                dirty |= self._touched(k)
            if ok and self._propagate(child, dirty):
                found = self._search(child)
                if found is not None:
                    return found
        return None


def rc_factor_search(g: ColouredGraph, r: int, max_nodes: int = 2_000_000) -> EdgeSet | None:
    return FactorSearch(g, r, "rc", max_nodes=max_nodes).search()


def d2c_factor_search(g: ColouredGraph, r: int, d: int = 2, forced: Iterable[Edge] = (),
                      max_nodes: int = 2_000_000) -> EdgeSet | None:
    return FactorSearch(g, r, "distance", d=d, max_nodes=max_nodes).search(forced)


def component_count(g: ColouredGraph, F: Iterable[Edge]) -> int:
    return len(components(Graph(g.vertices, tuple(edge_set(F)))))


def regular_hypergraphs(n: int, degree: int = 3):
    """Simple ``degree``-regular 3-uniform hypergraphs on ``h0..h{n-1}``.

    Vertices enter in label order (an edge may only introduce the next
    unused labels), which removes most relabelled duplicates; the output
    still contains some isomorphic copies.
    """
    deg = [0] * n
    edges: list[tuple[int, int, int]] = []
    names = tuple(f"h{i}" for i in range(n))

    def rec(used: int):
        v = next((i for i in range(n) if deg[i] < degree), None)
        if v is None:
            yield Hypergraph3(names, tuple(tuple(names[x] for x in e) for e in edges))
            return
        if v >= used:
            return
        last = edges[-1] if edges and edges[-1][0] == v else None
        cands = [x for x in range(v + 1, min(n, used + 2)) if deg[x] < degree]
        for pair in combinations(cands, 2):
            e = (v,) + pair
            new = [x for x in pair if x >= used]
            if new != list(range(used, used + len(new))):
                continue
            if (last is not None and e <= last) or e in edges:
                continue
            for x in e:
                deg[x] += 1
            edges.append(e)
            yield from rec(max(used, e[2] + 1))
            edges.pop()
            for x in e:
                deg[x] -= 1

    if n:
        yield from rec(1)
