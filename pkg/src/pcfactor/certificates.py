"""Palette systems and certificates for properly coloured f-factors.

A palette system assigns some vertices a role: ``S`` (take the whole
colour side of the gadget), ``T`` with a colour set ``A`` (take the T-side
plus the A-coloured S-vertices) or ``W`` with a non-empty ``A`` (take the
A-coloured S-vertices only). The union of these gadget vertices is the
set X of the palette; a palette is violating when removing X from the
coloured gadget leaves more than |X| odd components. Such a palette
certifies that no properly coloured f-factor exists, and when no factor
exists one can always be found.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Iterator, Mapping

from .errors import Infeasible, InvalidPalette, NotViolating, SearchCapExceeded
from .gadgets import GadgetGraph, build_gf, build_gfc, lift_matching
from .graph import (AnyGraph, ColouredGraph, DegreeSpec, EdgeSet, Graph,
                    components, edge_set, fhat, is_pc_factor,
                    neighbour_masks, odd_components, odd_count_mask)
from .matching import perfect_matching, tutte_witness


class Rule(str, enum.Enum):
    """How vertices outside S, T and W are treated when building G_S."""

    LITERAL = "literal"  # left untouched
    PARITY = "parity"    # twinned when f is even, like a W-vertex with A empty


@dataclass(frozen=True)
class PaletteSystem:
    S: frozenset[str] = frozenset()
    T: Mapping[str, frozenset[int]] = field(default_factory=dict)
    W: Mapping[str, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(self.S))
        object.__setattr__(self, "T", {v: frozenset(A) for v, A in sorted(self.T.items())})
        object.__setattr__(self, "W", {v: frozenset(A) for v, A in sorted(self.W.items())})

    def key(self) -> tuple:
        return (tuple(sorted(self.S)),
                tuple((v, tuple(sorted(A))) for v, A in sorted(self.T.items())),
                tuple((v, tuple(sorted(A))) for v, A in sorted(self.W.items())))

    def __hash__(self):
        return hash(self.key())

    def role(self, v: str) -> tuple[str, tuple[int, ...]] | None:
        if v in self.S:
            return ("S", ())
        if v in self.T:
            return ("T", tuple(sorted(self.T[v])))
        if v in self.W:
            return ("W", tuple(sorted(self.W[v])))
        return None

    def is_empty(self) -> bool:
        return not (self.S or self.T or self.W)

    def to_json(self) -> dict[str, Any]:
        return {"S": sorted(self.S),
                "T": {v: sorted(A) for v, A in sorted(self.T.items())},
                "W": {v: sorted(A) for v, A in sorted(self.W.items())}}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> PaletteSystem:
        return cls(frozenset(data.get("S", ())),
                   {v: frozenset(A) for v, A in data.get("T", {}).items()},
                   {v: frozenset(A) for v, A in data.get("W", {}).items()})

    @classmethod
    def from_roles(cls, roles: Mapping[str, tuple[str, tuple[int, ...]] | None]) -> PaletteSystem:
        S, T, W = set(), {}, {}
        for v, role in roles.items():
            if role is None:
                continue
            kind, A = role
            if kind == "S":
                S.add(v)
            elif kind == "T":
                T[v] = frozenset(A)
            else:
                W[v] = frozenset(A)
        return cls(frozenset(S), T, W)


def palette_problems(g: ColouredGraph, f: DegreeSpec, p: PaletteSystem,
                     per_vertex: bool = False) -> list[str]:
    """Reasons ``p`` is not a palette system of ``(g, f)``.

    The size bounds use the global maximum of f unless ``per_vertex``, in
    which case f(u) itself bounds the colour set of u.
    """
    problems = []
    known = set(g.vertices)
    top = fhat(f)
    seen: set[str] = set()
    for part, members in (("S", p.S), ("T", p.T), ("W", p.W)):
        for v in members:
            if v not in known:
                problems.append(f"{part}: unknown vertex {v}")
            if v in seen:
                problems.append(f"{v} appears in more than one of S, T, W")
            seen.add(v)
    for part, mapping, low, slack in (("T", p.T, 0, 2), ("W", p.W, 1, 1)):
        for v, A in mapping.items():
            if v not in known:
                continue
            bound = (f[v] if per_vertex else top) - slack
            if not A <= g.colour_sets[v]:
                problems.append(f"{part}[{v}]: colours {sorted(A - g.colour_sets[v])} not at {v}")
            if not low <= len(A) <= bound:
                problems.append(f"{part}[{v}]: |A| = {len(A)} outside {low}..{bound}")
    return problems


def _check_palette(gg: GadgetGraph, p: PaletteSystem) -> None:
    problems = palette_problems(gg.source, gg.f, p)
    if problems:
        raise InvalidPalette("; ".join(problems))


def x_of_palette(gg: GadgetGraph, p: PaletteSystem) -> frozenset[str]:
    """The gadget-vertex set selected by the palette system ``p``."""
    _check_palette(gg, p)
    X: set[str] = set()
    for u in p.S:
        X.update(gg.s_vertices(u))
    for u, A in p.T.items():
        X.update(gg.t_vertices(u))
        X.update(gg.s_sets[u][i] for i in A)
    for u, A in p.W.items():
        X.update(gg.s_sets[u][i] for i in A)
    return frozenset(X)


def x_size(g: ColouredGraph, f: DegreeSpec, p: PaletteSystem) -> int:
    """|X| computed from degrees alone, without building the gadget."""
    cs = g.colour_sets
    return (sum(len(cs[u]) for u in p.S)
            + sum(len(cs[u]) - f[u] + len(A) for u, A in p.T.items())
            + sum(len(A) for A in p.W.values()))


def is_violating(gg: GadgetGraph | Graph, X) -> bool:
    graph = gg.graph if isinstance(gg, GadgetGraph) else gg
    X = set(X)
    return odd_components(graph, X) > len(X)


# --- enumeration ------------------------------------------------------------------

def vertex_roles(g: ColouredGraph, f: DegreeSpec, u: str) -> list[tuple[str, tuple[int, ...]] | None]:
    """Every role ``u`` may take, with the per-vertex bounds |A| <= f(u)-2 / f(u)-1."""
    colours = sorted(g.colour_sets[u])
    roles: list[tuple[str, tuple[int, ...]] | None] = [None, ("S", ())]
    for size in range(0, f[u] - 1):
        roles.extend(("T", A) for A in combinations(colours, size))
    for size in range(1, f[u]):
        roles.extend(("W", A) for A in combinations(colours, size))
    return roles


def count_palettes(g: ColouredGraph, f: DegreeSpec) -> int:
    total = 1
    for u in g.vertices:
        total *= len(vertex_roles(g, f, u))
    return total


def enumerate_palettes(g: ColouredGraph, f: DegreeSpec) -> Iterator[PaletteSystem]:
    """Every palette system with per-vertex colour-set bounds, exactly once."""
    order = sorted(g.vertices)
    for choice in product(*(vertex_roles(g, f, u) for u in order)):
        yield PaletteSystem.from_roles(dict(zip(order, choice)))


class PaletteScanner:
    """Precomputed bitmask view of the palettes of one coloured gadget.

    ``scan()`` yields ``(roles, xmask, xsize)`` without building palette
    objects, which keeps exhaustive sweeps fast.
    """

    def __init__(self, g: ColouredGraph, f: DegreeSpec, gg: GadgetGraph | None = None):
        self.g = g
        self.f = f
        self.gg = gg if gg is not None else build_gfc(g, f)
        self.order_names, self.index, self.masks = neighbour_masks(self.gg.graph)
        self.full = (1 << len(self.order_names)) - 1
        self.vertices = sorted(g.vertices)
        self.options = []
        for u in self.vertices:
            s = {i: 1 << self.index[name] for i, name in self.gg.s_sets[u].items()}
            t = 0
            for name in self.gg.t_sets[u]:
                t |= 1 << self.index[name]
            opts = []
            for role in vertex_roles(g, f, u):
                if role is None:
                    mask = 0
                elif role[0] == "S":
                    mask = sum(s.values())
                elif role[0] == "T":
                    mask = t | sum(s[i] for i in role[1])
                else:
                    mask = sum(s[i] for i in role[1])
                opts.append((role, mask, mask.bit_count()))
            self.options.append(opts)

    def count(self) -> int:
        total = 1
        for opts in self.options:
            total *= len(opts)
        return total

    def scan(self) -> Iterator[tuple[tuple, int, int]]:
        for choice in product(*self.options):
            xmask = 0
            size = 0
            for _, mask, bits in choice:
                xmask |= mask
                size += bits
            yield tuple(c[0] for c in choice), xmask, size

    def odd(self, xmask: int) -> int:
        return odd_count_mask(self.masks, self.full & ~xmask)

    def palette(self, roles: tuple) -> PaletteSystem:
        return PaletteSystem.from_roles(dict(zip(self.vertices, roles)))

    def names(self, xmask: int) -> tuple[str, ...]:
        return tuple(name for i, name in enumerate(self.order_names) if xmask >> i & 1)


# --- normalisation of violating sets --------------------------------------------------

def normalize_violating(gg: GadgetGraph, X) -> tuple[frozenset[str], PaletteSystem]:
    """Turn any violating set into one of the form X_S for a palette system S.

    Works vertex by vertex; each step changes X only inside one gadget and
    keeps it violating:

    * if X meets T_v but contains all of S_v, or misses part of T_v, or
      already holds at least f(v)-1 vertices of S_v, drop T_v from X;
    * then, if X misses T_v and holds at least f(v) but not all of S_v,
      add the rest of S_v.

    Afterwards every gadget is met in one of the shapes S, T^A or W^A.
    """
    if not gg.coloured:
        raise ValueError("normalisation needs a coloured gadget")
    X = set(X)
    if not is_violating(gg, X):
        raise NotViolating("input set is not violating")
    f = gg.f
    for v in sorted(gg.source.vertices):
        S_v = set(gg.s_vertices(v))
        T_v = set(gg.t_vertices(v))
        if X & T_v and (S_v <= X or not T_v <= X or len(X & S_v) >= f[v] - 1):
            X -= T_v
        if not X & T_v and X & S_v and not S_v <= X and len(X & S_v) >= f[v]:
            X |= S_v
    if not is_violating(gg, X):
        raise AssertionError("normalisation lost the violation")
    p = extract_palette(gg, X)
    if x_of_palette(gg, p) != X:
        raise AssertionError("normalised set does not decompose as a palette")
    return frozenset(X), p


def extract_palette(gg: GadgetGraph, X) -> PaletteSystem:
    """Read off S, T^A and W^A from a set that meets every gadget in a palette shape."""
    X = set(X)
    S, T, W = set(), {}, {}
    for v in sorted(gg.source.vertices):
        S_v = gg.s_sets[v]
        T_v = set(gg.t_vertices(v))
        A = frozenset(i for i, name in S_v.items() if name in X)
        if S_v and len(A) == len(S_v) and not X & T_v:
            S.add(v)
        elif T_v and T_v <= X:
            T[v] = A
        elif not X & T_v and A:
            W[v] = A
        elif X & T_v:
            raise InvalidPalette(f"{v}: X takes part of T_{v}")
    return PaletteSystem(frozenset(S), T, W)


# --- certificates -----------------------------------------------------------------

@dataclass(frozen=True)
class Positive:
    factor: EdgeSet
    verdict = "yes"


@dataclass(frozen=True)
class Negative:
    palette: PaletteSystem
    X: tuple[str, ...]
    odd_count: int
    x_size: int
    verdict = "no"


@dataclass(frozen=True)
class InfeasibleDegree:
    vertex: str
    f_value: int
    colour_degree: int
    verdict = "no"


Certificate = Positive | Negative | InfeasibleDegree


def find_pc_factor(g: ColouredGraph, f: DegreeSpec, strategy: str = "smallest",
                   max_palettes: int = 2_000_000) -> Certificate:
    """Decide whether ``g`` has a properly coloured f-factor, with a certificate.

    ``strategy="smallest"`` scans all palettes by ascending |X| (then
    lexicographically) and returns the first violating one.
    ``strategy="normalize"`` takes a Tutte witness of the gadget and
    normalises it into palette form, which avoids the enumeration.
    """
    try:
        gg = build_gfc(g, f)
    except Infeasible as exc:
        return InfeasibleDegree(exc.vertex, exc.f_value, exc.degree)
    M = perfect_matching(gg.graph)
    if M is not None:
        return Positive(lift_matching(gg, M))
    if strategy == "normalize":
        X, p = normalize_violating(gg, tutte_witness(gg.graph))
        return Negative(p, tuple(sorted(X)), odd_components(gg.graph, X), len(X))
    if strategy != "smallest":
        raise ValueError(f"unknown strategy {strategy!r}")
    scanner = PaletteScanner(g, f, gg)
    if scanner.count() > max_palettes:
        raise SearchCapExceeded(
            f"{scanner.count()} palettes exceeds cap {max_palettes}; try strategy='normalize'")
    ranked = sorted(((size, scanner.palette(roles).key(), roles, xmask)
                     for roles, xmask, size in scanner.scan()), key=lambda t: t[:2])
    for size, _, roles, xmask in ranked:
        odd = scanner.odd(xmask)
        if odd > size:
            return Negative(scanner.palette(roles), scanner.names(xmask), odd, size)
    raise AssertionError("no perfect matching but no violating palette either")


def certificate_to_json(cert: Certificate) -> dict[str, Any]:
    if isinstance(cert, Positive):
        return {"kind": "positive", "factor": [list(e) for e in sorted(cert.factor)]}
    if isinstance(cert, Negative):
        return {"kind": "negative", "palette": cert.palette.to_json(), "X": list(cert.X),
                "odd_count": cert.odd_count, "x_size": cert.x_size}
    return {"kind": "infeasible_degree", "vertex": cert.vertex, "f": cert.f_value,
            "colour_degree": cert.colour_degree}


def certificate_from_json(data: Mapping[str, Any]) -> Certificate:
    kind = data.get("kind")
    if kind == "positive":
        return Positive(edge_set(data["factor"]))
    if kind == "negative":
        return Negative(PaletteSystem.from_json(data["palette"]), tuple(data["X"]),
                        int(data["odd_count"]), int(data["x_size"]))
    if kind == "infeasible_degree":
        return InfeasibleDegree(data["vertex"], int(data["f"]), int(data["colour_degree"]))
    raise ValueError(f"unknown certificate kind {kind!r}")


def check_certificate(g: ColouredGraph, f: DegreeSpec, cert: Certificate) -> list[str]:
    """Re-verify a certificate from scratch; returns the problems found."""
    if isinstance(cert, Positive):
        return [] if is_pc_factor(g, f, cert.factor) else ["factor is not a pc-f-factor"]
    if isinstance(cert, InfeasibleDegree):
        v = cert.vertex
        if v not in g.colour_sets:
            return [f"unknown vertex {v}"]
        if f[v] <= len(g.colour_sets[v]):
            return [f"f({v}) = {f[v]} does not exceed colour degree {len(g.colour_sets[v])}"]
        return []
    try:
        gg = build_gfc(g, f)
    except Infeasible as exc:
        return [str(exc)]
    problems = palette_problems(g, f, cert.palette)
    if problems:
        return problems
    X = x_of_palette(gg, cert.palette)
    if sorted(X) != sorted(cert.X):
        problems.append("listed X differs from the palette's X")
    odd = odd_components(gg.graph, X)
    if odd != cert.odd_count or len(X) != cert.x_size:
        problems.append(f"recorded counts differ: odd={odd}, |X|={len(X)}")
    if odd <= len(X):
        problems.append(f"palette is not violating: odd={odd} <= |X|={len(X)}")
    return problems


# --- the alternative statement: G_S and h(S) -------------------------------------------

def _copies(g: ColouredGraph, f: DegreeSpec, u: str, role, rule: Rule):
    """Replacement vertices for ``u`` in G_S as (name, accepted colours), and a twin flag."""
    colours = g.colour_sets[u]
    if role is None:
        if rule is Rule.PARITY and f[u] % 2 == 0:
            return [(f"{u}.0", colours), (f"{u}.1", colours)], True
        return [(u, colours)], False
    kind, A = role
    if kind == "S":
        return [], False
    if kind == "T":
        return [(f"{u}.{c}", frozenset([c])) for c in sorted(colours) if c not in A], False
    kept = colours - set(A)
    if (f[u] + len(A)) % 2 == 0:
        return [(f"{u}.0", kept), (f"{u}.1", kept)], True
    return [(u, kept)], False


def build_gs(g: ColouredGraph, f: DegreeSpec, p: PaletteSystem, rule: Rule = Rule.PARITY) -> Graph:
    """Delete S, c-split T^A and drop its A-copies, strip A-colours from W^A and
    twin it when f + |A| is even. Under ``Rule.PARITY`` free vertices with
    even f are twinned as well.
    """
    problems = palette_problems(g, f, p)
    if problems:
        raise InvalidPalette("; ".join(problems))
    return _gs_graph(g, f, {u: p.role(u) for u in g.vertices}, Rule(rule))


def _gs_graph(g, f, roles, rule) -> Graph:
    copies = {}
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for u in sorted(g.vertices):
        cs, twin = _copies(g, f, u, roles.get(u), rule)
        copies[u] = cs
        vertices.extend(name for name, _ in cs)
        if twin:
            edges.append((cs[0][0], cs[1][0]))
    for u, v, c in g.edges:
        for a, acc_a in copies[u]:
            if c not in acc_a:
                continue
            for b, acc_b in copies[v]:
                if c in acc_b:
                    edges.append((a, b))
    return Graph(tuple(vertices), tuple(edges))


def inequality_lhs(g: ColouredGraph, f: DegreeSpec, p: PaletteSystem) -> int:
    cs = g.colour_sets
    return (sum(f[u] for u in p.S)
            + sum(len(cs[u]) - f[u] + len(A) for u, A in p.T.items())
            + sum(len(A) for A in p.W.values()))


def palette_inequality(g: ColouredGraph, f: DegreeSpec, p: PaletteSystem,
                       rule: Rule = Rule.PARITY) -> tuple[int, int, bool]:
    """(lhs, h, lhs >= h) for the degree-count form of the condition."""
    h = odd_components(build_gs(g, f, p, rule))
    lhs = inequality_lhs(g, f, p)
    return lhs, h, lhs >= h


def collapsed_groups_connected(gg: GadgetGraph, p: PaletteSystem) -> bool:
    """Does every untouched or W-gadget remainder lie inside one component of G - X?"""
    X = x_of_palette(gg, p)
    label = {}
    for i, comp in enumerate(components(gg.graph, X)):
        for v in comp:
            label[v] = i
    for u in gg.source.vertices:
        if u in p.S or u in p.T:
            continue
        rest = {label[x] for x in (*gg.s_vertices(u), *gg.t_vertices(u)) if x not in X}
        if len(rest) > 1:
            return False
    return True


# --- classical f-factor conditions (uncoloured) ---------------------------------------

def x_st(gg: GadgetGraph, S, T) -> frozenset[str]:
    X: set[str] = set()
    for u in S:
        X.update(gg.s_vertices(u))
    for u in T:
        X.update(gg.t_vertices(u))
    return frozenset(X)


def tutte_f_condition(g: AnyGraph, f: DegreeSpec, S, T) -> tuple[frozenset[str], bool]:
    """X_{S,T} on the plain gadget and whether odd(G_f - X) <= |X|."""
    S, T = set(S), set(T)
    if S & T:
        raise ValueError("S and T must be disjoint")
    gg = build_gf(g, f)
    X = x_st(gg, S, T)
    return X, odd_components(gg.graph, X) <= len(X)


def h_st(g: AnyGraph, f: DegreeSpec, S, T) -> int:
    """Components C of G-(S u T) with sum of f over C plus e(C, T) odd."""
    S, T = set(S), set(T)
    count = 0
    for comp in components(g, S | T):
        parity = sum(f[v] for v in comp) + sum(1 for v in comp for w in g.adj[v] if w in T)
        count += parity % 2
    return count


def deficiency_form(g: AnyGraph, f: DegreeSpec, S, T, variant: str = "classical") -> tuple[int, int, bool]:
    """(gamma, h(S,T), gamma >= 0).

    ``classical``: gamma = sum_S f + sum_T (d_{G-S}(u) - f(u)) - h.
    ``printed``: gamma = sum_S f - sum_T (f(u) + d_S(u)) - h, with d_S(u)
    read as the number of neighbours of u in S.
    """
    S, T = set(S), set(T)
    if S & T:
        raise ValueError("S and T must be disjoint")
    h = h_st(g, f, S, T)
    into_s = {u: sum(1 for w in g.adj[u] if w in S) for u in T}
    if variant == "classical":
        gamma = sum(f[u] for u in S) + sum(g.degree(u) - into_s[u] - f[u] for u in T) - h
    elif variant == "printed":
        gamma = sum(f[u] for u in S) - sum(f[u] + into_s[u] for u in T) - h
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return gamma, h, gamma >= 0


def _disjoint_pairs(vertices):
    order = sorted(vertices)
    for labels in product((0, 1, 2), repeat=len(order)):
        yield ({v for v, x in zip(order, labels) if x == 1},
               {v for v, x in zip(order, labels) if x == 2})


def first_deficient_pair(g: AnyGraph, f: DegreeSpec, variant: str = "classical"):
    """The first (S, T) with negative deficiency, or None if all hold."""
    for S, T in _disjoint_pairs(g.vertices):
        if not deficiency_form(g, f, S, T, variant)[2]:
            return S, T
    return None


def first_c1_failure(g: AnyGraph, f: DegreeSpec):
    """The first (S, T) with odd(G_f - X_{S,T}) > |X_{S,T}|, or None.

    Raises Infeasible when f exceeds a degree (G_f does not exist).
    """
    gg = build_gf(g, f)
    order, index, masks = neighbour_masks(gg.graph)
    full = (1 << len(order)) - 1

    def mask(names):
        m = 0
        for x in names:
            m |= 1 << index[x]
        return m

    smask = {u: mask(gg.s_vertices(u)) for u in g.vertices}
    tmask = {u: mask(gg.t_vertices(u)) for u in g.vertices}
    for S, T in _disjoint_pairs(g.vertices):
        X = 0
        for u in S:
            X |= smask[u]
        for u in T:
            X |= tmask[u]
        if odd_count_mask(masks, full & ~X) > X.bit_count():
            return S, T
    return None


def first_violating_palette(g: ColouredGraph, f: DegreeSpec) -> PaletteSystem | None:
    """Exhaustive scan in enumeration order; None means condition (C2) holds."""
    scanner = PaletteScanner(g, f)
    for roles, xmask, size in scanner.scan():
        if scanner.odd(xmask) > size:
            return scanner.palette(roles)
    return None

