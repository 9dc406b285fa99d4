"""Empirical cross-checks of the palette characterisation on small graphs.

For each instance (an edge-coloured graph with a degree function) the
harness compares

(a) perfect matching of the coloured gadget  vs  no violating palette
    (and vs a brute-force search for a properly coloured f-factor),
(b) some palette is violating  vs  some palette fails the degree-count
    inequality, for each treatment of free vertices in G_S,
(c) on properly coloured inputs: the uncoloured (S, T) condition vs the
    palette condition vs brute-force f-factor existence.

Per-palette disagreements between "violating" and "fails the inequality"
are recorded as well, together with checks of the identity
odd(G - X) = h + sum over S of (d^c - f).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Iterator

from .certificates import PaletteScanner, Rule, _copies, first_c1_failure
from .gadgets import build_gfc
from .graph import (ColouredGraph, Graph, brute_f_factor, brute_pc_factor, components,
                    is_proper_colouring, odd_count_mask)
from .errors import Infeasible
from .matching import perfect_matching


def instance_code(g: ColouredGraph, f) -> str:
    """Compact reproducible name, e.g. ``f=2111;v0v1:1,v0v2:1,v0v3:2``."""
    fs = "".join(str(f[v]) for v in g.vertices)
    es = ",".join(f"{u}{v}:{c}" for u, v, c in g.edges)
    return f"f={fs};{es}"


def make_instance(n: int, colouring: dict[tuple[int, int], int], fvals) -> tuple[ColouredGraph, dict[str, int]]:
    names = [f"v{i}" for i in range(n)]
    edges = tuple((names[i], names[j], c) for (i, j), c in sorted(colouring.items()))
    k = max(colouring.values(), default=1)
    return ColouredGraph(tuple(names), edges, k), dict(zip(names, fvals))


def exhaustive_instances(max_n: int, k: int, fmax: int) -> Iterator[tuple[ColouredGraph, dict[str, int]]]:
    """All edge-coloured graphs on 1..max_n labelled vertices with colours
    from 1..k, and all f with values 0..fmax."""
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for colours in product(range(k + 1), repeat=len(pairs)):
            colouring = {p: c for p, c in zip(pairs, colours) if c}
            for fvals in product(range(fmax + 1), repeat=n):
                g, f = make_instance(n, colouring, fvals)
                yield ColouredGraph(g.vertices, g.edges, k), f


def random_instances(n: int, k: int, fmax: int, count: int, seed: int = 0,
                     edge_prob: float = 0.5) -> Iterator[tuple[ColouredGraph, dict[str, int]]]:
    """Random coloured G(n, p) graphs with f(v) drawn from 0..min(fmax, d^c(v)),
    so every sample has a gadget."""
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(count):
        colouring = {p: rng.randint(1, k) for p in pairs if rng.random() < edge_prob}
        colour_sets = [set() for _ in range(n)]
        for (i, j), c in colouring.items():
            colour_sets[i].add(c)
            colour_sets[j].add(c)
        fvals = [rng.randint(0, min(fmax, len(colour_sets[i]))) for i in range(n)]
        g, f = make_instance(n, colouring, fvals)
        yield ColouredGraph(g.vertices, g.edges, k), f


class _GsCounter:
    """Odd components of G_S by bitmask, for each rule."""

    def __init__(self, g: ColouredGraph, f, scanner: PaletteScanner):
        self.vertices = scanner.vertices
        pos = {u: i for i, u in enumerate(self.vertices)}
        self.edges = [(pos[u], pos[v], c) for u, v, c in g.edges]
        self.table = [
            {rule: {role: _copies(g, f, u, role, rule) for role, _, _ in opts} for rule in Rule}
            for u, opts in zip(self.vertices, scanner.options)
        ]

    def h(self, roles, rule: Rule) -> int:
        masks: list[int] = []
        placed = []
        for k, role in enumerate(roles):
            copies, twin = self.table[k][rule][role]
            ids = []
            for _, accepted in copies:
                ids.append((len(masks), accepted))
                masks.append(0)
            if twin:
                a, b = ids[0][0], ids[1][0]
                masks[a] |= 1 << b
                masks[b] |= 1 << a
            placed.append(ids)
        for a, b, c in self.edges:
            for i, acc in placed[a]:
                if c in acc:
                    for j, acc_b in placed[b]:
                        if c in acc_b:
                            masks[i] |= 1 << j
                            masks[j] |= 1 << i
        return odd_count_mask(masks, (1 << len(masks)) - 1)


@dataclass
class PaletteMismatch:
    """A palette where "violating" and "fails the inequality" disagree."""

    instance: str
    palette: dict[str, Any]
    odd: int
    x_size: int
    h: int
    lhs: int
    s_slack: int  # sum over S of d^c - f

    def to_json(self) -> dict[str, Any]:
        return dict(self.__dict__)


@dataclass
class InstanceResult:
    code: str
    feasible: bool
    matching: bool | None = None
    brute: bool | None = None
    violating: bool | None = None
    fails: dict[str, bool] = field(default_factory=dict)
    palettes: int = 0
    mismatches: dict[str, list[PaletteMismatch]] = field(default_factory=dict)
    bridging: dict[str, tuple[int, int]] = field(default_factory=dict)  # (mismatches, unexplained)
    proper: bool = False
    c1: bool | None = None
    f_factor: bool | None = None


def evaluate_instance(g: ColouredGraph, f, keep_mismatches: bool = True) -> InstanceResult:
    code = instance_code(g, f)
    try:
        gg = build_gfc(g, f)
    except Infeasible:
        return InstanceResult(code, feasible=False)
    res = InstanceResult(code, feasible=True)
    res.matching = perfect_matching(gg.graph) is not None
    res.brute = brute_pc_factor(g, f) is not None
    scanner = PaletteScanner(g, f, gg)
    gs = _GsCounter(g, f, scanner)
    cs = g.colour_sets
    slack = [len(cs[u]) - f[u] for u in scanner.vertices]
    res.violating = False
    fails = {rule: False for rule in Rule}
    mismatches: dict[Rule, list[PaletteMismatch]] = {rule: [] for rule in Rule}
    bridging = {rule: [0, 0] for rule in Rule}
    for roles, xmask, size in scanner.scan():
        res.palettes += 1
        odd = scanner.odd(xmask)
        violating = odd > size
        res.violating |= violating
        lhs = 0
        s_slack = 0
        for k, role in enumerate(roles):
            if role is None:
                continue
            kind, A = role
            u = scanner.vertices[k]
            if kind == "S":
                lhs += f[u]
                s_slack += slack[k]
            elif kind == "T":
                lhs += slack[k] + len(A)
            else:
                lhs += len(A)
        for rule in Rule:
            h = gs.h(roles, rule)
            fail = lhs < h
            fails[rule] |= fail
            if odd != h + s_slack:
                bridging[rule][0] += 1
                if _groups_connected(scanner, roles, xmask):
                    bridging[rule][1] += 1
            if fail != violating and keep_mismatches:
                mismatches[rule].append(PaletteMismatch(
                    code, scanner.palette(roles).to_json(), odd, size, h, lhs, s_slack))
    res.fails = {rule.value: v for rule, v in fails.items()}
    res.mismatches = {rule.value: v for rule, v in mismatches.items()}
    res.bridging = {rule.value: tuple(v) for rule, v in bridging.items()}
    if is_proper_colouring(g):
        res.proper = True
        res.c1 = first_c1_failure(g, f) is None
        res.f_factor = brute_f_factor(g, f) is not None
    return res


def _groups_connected(scanner: PaletteScanner, roles, xmask: int) -> bool:
    gg = scanner.gg
    removed = scanner.names(xmask)
    label = {}
    for i, comp in enumerate(components(gg.graph, removed)):
        for v in comp:
            label[v] = i
    for u, role in zip(scanner.vertices, roles):
        if role is not None and role[0] in "ST":
            continue
        rest = {label[x] for x in (*gg.s_vertices(u), *gg.t_vertices(u)) if x in label}
        if len(rest) > 1:
            return False
    return True


@dataclass
class HarnessReport:
    instances: int = 0
    infeasible: int = 0
    positive: int = 0
    negative: int = 0
    palettes: int = 0
    proper_instances: int = 0
    divergences_a: list[str] = field(default_factory=list)
    divergences_b: dict[str, list[str]] = field(default_factory=lambda: {r.value: [] for r in Rule})
    divergences_c: list[str] = field(default_factory=list)
    palette_mismatches: dict[str, list[PaletteMismatch]] = field(default_factory=lambda: {r.value: [] for r in Rule})
    bridging: dict[str, list[int]] = field(default_factory=lambda: {r.value: [0, 0] for r in Rule})
    negatives: list[str] = field(default_factory=list)

    def add(self, res: InstanceResult) -> None:
        self.instances += 1
        if not res.feasible:
            self.infeasible += 1
            return
        self.palettes += res.palettes
        if res.matching:
            self.positive += 1
        else:
            self.negative += 1
            self.negatives.append(res.code)
        if res.matching != (not res.violating) or res.matching != res.brute:
            self.divergences_a.append(res.code)
        for rule in Rule:
            if res.fails[rule.value] != res.violating:
                self.divergences_b[rule.value].append(res.code)
            self.palette_mismatches[rule.value].extend(res.mismatches[rule.value])
            for i, x in enumerate(res.bridging[rule.value]):
                self.bridging[rule.value][i] += x
        if res.proper:
            self.proper_instances += 1
            if not (res.c1 == (not res.violating) == res.f_factor):
                self.divergences_c.append(res.code)

    @property
    def has_divergence(self) -> bool:
        """Divergences that contradict a characterisation (the literal G_S reading is reported only)."""
        return bool(self.divergences_a or self.divergences_c or self.divergences_b[Rule.PARITY.value])

    def to_json(self, examples: int = 20) -> dict[str, Any]:
        return {
            "instances": self.instances,
            "infeasible_skipped": self.infeasible,
            "positive": self.positive,
            "negative": self.negative,
            "palettes_checked": self.palettes,
            "suite_a": {"divergences": len(self.divergences_a), "examples": sorted(self.divergences_a)[:examples]},
            "suite_b": {
                rule: {
                    "instance_divergences": len(self.divergences_b[rule]),
                    "instance_examples": sorted(self.divergences_b[rule])[:examples],
                    "palette_mismatches": len(self.palette_mismatches[rule]),
                    "palette_examples": [m.to_json() for m in self.palette_mismatches[rule][:examples]],
                    "bridging_identity_failures": self.bridging[rule][0],
                    "bridging_failures_with_connected_groups": self.bridging[rule][1],
                }
                for rule in sorted(self.divergences_b)
            },
            "suite_c": {"proper_instances": self.proper_instances,
                        "divergences": len(self.divergences_c),
                        "examples": sorted(self.divergences_c)[:examples]},
        }


def equivalence_harness(n: int = 3, k: int = 2, fmax: int = 2, sample: int | None = None,
                        seed: int = 0, keep_mismatches: bool = True, extra=()) -> HarnessReport:
    """Exhaustive sweep over all instances on at most ``n`` vertices, or
    ``sample`` random instances on exactly ``n`` vertices when given."""
    report = HarnessReport()
    if sample is None:
        source = exhaustive_instances(n, k, fmax)
    else:
        source = random_instances(n, k, fmax, sample, seed)
    for g, f in source:
        report.add(evaluate_instance(g, f, keep_mismatches))
    for g, f in extra:
        report.add(evaluate_instance(g, f, keep_mismatches))
    return report


def canonical_code(g: ColouredGraph, f) -> tuple:
    """Smallest encoding over all vertex relabellings and colour permutations."""
    from itertools import permutations

    n = len(g.vertices)
    pos = {v: i for i, v in enumerate(g.vertices)}
    fv = [f[v] for v in g.vertices]
    edges = [(pos[u], pos[v], c) for u, v, c in g.edges]
    used = sorted({c for _, _, c in edges})
    best = None
    for perm in permutations(range(n)):
        fs = tuple(fv[perm.index(i)] for i in range(n))
        for cperm in permutations(used):
            recolour = dict(zip(used, cperm))
            es = tuple(sorted((min(perm[a], perm[b]), max(perm[a], perm[b]), recolour[c])
                              for a, b, c in edges))
            code = (n, fs, es)
            if best is None or code < best:
                best = code
    return best


def violating_masks(masks: list[int]) -> Iterator[int]:
    """Every removal mask X with odd(G - X) > |X| (only |X| < n/2 can qualify)."""
    n = len(masks)
    full = (1 << n) - 1
    for removed in range(1 << n):
        size = removed.bit_count()
        if 2 * size >= n:
            continue
        if odd_count_mask(masks, full & ~removed) > size:
            yield removed


def check_normalization(g: ColouredGraph, f) -> tuple[int, list[str]]:
    """Normalise every violating set of the coloured gadget; returns
    (number of violating sets, failure descriptions)."""
    from .certificates import normalize_violating, x_of_palette
    from .graph import neighbour_masks

    gg = build_gfc(g, f)
    order, _, masks = neighbour_masks(gg.graph)
    count = 0
    failures = []
    for removed in violating_masks(masks):
        count += 1
        X = {order[i] for i in range(len(order)) if removed >> i & 1}
        try:
            X2, p = normalize_violating(gg, X)
            if x_of_palette(gg, p) != X2 or not _claims_hold(gg, X2):
                failures.append(f"{instance_code(g, f)} X={sorted(X)}: postcondition")
        except Exception as exc:  # recorded, not raised: the caller counts failures
            failures.append(f"{instance_code(g, f)} X={sorted(X)}: {exc}")
    return count, failures


def _claims_hold(gg, X) -> bool:
    """Both normal-form conditions on every gadget, checked independently."""
    from .certificates import is_violating

    if not is_violating(gg, X):
        return False
    for v in gg.source.vertices:
        S_v, T_v = set(gg.s_vertices(v)), set(gg.t_vertices(v))
        fv = gg.f[v]
        if X & T_v:
            if not T_v <= X or len(X & S_v) > fv - 2:
                return False
        elif X & S_v and not S_v <= X and len(X & S_v) > fv - 1:
            return False
    return True


def graph_classes(n: int) -> list[Graph]:
    """One labelled representative (on ``v0..v{n-1}``) per isomorphism class
    of simple graphs on ``n`` vertices."""
    from itertools import permutations

    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    names = tuple(f"v{i}" for i in range(n))
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        es = [p for i, p in enumerate(pairs) if bits >> i & 1]
        code = min(tuple(sorted(tuple(sorted((q[a], q[b]))) for a, b in es)) for q in perms)
        if code not in seen:
            seen.add(code)
            out.append(Graph(names, tuple((names[a], names[b]) for a, b in es)))
    return out
