"""Maximum cardinality matching in general graphs.

``maximum_matching`` is Edmonds' blossom algorithm in its O(V^3) form: one
alternating-tree search per exposed vertex, contracting odd cycles by
relabelling their base. Vertices are scanned in sorted order and
neighbours in sorted order, so the result is deterministic.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .errors import TooLarge
from .graph import AnyGraph, EdgeSet, Graph, edge_key, neighbour_masks, odd_components, odd_count_mask


def _blossom(n: int, adj: list[list[int]]) -> list[int]:
    mate = [-1] * n

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        parent = [-1] * n
        base = list(range(n))
        in_tree = [False] * n
        in_tree[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, in_blossom: list[bool]):
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if base[v] == base[w] or mate[v] == w:
                    continue
                if w == root or (mate[w] != -1 and parent[mate[w]] != -1):
                    # odd cycle: contract the blossom onto its base
                    b = lca(v, w)
                    in_blossom = [False] * n
                    mark_path(v, b, w, in_blossom)
                    mark_path(w, b, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = b
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[w] == -1:
                    parent[w] = v
                    if mate[w] == -1:
                        return w, parent
                    in_tree[mate[w]] = True
                    queue.append(mate[w])
        return -1, parent

    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = find_augmenting(root)
        while end != -1:
            prev = parent[end]
            nxt = mate[prev]
            mate[end] = prev
            mate[prev] = end
            end = nxt
    return mate


def maximum_matching(g: AnyGraph) -> EdgeSet:
    """A maximum cardinality matching of ``g`` as a set of edge keys."""
    order = sorted(g.vertices)
    index = {v: i for i, v in enumerate(order)}
    adj = [[index[w] for w in g.adj[v]] for v in order]
    mate = _blossom(len(order), adj)
    return frozenset(edge_key(order[i], order[j]) for i, j in enumerate(mate) if i < j)


def perfect_matching(g: AnyGraph) -> EdgeSet | None:
    if len(g.vertices) % 2:
        return None
    m = maximum_matching(g)
    return m if 2 * len(m) == len(g.vertices) else None


def is_matching(g: AnyGraph, M) -> bool:
    covered = set()
    for u, v in M:
        if not g.has_edge(u, v) or u in covered or v in covered:
            return False
        covered.update((u, v))
    return True


def brute_matching(g: AnyGraph, cap: int | None = 24) -> int:
    """Exact maximum matching size by exhaustive search (test oracle).

    Branches on the first uncovered vertex: either leave it exposed or
    match it to one of its free neighbours.
    """
    if cap is not None and len(g.edges) > cap:
        raise TooLarge(f"{len(g.edges)} edges exceeds brute-force cap {cap}")
    order, _, masks = neighbour_masks(g)
    n = len(order)
    memo: dict[int, int] = {}

    def best(free: int) -> int:
        if free == 0:
            return 0
        if free in memo:
            return memo[free]
        low = free & -free
        v = low.bit_length() - 1
        rest = free ^ low
        result = best(rest)
        nbrs = masks[v] & rest
        while nbrs:
            w = nbrs & -nbrs
            result = max(result, 1 + best(rest ^ w))
            nbrs ^= w
        memo[free] = result
        return result

    return best((1 << n) - 1)


def tutte_witness(g: AnyGraph) -> tuple[str, ...] | None:
    """A set X with odd(g - X) > |X|, or None if g has a perfect matching.

    Uses the Gallai-Edmonds decomposition: D holds the vertices missed by
    some maximum matching, and X = N(D) \\ D. The result is re-checked.
    """
    nu = len(maximum_matching(g))
    if 2 * nu == len(g.vertices):
        return None
    vertices = set(g.vertices)
    edges = [(u, v) for u, v in (e[:2] for e in g.edges)]
    deficient = set()
    for v in sorted(vertices):
        rest = Graph(tuple(x for x in g.vertices if x != v),
                     tuple(e for e in edges if v not in e))
        if len(maximum_matching(rest)) == nu:
            deficient.add(v)
    X = sorted({w for v in deficient for w in g.adj[v]} - deficient)
    if odd_components(g, X) > len(X):
        return tuple(X)
    return tutte_witness_exhaustive(g)


def tutte_witness_exhaustive(g: AnyGraph, cap: int = 22) -> tuple[str, ...] | None:
    """Smallest violating set by subset enumeration (ascending size)."""
    if len(g.vertices) > cap:
        raise TooLarge(f"{len(g.vertices)} vertices exceeds exhaustive cap {cap}")
    order, _, masks = neighbour_masks(g)
    n = len(order)
    full = (1 << n) - 1
    for size in range(0, n // 2 + 1):
        for X in combinations(range(n), size):
            removed = 0
            for i in X:
                removed |= 1 << i
            if odd_count_mask(masks, full & ~removed) > size:
                return tuple(order[i] for i in X)
    return None


def augmenting_path_exists(g: AnyGraph, M) -> bool:
    """Independent check: is there an M-augmenting path? Exponential, small graphs only."""
    mate: dict[str, str] = {}
    for u, v in M:
        mate[u] = v
        mate[v] = u
    exposed = [v for v in sorted(g.vertices) if v not in mate]

    def extend(path: list[str], visited: set[str]) -> bool:
        last = path[-1]
        for w in g.adj[last]:
            if w in visited or mate.get(last) == w:
                continue
            if w not in mate:
                return True
            x = mate[w]
            if x in visited:
                continue
            visited.update((w, x))
            if extend(path + [w, x], visited):
                return True
            visited.difference_update((w, x))
        return False

    return any(extend([s], {s}) for s in exposed)

