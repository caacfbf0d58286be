"""Largest subgraphs that split into k disjoint matchings.

For bipartite hosts the k = 2 case reduces to a degree-constrained subgraph:
cap every vertex at two incident chosen edges and maximize the edge count via
max flow.  In a bipartite graph any subgraph with maximum degree two is a
disjoint union of paths and even cycles, so it always splits into two
matchings.  A branch-and-bound color assigner serves as the independent
exhaustive oracle for small graphs and arbitrary k.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Bipartition, Graph, bipartition, is_valid_bipartition
from .matching import CapExceededError, nu


@dataclass(frozen=True)
class ColorableResult:
    k: int
    size: int
    classes: tuple[frozenset[tuple[int, int]], ...]


class _Dinic:
    def __init__(self, n: int):
        self.adj: list[list[list[int]]] = [[] for _ in range(n)]

    def add(self, u: int, v: int, cap: int) -> tuple[int, int]:
        self.adj[u].append([v, cap, len(self.adj[v])])
        self.adj[v].append([u, 0, len(self.adj[u]) - 1])
        return (u, len(self.adj[u]) - 1)

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * len(self.adj)
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for v, cap, _ in self.adj[u]:
                    if cap > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return flow
            it = [0] * len(self.adj)

            def dfs(u: int, pushed: int) -> int:
                if u == t:
                    return pushed
                while it[u] < len(self.adj[u]):
                    v, cap, rev = self.adj[u][it[u]]
                    if cap > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, cap))
                        if got:
                            self.adj[u][it[u]][1] -= got
                            self.adj[v][rev][1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, 1 << 30)
                if not pushed:
                    break
                flow += pushed


def _two_color(g: Graph, chosen: set[tuple[int, int]]) -> tuple[frozenset, frozenset]:
    """Split a max-degree-two edge set into two matchings.

    Each path is walked from its lowest-indexed endpoint and each cycle from
    its lowest-indexed vertex, alternating classes along the walk.
    """
    nbr: dict[int, list[int]] = {}
    for u, v in chosen:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    for lst in nbr.values():
        lst.sort()
    color: dict[tuple[int, int], int] = {}
    visited: set[tuple[int, int]] = set()
    ends = sorted(v for v, lst in nbr.items() if len(lst) == 1)
    starts = ends + sorted(nbr)
    for start in starts:
        cur = start
        c = 0
        while True:
            nxt = None
            for w in nbr.get(cur, []):
                e = (cur, w) if cur < w else (w, cur)
                if e not in visited:
                    nxt = w
                    break
            if nxt is None:
                break
            e = (cur, nxt) if cur < nxt else (nxt, cur)
            visited.add(e)
            color[e] = c
            c = 1 - c
            cur = nxt
    class0 = frozenset(e for e, c in color.items() if c == 0)
    class1 = frozenset(e for e, c in color.items() if c == 1)
    return class0, class1


def nu2_bipartite(g: Graph, b: Bipartition | None = None) -> ColorableResult:
    """Largest union of two disjoint matchings in a bipartite graph.

    Flow network: source -> side0 vertices and side1 vertices -> sink with
    capacity two, one unit arc per edge.  The integral max flow selects a
    subgraph of maximum degree two whose edge count is the answer; the
    witness splits it into two matchings.
    """
    if b is None:
        b = bipartition(g)
        if b is None:
            raise ValueError("graph is not bipartite")
    elif not is_valid_bipartition(g, b):
        raise ValueError("invalid bipartition for this graph")
    n = g.vertex_count
    net = _Dinic(n + 2)
    source, sink = 0, n + 1
    for u in sorted(b.side0):
        net.add(source, u, 2)
    for v in sorted(b.side1):
        net.add(v, sink, 2)
    edge_arcs: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for u, v in g.sorted_edges():
        a, c = (u, v) if u in b.side0 else (v, u)
        edge_arcs.append(((u, v), net.add(a, c, 1)))
    size = net.max_flow(source, sink)
    chosen = {e for e, (node, idx) in edge_arcs if net.adj[node][idx][1] == 0}
    assert len(chosen) == size
    class0, class1 = _two_color(g, chosen)
    assert len(class0) + len(class1) == size
    return ColorableResult(2, size, (class0, class1))


def nu_k_bruteforce(g: Graph, k: int, cap: int = 20) -> int:
    """Exact max size of a k-edge-colorable subgraph by exhaustive search.

    Tries every assignment of colors (or none) to edges, pruning on the
    remaining-edge bound and breaking color symmetry.  Refuses hosts above
    the edge cap.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.edge_count > cap:
        raise CapExceededError(f"graph has {g.edge_count} edges, cap is {cap}")
    if k == 0:
        return 0
    edges = g.sorted_edges()
    total = len(edges)
    mask = [0] * (g.vertex_count + 1)
    best = 0

    def rec(idx: int, size: int, used_colors: int):
        nonlocal best
        if size > best:
            best = size
        if idx == total or size + (total - idx) <= best:
            return
        u, v = edges[idx]
        for c in range(min(k, used_colors + 1)):
            bit = 1 << c
            if not (mask[u] & bit) and not (mask[v] & bit):
                mask[u] |= bit
                mask[v] |= bit
                rec(idx + 1, size + 1, max(used_colors, c + 1))
                mask[u] ^= bit
                mask[v] ^= bit
        rec(idx + 1, size, used_colors)

    rec(0, 0, 0)
    return best


def upper_bound_L(g: Graph, b: Bipartition | None = None) -> int:
    """nu_2 - nu: after deleting any maximum matching, at most this many
    disjoint edges remain, so it bounds the residual spectrum from above."""
    return nu2_bipartite(g, b).size - nu(g)
