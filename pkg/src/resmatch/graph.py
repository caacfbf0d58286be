"""Simple undirected graphs on dense 1-indexed vertex sets.

Vertices are the integers 1..vertex_count.  Edges are unordered pairs stored
as (u, v) tuples with u < v.  Optional integer lattice coordinates can be
attached per vertex; they are metadata used for deterministic layouts and for
parity-based bipartitions, never for adjacency.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field


class DuplicateEdgeWarning(UserWarning):
    pass


class GraphFormatError(ValueError):
    """Raised when a graph file does not follow the expected format."""


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]
    coords: dict[int, tuple[int, int]] | None = field(default=None)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, list[int]]:
        """Adjacency lists with neighbors in increasing order."""
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.vertex_count + 1)}
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


@dataclass(frozen=True)
class Bipartition:
    side0: frozenset[int]
    side1: frozenset[int]


def build_graph(
    vertex_count: int,
    edges: list[tuple[int, int]],
    coords: dict[int, tuple[int, int]] | None = None,
) -> Graph:
    """Validate and build a Graph.

    Duplicate edge pairs are collapsed; a DuplicateEdgeWarning reporting the
    collapse count is emitted when any are found.  Self-loops and endpoints
    outside 1..vertex_count are construction errors.
    """
    if vertex_count < 0:
        raise ValueError(f"vertex_count must be non-negative, got {vertex_count}")
    seen: set[tuple[int, int]] = set()
    dupes = 0
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u} is not allowed")
        if not (1 <= u <= vertex_count) or not (1 <= v <= vertex_count):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{vertex_count}")
        e = normalize_edge(u, v)
        if e in seen:
            dupes += 1
        else:
            seen.add(e)
    if dupes:
        warnings.warn(
            f"collapsed {dupes} duplicate edge(s)", DuplicateEdgeWarning, stacklevel=2
        )
    if coords is not None:
        for v in coords:
            if not (1 <= v <= vertex_count):
                raise ValueError(f"coordinate record for unknown vertex {v}")
        if len(coords) != vertex_count:
            raise ValueError("coords must cover every vertex when present")
        if len(set(coords.values())) != vertex_count:
            raise ValueError("coords must be injective")
        coords = dict(sorted(coords.items()))
    return Graph(vertex_count, frozenset(seen), coords)


def bipartition(g: Graph) -> Bipartition | None:
    """Two-color g, or return None when some component has an odd cycle.

    When lattice coordinates are present and the parity classes of x+y form a
    valid two-coloring, exactly those classes are returned (even parity on
    side0).  Otherwise a BFS coloring is used: component roots are visited in
    increasing vertex order and each root is placed on side0.
    """
    if g.coords is not None:
        even = frozenset(v for v, (x, y) in g.coords.items() if (x + y) % 2 == 0)
        odd = frozenset(range(1, g.vertex_count + 1)) - even
        if all((u in even) != (v in even) for u, v in g.edges):
            return Bipartition(even, odd)
    color: dict[int, int] = {}
    adj = g.adjacency()
    for root in range(1, g.vertex_count + 1):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = frozenset(v for v, c in color.items() if c == 0)
    side1 = frozenset(v for v, c in color.items() if c == 1)
    return Bipartition(side0, side1)


def is_valid_bipartition(g: Graph, b: Bipartition) -> bool:
    verts = frozenset(range(1, g.vertex_count + 1))
    if b.side0 | b.side1 != verts or b.side0 & b.side1:
        return False
    return all((u in b.side0) != (v in b.side0) for u, v in g.edges)


def is_connected(g: Graph) -> bool:
    """True when g has at most one component (vertexless graphs count as connected)."""
    if g.vertex_count == 0:
        return True
    adj = g.adjacency()
    seen = {1}
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.vertex_count


def degree_profile(g: Graph) -> dict:
    """Min/max degree and a degree histogram (degree -> vertex count)."""
    degs = [0] * (g.vertex_count + 1)
    for u, v in g.edges:
        degs[u] += 1
        degs[v] += 1
    values = degs[1:]
    hist: dict[int, int] = {}
    for d in values:
        hist[d] = hist.get(d, 0) + 1
    return {
        "min_degree": min(values) if values else 0,
        "max_degree": max(values) if values else 0,
        "histogram": dict(sorted(hist.items())),
    }


def delete_edges(g: Graph, removed) -> Graph:
    """Remove the given edges, keeping all vertices.

    Asking to remove an edge that is not present is an error naming the edge.
    """
    drop = set()
    for u, v in removed:
        e = normalize_edge(u, v)
        if e not in g.edges:
            raise ValueError(f"edge ({e[0]}, {e[1]}) is not in the graph")
        drop.add(e)
    return Graph(g.vertex_count, g.edges - drop, g.coords)


def parse_graph_file(text: str) -> Graph:
    """Parse the plain-text graph format.

    Lines: '#' comments, one 'p mg <vertices> <edges>' header, optional
    'v <id> <x> <y>' coordinate records, and 'e <u> <v>' edge records.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    coords: dict[int, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "mg":
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}") from None
            if header[0] < 0 or header[1] < 0:
                raise GraphFormatError(f"line {lineno}: negative count in header")
        elif parts[0] == "v":
            if header is None:
                raise GraphFormatError(f"line {lineno}: record before header")
            if len(parts) != 4:
                raise GraphFormatError(f"line {lineno}: malformed vertex record {line!r}")
            try:
                vid, x, y = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed vertex record {line!r}") from None
            if not (1 <= vid <= header[0]):
                raise GraphFormatError(f"line {lineno}: vertex id {vid} out of range")
            if vid in coords:
                raise GraphFormatError(f"line {lineno}: duplicate coordinates for vertex {vid}")
            coords[vid] = (x, y)
        elif parts[0] == "e":
            if header is None:
                raise GraphFormatError(f"line {lineno}: record before header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge record {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed edge record {line!r}") from None
            if not (1 <= u <= header[0]) or not (1 <= v <= header[0]):
                raise GraphFormatError(f"line {lineno}: edge endpoint out of range in {line!r}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
            edges.append((u, v))
        else:
            raise GraphFormatError(f"line {lineno}: unknown record tag {parts[0]!r}")
    if header is None:
        raise GraphFormatError("missing 'p mg' header")
    if len(edges) != header[1]:
        # count duplicates once: the header declares record count, so compare raw
        raise GraphFormatError(
            f"header declares {header[1]} edges but {len(edges)} edge records found"
        )
    return build_graph(header[0], edges, coords or None)


def emit_graph_file(g: Graph) -> str:
    """Serialize g in canonical form: sorted records, no comments."""
    lines = [f"p mg {g.vertex_count} {g.edge_count}"]
    if g.coords is not None:
        for vid in sorted(g.coords):
            x, y = g.coords[vid]
            lines.append(f"v {vid} {x} {y}")
    for u, v in g.sorted_edges():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"
