"""Exact graph representation and the metric/neighborhood queries.

Graphs are immutable labeled simple graphs.  Every operation is a pure
function; set-valued results come back as tuples in ascending label order
so serialization and tests are deterministic.  Distances are exact BFS;
``diameter`` of a disconnected graph is ``math.inf`` (callers must branch
on it explicitly).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .labels import label_key, sort_labels, validate_label

VertexId = str

INFINITY = math.inf


class Graph:
    """Immutable simple graph with string-labeled vertices.

    Adjacency is stored symmetrically; self-loops and duplicate edges are
    rejected at construction.  Equality compares the labeled vertex and
    edge sets (the optional ``name`` is display metadata only).
    """

    __slots__ = ("_vertices", "_adj", "_index", "name")

    def __init__(
        self,
        vertices: Iterable[VertexId],
        edges: Iterable[tuple[VertexId, VertexId]] = (),
        name: str | None = None,
    ):
        vs: list[str] = []
        seen: set[str] = set()
        for v in vertices:
            validate_label(v)
            if v in seen:
                raise ValueError(f"duplicate vertex {v!r}")
            seen.add(v)
            vs.append(v)
        self._vertices: tuple[str, ...] = sort_labels(vs)
        self._index = {v: i for i, v in enumerate(self._vertices)}
        adj: dict[str, set[str]] = {v: set() for v in self._vertices}
        for u, v in edges:
            if u not in adj or v not in adj:
                missing = u if u not in adj else v
                raise ValueError(f"edge endpoint {missing!r} is not a vertex")
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge {{{u!r}, {v!r}}}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(nbrs) for v, nbrs in adj.items()}
        self.name = name

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    def neighbors(self, v: VertexId) -> frozenset[str]:
        self._require(v)
        return self._adj[v]

    def edges(self) -> tuple[tuple[str, str], ...]:
        """All edges as label-ordered pairs, in ascending order."""
        out = []
        for u in self._vertices:
            for v in self._adj[u]:
                if label_key(u) < label_key(v):
                    out.append((u, v))
        out.sort(key=lambda e: (label_key(e[0]), label_key(e[1])))
        return tuple(out)

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return u in self._adj and v in self._adj[u]

    def degree(self, v: VertexId) -> int:
        self._require(v)
        return len(self._adj[v])

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(sorted((v, tuple(sort_labels(n))) for v, n in self._adj.items()))))

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} |V|={len(self._vertices)} |E|={sum(len(a) for a in self._adj.values()) // 2}>"

    def _require(self, v: str) -> None:
        if v not in self._adj:
            raise ValueError(f"vertex not in graph: {v!r}")


@dataclass(frozen=True)
class Path:
    """A simple path: consecutive vertices adjacent, all vertices distinct."""

    vertices: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def check(self, g: Graph) -> None:
        """Raise ValueError unless this is a valid simple path in ``g``."""
        if not self.vertices:
            raise ValueError("empty path")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("repeated vertex in path")
        for u, v in zip(self.vertices, self.vertices[1:]):
            if not g.has_edge(u, v):
                raise ValueError(f"non-adjacent consecutive vertices {u!r}, {v!r}")

    def is_induced(self, g: Graph) -> bool:
        """True when no edge joins non-consecutive path vertices."""
        for i, u in enumerate(self.vertices):
            for v in self.vertices[i + 2 :]:
                if g.has_edge(u, v):
                    return False
        return True


# --- neighborhoods ---------------------------------------------------------

def closed_neighborhood(g: Graph, v: VertexId) -> tuple[str, ...]:
    """N[v]: the vertex together with its neighbors, label-ordered."""
    return sort_labels(g.neighbors(v) | {v})


def closed_neighborhood_set(g: Graph, u: Iterable[VertexId]) -> tuple[str, ...]:
    """N[U]: union of closed neighborhoods over U (empty U gives empty)."""
    out: set[str] = set()
    for v in u:
        out.update(g.neighbors(v))
        out.add(v)
    return sort_labels(out)


# --- distances -------------------------------------------------------------

def _bfs_levels(g: Graph, source: str) -> dict[str, int]:
    dist = {source: 0}
    q = deque([source])
    while q:
        u = q.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def distance(g: Graph, u: VertexId, v: VertexId) -> int | float:
    """Shortest-path length between u and v; INFINITY when disconnected."""
    g._require(u)
    g._require(v)
    if u == v:
        return 0
    return _bfs_levels(g, u).get(v, INFINITY)


def diameter(g: Graph) -> int | float:
    """Maximum pairwise distance; INFINITY iff disconnected; error if empty."""
    if len(g) == 0:
        raise ValueError("diameter of empty graph")
    best = 0
    n = len(g)
    for s in g.vertices:
        levels = _bfs_levels(g, s)
        if len(levels) < n:
            return INFINITY
        ecc = max(levels.values())
        if ecc > best:
            best = ecc
    return best


def set_distance(g: Graph, a: Iterable[VertexId], b: Iterable[VertexId]) -> int | float:
    """min dist(u, v) over u in a, v in b; 0 when either set is empty."""
    aset = set(a)
    bset = set(b)
    for v in aset | bset:
        g._require(v)
    if not aset or not bset:
        return 0
    if aset & bset:
        return 0
    # multi-source BFS from a until b is hit
    dist = {v: 0 for v in aset}
    q = deque(sorted(aset, key=label_key))
    while q:
        u = q.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                if w in bset:
                    return dist[u] + 1
                dist[w] = dist[u] + 1
                q.append(w)
    return INFINITY


def connected_components(g: Graph) -> list[tuple[str, ...]]:
    """Partition into maximal connected vertex sets, ordered by smallest label."""
    seen: set[str] = set()
    comps: list[tuple[str, ...]] = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = set(_bfs_levels(g, v))
        seen |= comp
        comps.append(sort_labels(comp))
    comps.sort(key=lambda c: label_key(c[0]))
    return comps


def induced_subgraph(g: Graph, u: Iterable[VertexId]) -> Graph:
    """The subgraph on ``u`` keeping exactly the internal edges."""
    uset = set(u)
    for v in uset:
        g._require(v)
    edges = [(a, b) for a, b in g.edges() if a in uset and b in uset]
    return Graph(sort_labels(uset), edges)


def geodesic(g: Graph, u: VertexId, v: VertexId) -> Path:
    """A deterministic shortest u-v path (BFS expanding in label order).

    Any shortest path is chord-free, so the result is an induced path.
    Raises ValueError when u and v lie in different components.
    """
    g._require(u)
    g._require(v)
    if u == v:
        return Path((u,))
    parent: dict[str, str] = {u: u}
    q = deque([u])
    while q:
        w = q.popleft()
        for nxt in sort_labels(g.neighbors(w)):
            if nxt not in parent:
                parent[nxt] = w
                if nxt == v:
                    q.clear()
                    break
                q.append(nxt)
    if v not in parent:
        raise ValueError(f"no path between {u!r} and {v!r}")
    back = [v]
    while back[-1] != u:
        back.append(parent[back[-1]])
    return Path(tuple(reversed(back)))


def disjoint_neighborhood_vertices(g: Graph) -> list[str]:
    """floor(diam/3)+1 vertices with pairwise disjoint closed neighborhoods.

    Taken at positions 1, 4, 7, ... along a deterministic diameter-realizing
    geodesic: vertices three apart on a shortest path are at distance >= 3,
    so their closed neighborhoods cannot meet.
    """
    if len(g) == 0:
        raise ValueError("empty graph")
    d = diameter(g)
    if d == INFINITY:
        raise ValueError("graph is disconnected")
    endpoints: tuple[str, str] | None = None
    for s in g.vertices:
        levels = _bfs_levels(g, s)
        for t in g.vertices:
            if levels[t] == d:
                endpoints = (s, t)
                break
        if endpoints:
            break
    assert endpoints is not None
    path = geodesic(g, *endpoints)
    a = int(d) // 3
    return [path.vertices[3 * i] for i in range(a + 1)]


def is_bridge(g: Graph, e: tuple[VertexId, VertexId]) -> bool:
    """True iff removing edge ``e`` disconnects its component."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"not an edge: {{{u!r}, {v!r}}}")
    # BFS from u avoiding the edge {u, v}: bridge iff v becomes unreachable
    seen = {u}
    q = deque([u])
    while q:
        w = q.popleft()
        for nxt in g.neighbors(w):
            if w == u and nxt == v:
                continue
            if nxt not in seen:
                if nxt == v:
                    return False
                seen.add(nxt)
                q.append(nxt)
    return True


def contains_odd_cycle(g: Graph) -> bool:
    """True iff the graph is not bipartite (two-coloring BFS per component)."""
    color: dict[str, int] = {}
    for s in g.vertices:
        if s in color:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    q.append(w)
                elif color[w] == color[u]:
                    return True
    return False


def disjoint_union(a: Graph, b: Graph, prefixes: tuple[str, str] = ("1", "2")) -> Graph:
    """Disjoint union with vertices relabeled ``prefix.label``."""
    pa, pb = prefixes
    if pa == pb:
        raise ValueError("prefixes must differ")
    ra = {v: f"{pa}.{v}" for v in a.vertices}
    rb = {v: f"{pb}.{v}" for v in b.vertices}
    vertices = list(ra.values()) + list(rb.values())
    edges = [(ra[u], ra[v]) for u, v in a.edges()] + [(rb[u], rb[v]) for u, v in b.edges()]
    return Graph(vertices, edges)


# --- edge-list file format --------------------------------------------------
#
# UTF-8 text; a line is blank, a comment starting with '#', a single label
# (isolated vertex), or "LABEL LABEL" separated by exactly one space.
# Duplicate edges are rejected.

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format into a Graph."""
    vertices: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []
    edge_set: set[frozenset[str]] = set()

    def add_vertex(v: str) -> None:
        validate_label(v)
        if v not in seen:
            seen.add(v)
            vertices.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        if line.startswith("#"):
            continue
        tokens = line.split(" ")
        if any(not t for t in tokens) or len(tokens) > 2:
            raise ValueError(f"line {lineno}: malformed line {raw!r}")
        if len(tokens) == 1:
            add_vertex(tokens[0])
            continue
        u, v = tokens
        add_vertex(u)
        add_vertex(v)
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at {u!r}")
        key = frozenset((u, v))
        if key in edge_set:
            raise ValueError(f"line {lineno}: duplicate edge {{{u!r}, {v!r}}}")
        edge_set.add(key)
        edges.append((u, v))
    return Graph(vertices, edges)


def format_edge_list(g: Graph, header: str | None = None) -> str:
    """Serialize a Graph in the edge-list format (deterministic order)."""
    lines: list[str] = []
    if header:
        for h in header.splitlines():
            lines.append(f"# {h}" if h else "#")
    covered: set[str] = set()
    for u, v in g.edges():
        lines.append(f"{u} {v}")
        covered.add(u)
        covered.add(v)
    for v in g.vertices:
        if v not in covered:
            lines.append(v)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    """Load a Graph from an edge-list file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path, header: str | None = None) -> None:
    """Write a Graph to an edge-list file."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g, header=header))


def iter_vertex_pairs(g: Graph) -> Iterator[tuple[str, str]]:
    """All unordered vertex pairs in ascending label order."""
    vs = g.vertices
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            yield u, v
