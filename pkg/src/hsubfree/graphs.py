"""Immutable simple undirected graphs with dense 0-based vertex indices.

Every editing operation (subdivision, contraction, deletion) returns a new
graph; instances are hashable values and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional


class GraphError(ValueError):
    """Raised for malformed graph input or invalid graph operations."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Invariants: no self-loops, no parallel edges, symmetric adjacency,
    every neighbour index < n.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        return Graph(n, tuple(frozenset(s) for s in sets))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph.from_edges(n, [])

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def cycle(n: int) -> "Graph":
        if n < 3:
            raise GraphError("cycles need at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def complete(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @staticmethod
    def complete_bipartite(a: int, b: int) -> "Graph":
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, self.edges() + [(u, v)])

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) not present")
        return Graph.from_edges(self.n, [e for e in self.edges() if e != (min(u, v), max(u, v))])

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


VertexSet = frozenset


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format: header ``n m`` then m lines ``u v``.

    LF or CRLF both accepted.  Rejects self-loops, duplicate edges and
    out-of-range endpoints, each with the offending line number.
    """
    lines = text.replace("\r\n", "\n").split("\n")
    # trailing blank lines are tolerated
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise GraphError("line 1: missing header")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError("line 1: header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError("line 1: header must contain two integers") from None
    if n < 0 or m < 0:
        raise GraphError("line 1: negative counts in header")
    if len(lines) - 1 != m:
        raise GraphError(f"header announces {m} edges but {len(lines) - 1} edge lines follow")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for idx, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {idx}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {idx}: non-integer endpoint") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {idx}: vertex out of range")
        if u == v:
            raise GraphError(f"line {idx}: self-loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {idx}: duplicate edge")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    """Canonical text form: header then edges sorted lexicographically."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def k_subdivide(g: Graph, k: int) -> Graph:
    """Replace every edge by a path of k+1 edges through k fresh vertices.

    Original vertex indices are preserved; fresh vertices are appended in
    the lexicographic order of the edges they subdivide.
    """
    if k < 0:
        raise GraphError("subdivision count must be >= 0")
    if k == 0:
        return g
    edges = g.edges()
    n_new = g.n + k * len(edges)
    out: list[tuple[int, int]] = []
    nxt = g.n
    for u, v in edges:
        chain = [u] + list(range(nxt, nxt + k)) + [v]
        nxt += k
        out.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
    return Graph.from_edges(n_new, out)


def delete_vertices(g: Graph, to_delete: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Delete a vertex set, re-indexing densely. Returns (graph, old->new map)."""
    dead = set(to_delete)
    for v in dead:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range")
    remap: dict[int, int] = {}
    for v in range(g.n):
        if v not in dead:
            remap[v] = len(remap)
    edges = [(remap[u], remap[v]) for u, v in g.edges() if u not in dead and v not in dead]
    return Graph.from_edges(len(remap), edges), remap


def contract_set(g: Graph, s: Iterable[int]) -> Graph:
    return contract_set_with_map(g, s)[0]


def contract_set_with_map(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Replace the set s by one fresh vertex adjacent to every outside
    neighbour of any member; loops dropped and parallel edges merged.

    The fresh vertex takes the last index; survivors are re-indexed densely
    in order.  Returns (graph, old->new map); all of s maps to the fresh
    vertex.
    """
    members = set(s)
    if not members:
        raise GraphError("cannot contract the empty set")
    for v in members:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range")
    remap: dict[int, int] = {}
    for v in range(g.n):
        if v not in members:
            remap[v] = len(remap)
    fresh = len(remap)
    for v in members:
        remap[v] = fresh
    edges = {(min(remap[u], remap[v]), max(remap[u], remap[v])) for u, v in g.edges() if remap[u] != remap[v]}
    return Graph.from_edges(fresh + 1, sorted(edges)), remap


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps: list[list[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the kept vertices, with old->new map."""
    kept = sorted(set(keep))
    remap = {v: i for i, v in enumerate(kept)}
    edges = [(remap[u], remap[v]) for u, v in g.edges() if u in remap and v in remap]
    return Graph.from_edges(len(kept), edges), remap


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if dist[w] is None:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def bipartition(g: Graph) -> Optional[list[int]]:
    """A 2-colouring 0/1 per vertex, or None when not bipartite."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle; None for forests.

    BFS from every vertex; a non-tree edge seen at depth d closes a cycle of
    length at most 2d+1, and scanning all roots makes the minimum exact.
    """
    best: Optional[int] = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if dist[w] == -1:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u] and dist[w] >= dist[u]:
                        cyc = dist[u] + dist[w] + 1
                        if best is None or cyc < best:
                            best = cyc
            if best is not None and frontier and 2 * dist[frontier[0]] >= best:
                break
            frontier = nxt
    return best


def articulation_vertices(g: Graph) -> set[int]:
    """Cut vertices, found by the classical DFS low-link computation."""
    visited = [False] * g.n
    depth = [0] * g.n
    low = [0] * g.n
    cuts: set[int] = set()

    for root in range(g.n):
        if visited[root]:
            continue
        # iterative DFS to avoid recursion limits on thread-like graphs
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.adj[root]))]
        visited[root] = True
        depth[root] = low[root] = 0
        root_children = 0
        while stack:
            u, par, it = stack[-1]
            advanced = False
            for w in it:
                if w == par:
                    continue
                if visited[w]:
                    low[u] = min(low[u], depth[w])
                else:
                    visited[w] = True
                    depth[w] = low[w] = depth[u] + 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if p != root and low[u] >= depth[p]:
                        cuts.add(p)
        if root_children >= 2:
            cuts.add(root)
    return cuts


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    return not articulation_vertices(g)


@dataclass(frozen=True)
class StructuralSummary:
    is_connected: bool
    is_bipartite: bool
    is_subcubic: bool
    is_two_connected: bool
    branch_vertices: frozenset[int] = field(default_factory=frozenset)


def structural_queries(g: Graph) -> StructuralSummary:
    """Connectivity, bipartiteness, subcubicity, 2-connectivity and the
    3+-degree (branch) vertices, all computed exactly."""
    return StructuralSummary(
        is_connected=is_connected(g),
        is_bipartite=is_bipartite(g),
        is_subcubic=all(len(s) <= 3 for s in g.adj),
        is_two_connected=is_two_connected(g),
        branch_vertices=frozenset(v for v in range(g.n) if len(g.adj[v]) >= 3),
    )
