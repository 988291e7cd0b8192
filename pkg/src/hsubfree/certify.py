"""Independent certificate verifiers.

These are plain scans with no search: the trust anchor every oracle,
solver and generator in the package is tested against.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .graphs import Graph, GraphError, induced_subgraph

C5_EDGES = frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 0), (2, 1), (3, 2), (4, 3), (0, 4)})


def _require_total(g: Graph, colouring: Sequence[int]) -> None:
    if len(colouring) != g.n:
        raise GraphError("colouring must assign a value to every vertex")


def verify_c5_hom(g: Graph, colouring: Sequence[int]) -> bool:
    """True iff the map sends every edge of g to an edge of C5."""
    _require_total(g, colouring)
    if any(not (0 <= c <= 4) for c in colouring):
        return False
    return all((colouring[u], colouring[v]) in C5_EDGES for u, v in g.edges())


def verify_star_colouring(g: Graph, colouring: Sequence[int], colours: int) -> bool:
    """Proper colouring with no bichromatic path on four vertices.

    A P4 a-u-v-b is bichromatic under a proper colouring exactly when
    c(a) = c(v) and c(b) = c(u), so one scan over middle edges suffices.
    """
    _require_total(g, colouring)
    if any(not (0 <= c < colours) for c in colouring):
        return False
    for u, v in g.edges():
        if colouring[u] == colouring[v]:
            return False
    for u, v in g.edges():
        a_hits = [a for a in g.adj[u] if a != v and colouring[a] == colouring[v]]
        if not a_hits:
            continue
        for b in g.adj[v]:
            if b != u and colouring[b] == colouring[u]:
                if any(a != b for a in a_hits):
                    return False
    return True


def verify_hamilton(g: Graph, order: Sequence[int]) -> bool:
    """True iff ``order`` is a cyclic visit of all vertices along edges."""
    if g.n < 3 or len(order) != g.n or len(set(order)) != g.n:
        return False
    if any(not (0 <= v < g.n) for v in order):
        return False
    return all(g.has_edge(order[i], order[(i + 1) % g.n]) for i in range(g.n))


def verify_path_system(
    g: Graph,
    pairs: Sequence[tuple[int, int]],
    paths: Sequence[Sequence[int]],
    induced: bool,
) -> bool:
    """Vertex-disjoint s_i-t_i paths; with ``induced`` also no edge of g
    between vertices on distinct paths."""
    if len(paths) != len(pairs):
        return False
    seen: set[int] = set()
    for (s, t), path in zip(pairs, paths):
        if len(path) < 1 or path[0] != s or path[-1] != t:
            return False
        if len(set(path)) != len(path):
            return False
        if any(not g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1)):
            return False
        if seen & set(path):
            return False
        seen |= set(path)
    if induced:
        for i in range(len(paths)):
            vs_i = set(paths[i])
            for j in range(i + 1, len(paths)):
                for v in paths[j]:
                    if g.adj[v] & vs_i:
                        return False
    return True


def verify_hole(g: Graph, x: int, y: int, hole: Iterable[int]) -> bool:
    """True iff the vertex set induces a chordless cycle of length >= 4
    containing both x and y."""
    hs = set(hole)
    if len(hs) < 4 or x not in hs or y not in hs:
        return False
    if any(not (0 <= v < g.n) for v in hs):
        return False
    sub, _ = induced_subgraph(g, hs)
    if any(len(sub.adj[v]) != 2 for v in range(sub.n)):
        return False
    # 2-regular and connected means a single cycle
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in sub.adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == sub.n
