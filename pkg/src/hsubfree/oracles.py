"""Exhaustive reference solvers: ground truth for every decision problem.

All searches use a fixed order (vertices ascending, branch values
ascending), so identical inputs yield identical certificates.  Worst case
exponential; size bounds are arguments, and exceeding one raises
BoundExceeded rather than truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph, GraphError, is_connected

DEFAULT_BOUNDS = {
    "c5": 24,
    "hamilton": 20,
    "star3col": 30,
    "disjoint_paths": 24,
    "hole": 24,
    "k_colouring": 24,
}


class BoundExceeded(GraphError):
    """Instance larger than the configured oracle bound."""


def _check_bound(g: Graph, key: str, bound: Optional[int]) -> None:
    limit = DEFAULT_BOUNDS[key] if bound is None else bound
    if g.n > limit:
        raise BoundExceeded(f"{key} oracle bound {limit} exceeded (n={g.n})")


@dataclass(frozen=True)
class TerminalSpec:
    """Ordered disjoint terminal pairs (s_i, t_i)."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.pairs)

    def terminals(self) -> list[int]:
        return [v for pair in self.pairs for v in pair]

    def validate(self, g: Graph) -> None:
        ts = self.terminals()
        if len(set(ts)) != len(ts):
            raise GraphError("terminals must be pairwise distinct")
        for v in ts:
            if not (0 <= v < g.n):
                raise GraphError(f"terminal {v} out of range")


def oracle_c5_colouring(g: Graph, bound: Optional[int] = None) -> Optional[list[int]]:
    """A homomorphism to C5 as a vertex->{0..4} list, or None."""
    _check_bound(g, "c5", bound)
    colouring = [-1] * g.n

    def extend(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(5):
            ok = all(
                colouring[w] == -1 or (colouring[w] - c) % 5 in (1, 4)
                for w in g.adj[v]
            )
            if ok:
                colouring[v] = c
                if extend(v + 1):
                    return True
                colouring[v] = -1
        return False

    return colouring if extend(0) else None


def oracle_c5_critical(g: Graph, bound: Optional[int] = None) -> bool:
    """Not C5-colourable, but colourable after deleting any single edge.

    Only edges are deleted: together with the no-isolated-vertex condition
    this implies colourability of every proper subgraph.
    """
    _check_bound(g, "c5", bound)
    if any(len(s) == 0 for s in g.adj):
        return False
    if oracle_c5_colouring(g, bound=g.n) is not None:
        return False
    return all(
        oracle_c5_colouring(g.without_edge(u, v), bound=g.n) is not None
        for u, v in g.edges()
    )


def oracle_hamilton(g: Graph, bound: Optional[int] = None) -> Optional[list[int]]:
    """A Hamilton cycle as a vertex order, via subset DP rooted at vertex 0."""
    _check_bound(g, "hamilton", bound)
    n = g.n
    if n < 3 or not is_connected(g):
        return None
    adjmask = [sum(1 << w for w in g.adj[v]) for v in range(n)]
    full = (1 << n) - 1
    ends = [0] * (full + 1)
    ends[1] = 1  # the single-vertex path at the root
    for mask in range(1, full + 1, 2):
        e = ends[mask]
        while e:
            low = e & (-e)
            e ^= low
            v = low.bit_length() - 1
            avail = adjmask[v] & ~mask
            while avail:
                wl = avail & (-avail)
                avail ^= wl
                ends[mask | wl] |= wl
    closers = ends[full] & adjmask[0] & ~1
    if n >= 3 and not closers:
        return None
    # walk back from the smallest admissible final vertex
    cur = (closers & (-closers)).bit_length() - 1
    mask = full
    path = [cur]
    while mask != 1:
        prev_mask = mask ^ (1 << cur)
        cands = ends[prev_mask] & adjmask[cur] if prev_mask != 1 else (1 if (adjmask[cur] & 1) else 0)
        low = cands & (-cands)
        cur = low.bit_length() - 1
        mask = prev_mask
        path.append(cur)
    return path[::-1]


def oracle_k_colouring(g: Graph, k: int, bound: Optional[int] = None) -> Optional[list[int]]:
    """A proper k-colouring, or None."""
    _check_bound(g, "k_colouring", bound)
    if k < 1:
        return None if g.n > 0 else []
    colouring = [-1] * g.n

    def extend(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(k):
            if all(colouring[w] != c for w in g.adj[v]):
                colouring[v] = c
                if extend(v + 1):
                    return True
                colouring[v] = -1
        return False

    return colouring if extend(0) else None


def _star_conflict(g: Graph, colouring: list[int], v: int) -> bool:
    """Does vertex v sit on a fully-coloured bichromatic P4?"""
    cv = colouring[v]
    # v as an endpoint: v-a-b-c
    for a in g.adj[v]:
        ca = colouring[a]
        if ca == -1 or ca == cv:
            continue
        for b in g.adj[a]:
            if b == v:
                continue
            cb = colouring[b]
            if cb != cv:
                continue
            for c in g.adj[b]:
                if c == a or c == v:
                    continue
                if colouring[c] == ca:
                    return True
    # v interior: p-v-q-r with p,q neighbours of v
    for q in g.adj[v]:
        cq = colouring[q]
        if cq == -1 or cq == cv:
            continue
        for p in g.adj[v]:
            if p == q or colouring[p] != cq:
                continue
            for r in g.adj[q]:
                if r == v or r == p:
                    continue
                if colouring[r] == cv:
                    return True
    return False


def oracle_star3col(g: Graph, bound: Optional[int] = None) -> Optional[list[int]]:
    """A star 3-colouring (proper, no bichromatic P4), or None.

    Backtracking in index order with bichromatic-P4 checks after every
    assignment.
    """
    _check_bound(g, "star3col", bound)
    colouring = [-1] * g.n

    def extend(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(3):
            if any(colouring[w] == c for w in g.adj[v]):
                continue
            colouring[v] = c
            if not _star_conflict(g, colouring, v) and extend(v + 1):
                return True
            colouring[v] = -1
        return False

    return colouring if extend(0) else None


def oracle_disjoint_paths(
    g: Graph,
    spec: TerminalSpec,
    induced: bool,
    bound: Optional[int] = None,
) -> Optional[list[list[int]]]:
    """Vertex-disjoint s_i-t_i paths, mutually induced when requested.

    Routes the pairs in order; for the induced variant the closed
    neighbourhood of every fixed path is barred to later pairs, which is
    exactly pairwise non-adjacency.
    """
    _check_bound(g, "disjoint_paths", bound)
    spec.validate(g)
    terminal_set = set(spec.terminals())
    paths: list[list[int]] = []

    def route(i: int, blocked: frozenset[int]) -> bool:
        if i == spec.k:
            return True
        s, t = spec.pairs[i]
        if s in blocked or t in blocked:
            return False
        path = [s]
        on_path = {s}

        def walk(u: int) -> bool:
            if u == t:
                new_blocked = set(blocked) | on_path
                if induced:
                    for v in path:
                        new_blocked |= g.adj[v]
                # later terminals caught inside the barred zone fail fast
                paths.append(list(path))
                if route(i + 1, frozenset(new_blocked)):
                    return True
                paths.pop()
                return False
            for w in sorted(g.adj[u]):
                if w in on_path or w in blocked:
                    continue
                if w != t and w in terminal_set:
                    continue
                path.append(w)
                on_path.add(w)
                if walk(w):
                    return True
                path.pop()
                on_path.remove(w)
            return False

        return walk(s)

    return paths if route(0, frozenset()) else None


def oracle_hole_through(
    g: Graph, x: int, y: int, bound: Optional[int] = None
) -> Optional[frozenset[int]]:
    """An induced cycle of length >= 4 through x and y, or None."""
    _check_bound(g, "hole", bound)
    if not (0 <= x < g.n and 0 <= y < g.n) or x == y:
        raise GraphError("x and y must be distinct vertices")
    path = [x]
    on_path = {x}

    def extend(u: int) -> Optional[frozenset[int]]:
        for w in sorted(g.adj[u]):
            if w in on_path:
                continue
            # chordlessness: w may touch the path only at u (and x on closure)
            if any(w in g.adj[p] for p in path[1:-1]):
                continue
            adj_x = x in g.adj[w]
            if adj_x and len(path) >= 3 and (y in on_path or w == y):
                return frozenset(path) | {w}
            if adj_x and len(path) >= 2:
                continue  # any other contact with x would be a chord
            path.append(w)
            on_path.add(w)
            found = extend(w)
            if found is not None:
                return found
            path.pop()
            on_path.remove(w)
        return None

    return extend(x)
