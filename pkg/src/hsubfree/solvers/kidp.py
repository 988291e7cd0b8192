"""k-Induced Disjoint Paths on H(1)- and H(2)-subgraph-free graphs.

Both solvers branch on a bounded amount of local structure around the
terminals and hand the residual problem to an exhaustive k-Disjoint-Paths
subroutine (vertex-disjoint, not induced).  The H(2) solver additionally
runs the conflict-merge loop: whenever the subroutine's solution has an
edge between two paths, the conflict edge is contracted (Rule 1 / Rule 2),
shrinking the instance by one vertex while preserving the answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from ..graphs import Graph, contract_set_with_map, delete_vertices
from ..oracles import TerminalSpec, oracle_disjoint_paths
from ..patterns import PatternId, is_family_free
from . import CaseExhaustion, PromiseMode, PromiseViolation

_SHORT_PATH_LIMIT = 6  # paths this short are fixed explicitly (pair elimination)


def _kdp(g: Graph, pairs: Sequence[tuple[int, int]]) -> Optional[list[list[int]]]:
    if not pairs:
        return []
    return oracle_disjoint_paths(g, TerminalSpec(tuple(pairs)), induced=False, bound=g.n)


def _check_h_free(g: Graph, ell: int) -> None:
    free, wit = is_family_free(g, [PatternId("H", (ell,))])
    if not free:
        raise PromiseViolation(f"input contains H({ell}) as a subgraph", wit)


def _cross_terminal_edge(g: Graph, pairs: Sequence[tuple[int, int]]) -> bool:
    for (i, pi), (j, pj) in combinations(enumerate(pairs), 2):
        if any(g.has_edge(a, b) for a in pi for b in pj):
            return True
    return False


# --------------------------------------------------------------------------
# H(1)-subgraph-free case


def solve_kidp_h1free(g: Graph, spec: TerminalSpec, mode: PromiseMode = "verify") -> bool:
    """Guess each solution path's first and last interior vertex, delete the
    terminals' remaining neighbourhoods, and solve plain k-Disjoint Paths.
    On an H(1)-free graph any disjoint solution of the residual instance is
    automatically mutually induced."""
    spec.validate(g)
    if mode == "verify":
        _check_h_free(g, 1)
    if spec.k == 0:
        return True
    if _cross_terminal_edge(g, spec.pairs):
        return False
    terms = set(spec.terminals())

    options: list[list[tuple[str, Optional[tuple[int, ...]]]]] = []
    for s, t in spec.pairs:
        opts: list[tuple[str, Optional[tuple[int, ...]]]] = []
        if g.has_edge(s, t):
            opts.append(("edge", None))
        for w in sorted((g.adj[s] & g.adj[t]) - terms):
            opts.append(("mid", (w,)))
        for s2 in sorted(g.adj[s] - terms):
            for t2 in sorted(g.adj[t] - terms):
                if s2 != t2:
                    opts.append(("long", (s2, t2)))
        if not opts:
            return False
        options.append(opts)

    fixed_sets: list[set[int]] = [set() for _ in range(spec.k)]
    chosen: list[tuple[str, Optional[tuple[int, ...]]]] = [("", None)] * spec.k

    def assign(i: int, guessed: set[int]) -> bool:
        if i == spec.k:
            return _solve_residual(g, spec, chosen, guessed)
        s, t = spec.pairs[i]
        for kind, extra in options[i]:
            add = set(extra) if extra else set()
            if add & guessed:
                continue
            fixed = {s, t} | add
            ok = True
            for j in range(i):
                other = fixed_sets[j]
                if any(g.has_edge(a, b) for a in fixed for b in other):
                    ok = False
                    break
            if not ok:
                continue
            fixed_sets[i] = fixed
            chosen[i] = (kind, extra)
            if assign(i + 1, guessed | add):
                return True
        return False

    return assign(0, set())


def _solve_residual(
    g: Graph,
    spec: TerminalSpec,
    chosen: Sequence[tuple[str, Optional[tuple[int, ...]]]],
    guessed: set[int],
) -> bool:
    dead: set[int] = set()
    long_pairs: list[tuple[int, int]] = []
    for (s, t), (kind, extra) in zip(spec.pairs, chosen):
        if kind == "edge":
            dead |= g.adj[s] | g.adj[t] | {s, t}
        elif kind == "mid":
            (w,) = extra
            dead |= g.adj[s] | g.adj[t] | g.adj[w] | {s, t, w}
        else:
            dead |= {s, t} | ((g.adj[s] | g.adj[t]) - guessed)
            long_pairs.append(extra)
    if any(v in dead for pair in long_pairs for v in pair):
        return False
    reduced, remap = delete_vertices(g, dead)
    remapped = [(remap[a], remap[b]) for a, b in long_pairs]
    return _kdp(reduced, remapped) is not None


# --------------------------------------------------------------------------
# H(2)-subgraph-free case


@dataclass(frozen=True)
class ConflictSite:
    """An edge x1-x2 between two solution paths, with the path neighbours
    z1,x1,z3 and z2,x2,z4 consecutive on their respective paths."""

    x1: int
    x2: int
    z1: int
    z3: int
    z2: int
    z4: int

    def s_set(self) -> frozenset[int]:
        return frozenset((self.z1, self.x1, self.z3, self.z2, self.x2, self.z4))


def _validate_site(g: Graph, c: ConflictSite) -> None:
    s = c.s_set()
    if len(s) != 6:
        raise PromiseViolation("conflict site vertices are not distinct")
    if not g.has_edge(c.x1, c.x2):
        raise PromiseViolation("x1x2 is not an edge")
    if c.z1 not in g.adj[c.x1] or c.z3 not in g.adj[c.x1]:
        raise PromiseViolation("z1,z3 must neighbour x1")
    if c.z2 not in g.adj[c.x2] or c.z4 not in g.adj[c.x2]:
        raise PromiseViolation("z2,z4 must neighbour x2")
    for z in (c.z1, c.z2, c.z3, c.z4):
        if len(g.adj[z] - s) > 1:
            raise PromiseViolation(
                "site violates the one-outside-neighbour condition: H(2) present"
            )
    e12 = g.has_edge(c.z1, c.z2)
    e34 = g.has_edge(c.z3, c.z4)
    e14 = g.has_edge(c.z1, c.z4)
    e23 = g.has_edge(c.z2, c.z3)
    if (e12 and e34) or (e14 and e23):
        raise PromiseViolation("opposite z-edges both present: H(2) present")
    if e12 or e34 or e14 or e23:
        if (g.adj[c.x1] - s) or (g.adj[c.x2] - s):
            raise PromiseViolation("z-edge next to an outside neighbour of x1/x2: H(2) present")


def merge_rule_number(g: Graph, c: ConflictSite) -> int:
    """1 when no edge runs between the two paths' z-vertices, 2 otherwise."""
    zz = (
        g.has_edge(c.z1, c.z2)
        or g.has_edge(c.z3, c.z4)
        or g.has_edge(c.z1, c.z4)
        or g.has_edge(c.z2, c.z3)
    )
    return 2 if zz else 1


def apply_merge_rule(g: Graph, c: ConflictSite) -> Graph:
    """Merge x1 and x2 into a single vertex x.

    Rule 1 (no z-z edges): x inherits z1..z4 and the outside neighbours of
    x1, x2.  Rule 2 (a z-z edge survives the symmetry normalisation): x
    inherits z1..z4 and the z-edges are carried over unchanged.  Both are
    the simple-graph contraction of the edge x1x2; they differ only in
    which surrounding configurations are legal.
    """
    return _merge_with_map(g, c)[0]


def _merge_with_map(g: Graph, c: ConflictSite) -> tuple[Graph, dict[int, int]]:
    _validate_site(g, c)
    return contract_set_with_map(g, {c.x1, c.x2})


def _three_threads(g: Graph, start: int, banned: set[int]) -> list[tuple[int, int, int]]:
    out = []
    for a1 in sorted(g.adj[start]):
        if a1 in banned:
            continue
        for a2 in sorted(g.adj[a1]):
            if a2 in banned or a2 == start:
                continue
            for a3 in sorted(g.adj[a2]):
                if a3 in banned or a3 == start or a3 == a1:
                    continue
                out.append((a1, a2, a3))
    return out


def preprocess_kidp_h2(g: Graph, spec: TerminalSpec) -> list[tuple[Graph, TerminalSpec]]:
    """Branch instances for the main (all paths long) case.

    Each branch fixes a 3-thread from every terminal and deletes every
    other vertex within distance 3 of a terminal.  In a surviving branch
    every terminal has degree 1 and the two nearest thread vertices have
    degree 2, which forces any disjoint-paths solution to respect the
    terminals' neighbourhoods.
    """
    spec.validate(g)
    terms = spec.terminals()
    tset = set(terms)
    threads = {tau: _three_threads(g, tau, tset) for tau in terms}
    if any(not threads[tau] for tau in terms):
        return []

    from ..graphs import bfs_distances

    near: set[int] = set()
    for tau in terms:
        dist = bfs_distances(g, tau)
        near |= {v for v in range(g.n) if dist[v] is not None and dist[v] <= 3}

    units: list[set[int]] = [set() for _ in spec.pairs]
    picks: dict[int, tuple[int, int, int]] = {}
    out: list[tuple[Graph, TerminalSpec]] = []
    seen: set[frozenset[int]] = set()

    def units_conflict(i: int, j: int) -> bool:
        if units[i] & units[j]:
            return True
        return any(g.has_edge(a, b) for a in units[i] for b in units[j])

    def choose(idx: int) -> None:
        if idx == len(terms):
            kept = set().union(*units)
            key = frozenset(kept)
            if key in seen:
                return
            seen.add(key)
            dead = near - kept
            bg, remap = delete_vertices(g, dead)
            new_spec = TerminalSpec(tuple((remap[s], remap[t]) for s, t in spec.pairs))
            if _branch_shape_ok(bg, new_spec, remap, picks):
                out.append((bg, new_spec))
            return
        tau = terms[idx]
        pair_idx = idx // 2
        for thread in threads[tau]:
            old_unit = units[pair_idx]
            if idx % 2 == 1 and set(thread) & old_unit:
                continue  # same-pair threads must be vertex-disjoint
            units[pair_idx] = old_unit | {tau, *thread}
            picks[tau] = thread
            if all(
                not units_conflict(pair_idx, other)
                for other in range(len(units))
                if other != pair_idx and units[other]
            ):
                choose(idx + 1)
            units[pair_idx] = old_unit
            del picks[tau]
    choose(0)
    return out


def _branch_shape_ok(
    bg: Graph,
    new_spec: TerminalSpec,
    remap: dict[int, int],
    picks: dict[int, tuple[int, int, int]],
) -> bool:
    for old_tau, thread in picks.items():
        tau = remap.get(old_tau)
        a1, a2 = remap.get(thread[0]), remap.get(thread[1])
        if tau is None or a1 is None or a2 is None or remap.get(thread[2]) is None:
            return False
        if len(bg.adj[tau]) != 1 or len(bg.adj[a1]) != 2 or len(bg.adj[a2]) != 2:
            return False
    return True


def _find_conflict(g: Graph, paths: list[list[int]]) -> Optional[ConflictSite]:
    where = {}
    for i, path in enumerate(paths):
        for pos, v in enumerate(path):
            where[v] = (i, pos)
    for i, path in enumerate(paths):
        for pos, v in enumerate(path):
            for w in sorted(g.adj[v]):
                if w in where and where[w][0] != i:
                    j, wpos = where[w]
                    pj = paths[j]
                    if not (0 < pos < len(path) - 1) or not (0 < wpos < len(pj) - 1):
                        raise CaseExhaustion("conflict endpoint on a terminal thread")
                    return ConflictSite(
                        x1=v,
                        x2=w,
                        z1=path[pos - 1],
                        z3=path[pos + 1],
                        z2=pj[wpos - 1],
                        z4=pj[wpos + 1],
                    )
    return None


def _merge_loop(bg: Graph, bspec: TerminalSpec) -> bool:
    while True:
        sol = _kdp(bg, list(bspec.pairs))
        if sol is None:
            return False
        site = _find_conflict(bg, sol)
        if site is None:
            return True
        bg, remap = _merge_with_map(bg, site)
        bspec = TerminalSpec(tuple((remap[s], remap[t]) for s, t in bspec.pairs))


def _short_paths(g: Graph, s: int, t: int, banned: set[int], limit: int) -> Iterator[list[int]]:
    path = [s]
    on_path = {s}

    def walk(u: int) -> Iterator[list[int]]:
        if u == t:
            yield list(path)
            return
        if len(path) > limit:
            return
        for w in sorted(g.adj[u]):
            if w in on_path or (w in banned and w != t):
                continue
            path.append(w)
            on_path.add(w)
            yield from walk(w)
            path.pop()
            on_path.remove(w)

    yield from walk(s)


def solve_kidp_h2free(g: Graph, spec: TerminalSpec, mode: PromiseMode = "verify") -> bool:
    """Pair elimination for short solution paths, then the preprocessed
    thread branches with the iterative merge loop."""
    spec.validate(g)
    if mode == "verify":
        _check_h_free(g, 2)
    return _solve_h2(g, list(spec.pairs))


def _solve_h2(g: Graph, pairs: list[tuple[int, int]]) -> bool:
    if not pairs:
        return True
    if _cross_terminal_edge(g, pairs):
        return False
    tset = set(v for pair in pairs for v in pair)
    for i, (s, t) in enumerate(pairs):
        others = tset - {s, t}
        for path in _short_paths(g, s, t, others, _SHORT_PATH_LIMIT):
            if any(g.adj[v] & others for v in path):
                continue
            dead = set(path)
            for v in path:
                dead |= g.adj[v]
            rest = pairs[:i] + pairs[i + 1 :]
            if any(v in dead for pair in rest for v in pair):
                continue
            reduced, remap = delete_vertices(g, dead)
            if _solve_h2(reduced, [(remap[a], remap[b]) for a, b in rest]):
                return True
    for bg, bspec in preprocess_kidp_h2(g, TerminalSpec(tuple(pairs))):
        if _merge_loop(bg, bspec):
            return True
    return False
