"""Star 3-colouring solvers for even-H-subgraph-free graphs, plus the
greedy injective 10-colouring of subcubic graphs.

Bipartite case: a component is a no-instance exactly when it contains the
A-graph or the theta graph with two P4- and three P6-paths.  General case:
five or more branch vertices force a finite obstruction (A, C5, bowtie, or
a C4 carrying three branch vertices); with at most four branch vertices
the thread structure is compressed to bounded size and decided by
backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..graphs import Graph, GraphError, connected_components, induced_subgraph, is_bipartite
from ..oracles import oracle_star3col
from ..patterns import (
    Embedding,
    HFamily,
    PatternId,
    contains_subgraph,
    find_c4_three_branch,
    is_family_free,
)
from . import CharacterizationViolation, PromiseMode, PromiseViolation

EVEN_H_FAMILY = [HFamily(residues=((0, 2),), lo=2)]

BIPARTITE_OBSTRUCTIONS = (PatternId("A"), PatternId("theta", (2, 4, 3, 6)))
F0 = (PatternId("A"), PatternId("C", (5,)), PatternId("bowtie"))


@dataclass(frozen=True)
class StarDecision:
    yes: bool
    witness_id: Optional[PatternId] = None
    witness: Optional[Embedding] = None
    witness_c4: Optional[frozenset[int]] = None


def _check_even_h_free(g: Graph) -> None:
    free, wit = is_family_free(g, EVEN_H_FAMILY)
    if not free:
        raise PromiseViolation("input contains an even H(l) as a subgraph", wit)


def solve_star3col_bipartite(g: Graph, mode: PromiseMode = "verify") -> StarDecision:
    """NO with an embedded A- or theta-witness, YES otherwise."""
    if mode == "verify":
        if not is_bipartite(g):
            raise PromiseViolation("input is not bipartite")
        _check_even_h_free(g)
    for pid in BIPARTITE_OBSTRUCTIONS:
        emb = contains_subgraph(g, pid)
        if emb is not None:
            return StarDecision(False, pid, emb)
    return StarDecision(True)


def solve_star3col_general(g: Graph, mode: PromiseMode = "verify") -> StarDecision:
    """Component-wise decision for even-H-free inputs."""
    if mode == "verify":
        _check_even_h_free(g)
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        verdict = _solve_component(sub)
        if not verdict.yes:
            return verdict
    return StarDecision(True)


def _solve_component(g: Graph) -> StarDecision:
    branch = [v for v in range(g.n) if len(g.adj[v]) >= 3]
    if len(branch) >= 5:
        for pid in F0:
            emb = contains_subgraph(g, pid)
            if emb is not None:
                return StarDecision(False, pid, emb)
        c4 = find_c4_three_branch(g)
        if c4 is not None:
            return StarDecision(False, witness_c4=c4)
        raise CharacterizationViolation(
            "component with >= 5 branch vertices carries no known obstruction"
        )
    if not branch:
        # a bare path or a bare cycle
        if g.m == g.n:  # cycle
            return StarDecision(g.n != 5)
        return StarDecision(True)
    compressed = compress_threads(g)
    return StarDecision(oracle_star3col(compressed, bound=compressed.n) is not None)


# --------------------------------------------------------------------------
# Thread compression (at most four branch vertices)

_LONG_THREAD = 13  # threads at least this long shrink to 10/11/12 (mod 3)
_MULTIPLICITY_CAP = 729  # 3**6 parallel identical threads behave alike


def _canonical_length(length: int) -> int:
    if length < _LONG_THREAD:
        return length
    return 10 + ((length - 10) % 3)


def compress_threads(g: Graph) -> Graph:
    """Shrink every thread between branch structures to a canonical length
    congruent mod 3, and cap the multiplicity of identical threads.

    Correct as a star-3-colourability reduction because a star colouring of
    a path of length >= 10 contains a free run of three distinct colours,
    so only the length mod 3 matters beyond that point.
    """
    branch = sorted(v for v in range(g.n) if len(g.adj[v]) >= 3)
    if not branch:
        return g
    bset = set(branch)
    threads: list[tuple[tuple, int]] = []  # (signature, length); signature keys grouping
    seen_edges: set[tuple[int, int]] = set()
    seen_verts: set[int] = set()

    for b in branch:
        for w in sorted(g.adj[b]):
            if w in bset:
                e = (min(b, w), max(b, w))
                if e not in seen_edges:
                    seen_edges.add(e)
                    threads.append((("bb", e[0], e[1]), 1))
                continue
            if w in seen_verts:
                continue
            # walk the degree-<=2 run starting at w
            run = [w]
            prev, cur = b, w
            while True:
                nxt = [x for x in g.adj[cur] if x != prev]
                if not nxt:
                    threads.append((("pendant", b), len(run)))
                    break
                if len(nxt) > 1:
                    raise GraphError("thread walk hit a branch-degree vertex unexpectedly")
                x = nxt[0]
                if x in bset:
                    if x == b:
                        key = ("loop", b)
                    else:
                        key = ("bb-thread", min(b, x), max(b, x))
                    threads.append((key, len(run) + 1))
                    break
                run.append(x)
                prev, cur = cur, x
            seen_verts |= set(run)

    # rebuild: branch vertices first, thread interiors fresh
    edges: list[tuple[int, int]] = []
    remap = {b: i for i, b in enumerate(branch)}
    nxt = len(branch)

    def fresh() -> int:
        nonlocal nxt
        nxt += 1
        return nxt - 1

    def add_chain(chain_ends: tuple[Optional[int], Optional[int]], length: int) -> None:
        a, b2 = chain_ends
        inner = [fresh() for _ in range(length - (1 if b2 is not None else 0))]
        chain = [a] + inner + ([b2] if b2 is not None else [])
        edges.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))

    counts: dict[tuple, int] = {}
    for key, length in threads:
        canon = _canonical_length(length)
        bucket = (key, canon)
        if counts.get(bucket, 0) >= _MULTIPLICITY_CAP:
            continue
        counts[bucket] = counts.get(bucket, 0) + 1
        if key[0] == "bb":
            edges.append((remap[key[1]], remap[key[2]]))
        elif key[0] == "bb-thread":
            add_chain((remap[key[1]], remap[key[2]]), canon)
        elif key[0] == "pendant":
            add_chain((remap[key[1]], None), canon)
        elif key[0] == "loop":
            a = remap[key[1]]
            add_chain((a, a), canon)
    return Graph.from_edges(nxt, edges)


# --------------------------------------------------------------------------
# Injective 10-colouring of subcubic graphs


def greedy_injective_10col(g: Graph) -> list[int]:
    """A proper colouring with no repeated colour at distance <= 2.

    Vertex-by-vertex greedy: each vertex avoids the colours of its at most
    3 + 6 = 9 coloured neighbours-within-two, so ten colours always
    suffice.  The result has no bichromatic P3, hence is a star colouring.
    """
    if any(len(s) > 3 for s in g.adj):
        raise GraphError("greedy_injective_10col requires a subcubic graph")
    colouring = [-1] * g.n
    for v in range(g.n):
        taken = set()
        for w in g.adj[v]:
            if colouring[w] != -1:
                taken.add(colouring[w])
            for x in g.adj[w]:
                if x != v and colouring[x] != -1:
                    taken.add(colouring[x])
        c = 0
        while c in taken:
            c += 1
        if c >= 10:
            raise AssertionError("ten colours must suffice on subcubic graphs")
        colouring[v] = c
    return colouring
