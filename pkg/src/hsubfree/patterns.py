"""Pattern graphs and subgraph (not induced) detection.

The catalog covers the fixed forbidden graphs (claw, diamond, bull, bowtie,
the A-graph, E1-E3, ...) and the parameterized families: the subdivided
H-graphs H(l), C5-flowers, squash rackets and theta graphs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .graphs import Graph, GraphError, bipartition

FIXED_PATTERNS = (
    "claw",
    "diamond",
    "diamond-pendant",
    "bull",
    "bowtie",
    "A",
    "E1",
    "E2",
    "E3",
)


@dataclass(frozen=True)
class PatternId:
    """A named pattern graph, possibly parameterized.

    kinds: H, claw, K, C, Kb, diamond, diamond-pendant, bull, bowtie, A,
    E1, E2, E3, flower, racket, theta.
    """

    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        if self.kind == "Kb":
            return f"Kb:{self.params[0]},{self.params[1]}"
        if self.kind == "theta":
            a, i, b, j = self.params
            return f"theta:{a}x{i}+{b}x{j}"
        return f"{self.kind}:{self.params[0]}"


def parse_pattern_id(text: str) -> PatternId:
    """Parse the CLI pattern syntax, e.g. ``H:3``, ``flower:5``,
    ``theta:2x4+3x6``, ``Kb:2,3``, ``racket:4``, ``bowtie``."""
    text = text.strip()
    if text in FIXED_PATTERNS:
        return PatternId(text)
    m = re.fullmatch(r"(H|K|C|flower|racket):(\d+)", text)
    if m:
        return PatternId(m.group(1), (int(m.group(2)),))
    m = re.fullmatch(r"Kb:(\d+),(\d+)", text)
    if m:
        return PatternId("Kb", (int(m.group(1)), int(m.group(2))))
    m = re.fullmatch(r"theta:(\d+)x(\d+)\+(\d+)x(\d+)", text)
    if m:
        return PatternId("theta", tuple(int(x) for x in m.groups()))
    raise GraphError(f"unknown pattern id: {text!r}")


def build_pattern(pid: PatternId) -> Graph:
    """The canonical graph for a pattern id; raises on invalid parameters."""
    kind, params = pid.kind, pid.params
    if kind == "H":
        (ell,) = params
        if ell < 0:
            raise GraphError("H(l) needs l >= 0")
        if ell == 0:
            return Graph.from_edges(5, [(0, i) for i in range(1, 5)])
        # branch vertices 0 and 1, two leaves each, middle path of length l
        edges = [(0, 2), (0, 3), (1, 4), (1, 5)]
        chain = [0] + list(range(6, 6 + ell - 1)) + [1]
        edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
        return Graph.from_edges(ell + 5, edges)
    if kind == "claw":
        return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    if kind == "K":
        (r,) = params
        if r < 1:
            raise GraphError("K(r) needs r >= 1")
        return Graph.complete(r)
    if kind == "C":
        (r,) = params
        if r < 3:
            raise GraphError("C(r) needs r >= 3")
        return Graph.cycle(r)
    if kind == "Kb":
        a, b = params
        if a < 1 or b < 1:
            raise GraphError("Kb(a,b) needs a,b >= 1")
        return Graph.complete_bipartite(a, b)
    if kind == "diamond":
        return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    if kind == "diamond-pendant":
        return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)])
    if kind == "bull":
        return Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
    if kind == "bowtie":
        return Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    if kind == "A":
        # C4 plus pendants on two adjacent cycle vertices
        return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)])
    if kind == "E1":
        return Graph.from_edges(
            9,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
             (0, 5), (5, 6), (6, 7), (7, 4),
             (2, 8), (8, 7)],
        )
    if kind == "E2":
        return Graph.from_edges(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
             (0, 5), (5, 6), (6, 7), (7, 4),
             (2, 6)],
        )
    if kind == "E3":
        return Graph.from_edges(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
             (0, 5), (5, 6), (6, 7), (7, 4),
             (1, 7)],
        )
    if kind == "flower":
        (n,) = params
        if n < 3:
            raise GraphError("flower(n) needs n >= 3")
        rim = [(i, (i + 1) % (3 * n)) for i in range(3 * n)]
        spokes = [(3 * n, 3 * i) for i in range(n)]
        return Graph.from_edges(3 * n + 1, rim + spokes)
    if kind == "racket":
        (i,) = params
        if i < 1:
            raise GraphError("racket(i) needs i >= 1")
        # path 0..i-1; its end i-1 sits on a C4 (i-1, i, i+1, i+2)
        edges = [(v, v + 1) for v in range(i - 1)]
        edges += [(i - 1, i), (i, i + 1), (i + 1, i + 2), (i + 2, i - 1)]
        return Graph.from_edges(i + 3, edges)
    if kind == "theta":
        a, i, b, j = params
        if a < 0 or b < 0 or i < 2 or j < 2 or a + b < 1:
            raise GraphError("theta(a,i,b,j) needs a,b >= 0 (not both 0) and orders >= 2")
        edges: list[tuple[int, int]] = []
        nxt = 2
        for order, count in ((i, a), (j, b)):
            for _ in range(count):
                chain = [0] + list(range(nxt, nxt + order - 2)) + [1]
                nxt += order - 2
                edges += [(chain[t], chain[t + 1]) for t in range(len(chain) - 1)]
        return Graph.from_edges(nxt, edges)
    raise GraphError(f"unknown pattern kind: {kind!r}")


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern-vertex -> host-vertex preserving pattern edges."""

    mapping: tuple[int, ...]

    def __getitem__(self, pattern_vertex: int) -> int:
        return self.mapping[pattern_vertex]

    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)


def verify_embedding(pattern: Graph, host: Graph, emb: Embedding) -> bool:
    """Independent check: injectivity plus edge preservation."""
    if len(emb.mapping) != pattern.n:
        return False
    if len(set(emb.mapping)) != pattern.n:
        return False
    if any(not (0 <= h < host.n) for h in emb.mapping):
        return False
    return all(host.has_edge(emb.mapping[u], emb.mapping[v]) for u, v in pattern.edges())


def _search_order(pattern: Graph, pinned: Sequence[int]) -> list[int]:
    """Connected, degree-descending placement order, pinned vertices first."""
    order = list(pinned)
    placed = set(order)
    while len(order) < pattern.n:
        best = None
        best_key = None
        for v in range(pattern.n):
            if v in placed:
                continue
            attached = sum(1 for w in pattern.adj[v] if w in placed)
            key = (attached, len(pattern.adj[v]), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed.add(best)
    return order


def find_embedding(
    host: Graph,
    pattern: Graph,
    pins: Optional[dict[int, int]] = None,
) -> Optional[Embedding]:
    """Backtracking subgraph search with host-degree pruning.

    ``pins`` fixes pattern vertices to host vertices up front. Deterministic:
    host candidates are tried in ascending index order.
    """
    if pattern.n > host.n or pattern.m > host.m:
        return None
    pins = pins or {}
    for p, h in pins.items():
        if len(pattern.adj[p]) > len(host.adj[h]):
            return None
    order = _search_order(pattern, sorted(pins))
    pos = {v: i for i, v in enumerate(order)}
    assignment: list[int] = [-1] * pattern.n
    used = [False] * host.n

    # host degree sequence must dominate the pattern's
    host_degs = sorted((len(s) for s in host.adj), reverse=True)[: pattern.n]
    if host_degs < sorted((len(s) for s in pattern.adj), reverse=True):
        return None

    def candidates(p: int) -> Iterable[int]:
        if p in pins:
            h = pins[p]
            return [] if used[h] else [h]
        anchors = [assignment[q] for q in pattern.adj[p] if assignment[q] != -1]
        if anchors:
            base = min((host.adj[a] for a in anchors), key=len)
            cand = sorted(h for h in base if not used[h])
        else:
            cand = [h for h in range(host.n) if not used[h]]
        deg = len(pattern.adj[p])
        return [h for h in cand if len(host.adj[h]) >= deg]

    def extend(i: int) -> bool:
        if i == pattern.n:
            return True
        p = order[i]
        for h in candidates(p):
            ok = all(
                assignment[q] == -1 or h in host.adj[assignment[q]]
                for q in pattern.adj[p]
            )
            if not ok:
                continue
            assignment[p] = h
            used[h] = True
            if extend(i + 1):
                return True
            assignment[p] = -1
            used[h] = False
        return False

    if extend(0):
        return Embedding(tuple(assignment))
    return None


def contains_subgraph(g: Graph, pid: PatternId) -> Optional[Embedding]:
    """An embedding of the pattern into g, or None. Returned embeddings verify."""
    pattern = build_pattern(pid)
    emb = find_embedding(g, pattern)
    assert emb is None or verify_embedding(pattern, g, emb)
    return emb


# --------------------------------------------------------------------------
# Parameterized families


@dataclass(frozen=True)
class HFamily:
    """A set of H(l) indices: explicit residue classes or a range.

    ``residues`` holds (a, b) meaning l = a (mod b); ``lo``/``hi`` bound l.
    """

    residues: tuple[tuple[int, int], ...] = ()
    lo: int = 1
    hi: Optional[int] = None

    def instantiate(self, n_host: int) -> list[PatternId]:
        """All members that can fit in a host with n_host vertices.

        H(l) has l+5 vertices, so l <= n_host - 5.
        """
        top = n_host - 5
        if self.hi is not None:
            top = min(top, self.hi)
        out = []
        for ell in range(self.lo, top + 1):
            if not self.residues or any(ell % b == a % b for a, b in self.residues):
                out.append(PatternId("H", (ell,)))
        return out


FamilyAtom = Union[PatternId, HFamily]


def parse_family(text: str) -> list[FamilyAtom]:
    """Parse CLI family expressions: comma-joined pattern ids and H classes.

    H classes: ``H:odd``, ``H:even``, ``H:all``, ``H:1..4``,
    ``H:1mod3,2mod3`` (residues may be mixed with plain ids).
    """
    atoms: list[FamilyAtom] = []
    residues: list[tuple[int, int]] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if part == "H:odd":
            atoms.append(HFamily(residues=((1, 2),)))
        elif part == "H:even":
            atoms.append(HFamily(residues=((0, 2),), lo=2))
        elif part == "H:all":
            atoms.append(HFamily(lo=0))
        elif re.fullmatch(r"H:\d+\.\.\d+", part):
            lo, hi = part[2:].split("..")
            atoms.append(HFamily(lo=int(lo), hi=int(hi)))
        elif re.fullmatch(r"\d+mod\d+", part):
            a, b = part.split("mod")
            residues.append((int(a), int(b)))
        elif re.fullmatch(r"H:\d+mod\d+", part):
            a, b = part[2:].split("mod")
            residues.append((int(a), int(b)))
        else:
            atoms.append(parse_pattern_id(part))
    if residues:
        atoms.append(HFamily(residues=tuple(residues)))
    return atoms


def instantiate_family(family: Iterable[FamilyAtom], n_host: int) -> list[PatternId]:
    out: list[PatternId] = []
    for atom in family:
        if isinstance(atom, HFamily):
            out.extend(atom.instantiate(n_host))
        else:
            out.append(atom)
    # drop members that cannot fit
    return [pid for pid in out if build_pattern(pid).n <= n_host]


def is_family_free(
    g: Graph, family: Iterable[FamilyAtom]
) -> tuple[bool, Optional[tuple[PatternId, Embedding]]]:
    """True iff no family member embeds in g; else a witness embedding."""
    for pid in instantiate_family(list(family), g.n):
        emb = contains_subgraph(g, pid)
        if emb is not None:
            return False, (pid, emb)
    return True, None


# --------------------------------------------------------------------------
# Specialised detectors


def find_c4_three_branch(g: Graph) -> Optional[frozenset[int]]:
    """A 4-cycle of g with at least three vertices of degree >= 3, if any."""
    for u in range(g.n):
        for w in range(u + 1, g.n):
            common = sorted(g.adj[u] & g.adj[w])
            if len(common) < 2:
                continue
            for ai in range(len(common)):
                for bi in range(ai + 1, len(common)):
                    cyc = (u, common[ai], w, common[bi])
                    if sum(1 for v in cyc if len(g.adj[v]) >= 3) >= 3:
                        return frozenset(cyc)
    return None


def _flower_aux_graph(g: Graph, centre: int) -> Graph:
    """Auxiliary graph on the neighbours of ``centre``: two neighbours are
    joined when a 3-edge path avoiding the centre connects them in g."""
    nbrs = sorted(g.adj[centre])
    idx = {v: i for i, v in enumerate(nbrs)}
    edges = set()
    for a in nbrs:
        for w1 in g.adj[a]:
            if w1 == centre:
                continue
            for w2 in g.adj[w1]:
                if w2 == centre or w2 == a:
                    continue
                for b in g.adj[w2]:
                    if b in idx and b != a and b != w1 and w2 not in (a, b) and w1 != b:
                        if a < b:
                            edges.add((idx[a], idx[b]))
    return Graph.from_edges(len(nbrs), sorted(edges))


def detect_odd_flower(g: Graph) -> Optional[tuple[int, int, Embedding]]:
    """An embedding of some odd C5-flower F_n, if one exists.

    Centres whose auxiliary graph is bipartite cannot carry an odd flower,
    so they are skipped; surviving centres are settled by explicit embedding
    search (the auxiliary graph alone does not certify that the 3-paths are
    vertex-disjoint).
    """
    n_max = (g.n - 1) // 3
    if n_max < 3:
        return None
    for centre in range(g.n):
        if len(g.adj[centre]) < 3:
            continue
        if bipartition(_flower_aux_graph(g, centre)) is not None:
            continue
        for n in range(3, n_max + 1):
            if n % 2 == 0:
                continue
            pattern = build_pattern(PatternId("flower", (n,)))
            emb = find_embedding(g, pattern, pins={3 * n: centre})
            if emb is not None:
                return centre, n, emb
    return None


def is_in_class_S(g: Graph) -> bool:
    """True iff every component is a path or a subdivided claw."""
    from .graphs import connected_components

    for comp in connected_components(g):
        degs = sorted(len(g.adj[v]) for v in comp)
        edge_count = sum(len(g.adj[v] & set(comp)) for v in comp) // 2
        if edge_count != len(comp) - 1:
            return False  # component has a cycle
        if degs and degs[-1] <= 2:
            continue  # a path
        if degs[-1] == 3 and degs.count(3) == 1:
            continue  # a subdivided claw
        return False
    return True
