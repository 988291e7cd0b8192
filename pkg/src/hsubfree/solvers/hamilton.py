"""Hamilton Cycle on H(1)-subgraph-free graphs.

Recursive case dispatch: trivial rejections, then a diamond- or bull-shaped
neighbourhood around an adjacent pair of branch vertices is either answered
outright or contracted to a strictly smaller instance.  Residual graphs with
at most six vertices are settled exactly by the subset-DP oracle (constant
work).  Configurations outside the case ledger raise CaseExhaustion rather
than guessing.
"""

from __future__ import annotations

from typing import Optional

from ..graphs import Graph, contract_set, is_connected
from ..oracles import oracle_hamilton
from ..patterns import PatternId, is_family_free
from . import CaseExhaustion, PromiseMode, PromiseViolation

_TERMINAL_SIZE = 6


def h1_free_fast(g: Graph) -> bool:
    """H(1) embeds iff some edge (a,b) has two private neighbours on each
    side, i.e. |N(a)\\{b}|, |N(b)\\{a}| >= 2 and their union has >= 4
    vertices outside {a,b}."""
    for a, b in g.edges():
        na = g.adj[a] - {b}
        nb = g.adj[b] - {a}
        if len(na) >= 2 and len(nb) >= 2 and len((na | nb) - {a, b}) >= 4:
            return False
    return True


def _check_free(g: Graph) -> None:
    if not h1_free_fast(g):
        _, wit = is_family_free(g, [PatternId("H", (1,))])
        raise PromiseViolation("graph contains H(1) as a subgraph", wit)


def _diamond_anchor(g: Graph) -> Optional[tuple[int, int, int, int]]:
    """An adjacent branch pair (a, b) with two common neighbours p < q."""
    for a, b in g.edges():
        if len(g.adj[a]) < 3 or len(g.adj[b]) < 3:
            continue
        common = sorted(g.adj[a] & g.adj[b])
        if len(common) >= 2:
            return a, b, common[0], common[1]
    return None


def solve_hamilton_h1free(g: Graph, mode: PromiseMode = "verify") -> bool:
    if mode == "verify":
        _check_free(g)
    while True:
        n = g.n
        if n <= _TERMINAL_SIZE:
            return oracle_hamilton(g, bound=max(n, 1)) is not None
        if not is_connected(g):
            return False
        degs = [len(g.adj[v]) for v in range(n)]
        if min(degs) <= 1:
            return False
        if max(degs) <= 2:
            return True  # connected and 2-regular: a cycle
        branch = [v for v in range(n) if degs[v] >= 3]
        if any(all(degs[u] == 2 for u in g.adj[v]) for v in branch):
            return False  # every visit of such a neighbour forces the centre

        anchor = _diamond_anchor(g)
        if anchor is not None:
            g = _diamond_case(g, anchor)
            if isinstance(g, bool):
                return g
        else:
            g = _bull_case(g)
            if isinstance(g, bool):
                return g
        if mode == "verify":
            _check_free(g)


def _diamond_case(g: Graph, anchor: tuple[int, int, int, int]):
    """{u,v,p,q} induces a diamond or K4 (p,q common neighbours of the
    adjacent branch pair u,v).  Returns a bool verdict or the contracted
    graph.  Assumes n >= 7, connected, H(1)-free, min degree >= 2."""
    u, v, p, q = anchor
    d = {u, v, p, q}
    o_u = g.adj[u] - d
    o_v = g.adj[v] - d
    o_p = g.adj[p] - d
    o_q = g.adj[q] - d
    outer_uv = o_u | o_v
    # H(1)-freeness bounds every one of these sets by a single vertex and
    # |outer_uv| <= 1; anything else would have been caught upstream.
    if len(o_p) > 1 or len(o_q) > 1 or len(outer_uv) > 1:
        raise CaseExhaustion("diamond case with multiple private neighbours (H(1) present)")
    if o_p and o_q:
        if o_p == o_q:
            # the single shared neighbour is a cutvertex for {u,v,p,q}
            return False
        return contract_set(g, d)
    if o_p or o_q:
        if not outer_uv:
            # the one of p,q with an outside neighbour is a cutvertex
            return False
        raise CaseExhaustion("diamond case: u/v attachment next to a private p/q neighbour")
    # p and q see nothing outside; u or v must (the graph is bigger than d)
    if not outer_uv:
        raise CaseExhaustion("diamond case: no attachment to the rest of the graph")
    if g.has_edge(p, q):
        return contract_set(g, d)
    return False  # degree-2 vertices p and q force the 4-cycle u-p-v-q


def _bull_case(g: Graph):
    """No adjacent branch pair shares two neighbours, so the local shape is
    a bull: triangle u,v,p with pendant edges uq and vs.  Returns a bool
    verdict or the contracted graph."""
    n = g.n
    degs = [len(g.adj[x]) for x in range(n)]
    v = next(x for x in range(n) if degs[x] >= 3 and any(degs[w] >= 3 for w in g.adj[x]))
    u = min(w for w in g.adj[v] if degs[w] >= 3)
    a = g.adj[u] - {v}
    b = g.adj[v] - {u}
    common = a & b
    if not common:
        raise CaseExhaustion("adjacent branch vertices with disjoint neighbourhoods (H(1) present)")
    p = min(common)
    q = min(a - {p})
    s = min(b - {p})
    if degs[u] != 3 or degs[v] != 3:
        raise CaseExhaustion("bull case with a degree->3 corner (H(1) present)")
    if degs[p] == 2:
        return contract_set(g, {u, v, p})
    if degs[p] != 3:
        raise CaseExhaustion("bull case with deg(p) > 3 (H(1) present)")
    t = min(g.adj[p] - {u, v})
    if degs[t] != 2:
        raise CaseExhaustion("bull case with a branching third neighbour of p (H(1) present)")
    inner = {u, v, q, s, t}
    q_out = bool(g.adj[q] - inner - {q})
    s_out = bool(g.adj[s] - inner - {s})
    if not q_out or not s_out:
        if g.has_edge(q, s):
            return contract_set(g, {u, v, p, t})
        return False
    # both pendants continue outward: u,v,p cannot serve q, s and t at once
    return False
