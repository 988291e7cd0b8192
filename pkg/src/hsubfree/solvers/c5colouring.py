"""C5-colouring on H(3)-subgraph-free graphs.

Under the promise, a graph fails to map to C5 exactly when it contains one
of finitely many critical obstructions: K3, the exceptional graphs E1, E2,
E3, or an odd C5-flower.  The solver is literally that detection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..graphs import Graph
from ..oracles import DEFAULT_BOUNDS, oracle_c5_colouring
from ..patterns import Embedding, PatternId, contains_subgraph, detect_odd_flower, is_family_free
from . import PromiseMode, PromiseViolation

OBSTRUCTIONS = (
    PatternId("K", (3,)),
    PatternId("E1"),
    PatternId("E2"),
    PatternId("E3"),
)


@dataclass(frozen=True)
class C5Decision:
    yes: bool
    witness_id: Optional[PatternId] = None
    witness: Optional[Embedding] = None
    colouring: Optional[list[int]] = None


def solve_c5col_h3free(g: Graph, mode: PromiseMode = "verify") -> C5Decision:
    """NO with an embedded obstruction witness, YES otherwise.

    At desk scale (within the oracle bound) a YES answer also carries an
    oracle-found colouring.
    """
    if mode == "verify":
        free, wit = is_family_free(g, [PatternId("H", (3,))])
        if not free:
            raise PromiseViolation("input contains H(3) as a subgraph", wit)
    for pid in OBSTRUCTIONS:
        emb = contains_subgraph(g, pid)
        if emb is not None:
            return C5Decision(False, pid, emb)
    flower = detect_odd_flower(g)
    if flower is not None:
        _, n, emb = flower
        return C5Decision(False, PatternId("flower", (n,)), emb)
    colouring = oracle_c5_colouring(g) if g.n <= DEFAULT_BOUNDS["c5"] else None
    return C5Decision(True, colouring=colouring)
