"""The four polynomial-time solvers, each under a subgraph-freeness promise.

``mode="verify"`` checks the promised freeness first and raises
PromiseViolation with a witness embedding on failure; ``mode="trust"``
skips the check (answers are then only meaningful on promise-satisfying
inputs).
"""

from __future__ import annotations

from typing import Literal, Optional

from ..graphs import GraphError
from ..patterns import Embedding, PatternId

PromiseMode = Literal["verify", "trust"]


class PromiseViolation(GraphError):
    """The input violates the solver's subgraph-freeness promise."""

    def __init__(self, message: str, witness: Optional[tuple[PatternId, Embedding]] = None):
        super().__init__(message)
        self.witness = witness


class CaseExhaustion(GraphError):
    """The case analysis reached a configuration it does not cover.

    Never expected on promise-satisfying inputs; reported, not swallowed.
    """


class CharacterizationViolation(GraphError):
    """A structural guarantee promised by the characterisation failed to
    materialise (would be a counterexample to the underlying lemma)."""


from .c5colouring import C5Decision, solve_c5col_h3free  # noqa: E402
from .hamilton import solve_hamilton_h1free  # noqa: E402
from .kidp import (  # noqa: E402
    ConflictSite,
    apply_merge_rule,
    preprocess_kidp_h2,
    solve_kidp_h1free,
    solve_kidp_h2free,
)
from .starcolouring import (  # noqa: E402
    StarDecision,
    greedy_injective_10col,
    solve_star3col_bipartite,
    solve_star3col_general,
)

__all__ = [
    "PromiseMode",
    "PromiseViolation",
    "CaseExhaustion",
    "CharacterizationViolation",
    "C5Decision",
    "solve_c5col_h3free",
    "solve_hamilton_h1free",
    "ConflictSite",
    "apply_merge_rule",
    "preprocess_kidp_h2",
    "solve_kidp_h1free",
    "solve_kidp_h2free",
    "StarDecision",
    "greedy_injective_10col",
    "solve_star3col_bipartite",
    "solve_star3col_general",
]
