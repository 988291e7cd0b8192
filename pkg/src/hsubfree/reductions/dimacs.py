"""DIMACS cnf ingestion restricted to width-3 clauses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..graphs import GraphError


@dataclass(frozen=True)
class CnfFormula:
    """Exactly-3-literal clauses over variables 1..n; literals are signed
    variable indices. Repeated literals inside a clause are allowed."""

    n: int
    clauses: tuple[tuple[int, int, int], ...]

    @property
    def m(self) -> int:
        return len(self.clauses)

    def literals(self) -> list[int]:
        """The flattened literal positions y_1..y_{3m}."""
        return [lit for clause in self.clauses for lit in clause]


Assignment = Sequence[int]  # 0/1 per variable, index 0 unused or 1-based list


def satisfies(formula: CnfFormula, xi: Sequence[int]) -> bool:
    """xi maps variable i (1-based) to 0/1; xi[0] is ignored."""
    if len(xi) != formula.n + 1:
        raise GraphError("assignment must cover variables 1..n")
    for clause in formula.clauses:
        if not any((xi[abs(l)] == 1) == (l > 0) for l in clause):
            return False
    return True


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS cnf: `c` comments, `p cnf n m` header, clauses ending 0.

    Clauses may span lines; every clause must have exactly three literals.
    """
    n = None
    m = None
    pending: list[int] = []
    clauses: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n is not None:
                raise GraphError(f"line {lineno}: duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphError(f"line {lineno}: malformed header")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed header") from None
            if n < 0 or m < 0:
                raise GraphError(f"line {lineno}: negative counts")
            continue
        if n is None:
            raise GraphError(f"line {lineno}: clause before header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise GraphError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                if len(pending) != 3:
                    raise GraphError(f"line {lineno}: clause width {len(pending)} != 3")
                clauses.append((pending[0], pending[1], pending[2]))
                pending = []
            else:
                if abs(lit) > n:
                    raise GraphError(f"line {lineno}: variable {abs(lit)} out of range")
                pending.append(lit)
    if pending:
        raise GraphError("unterminated clause at end of input")
    if n is None:
        raise GraphError("missing 'p cnf' header")
    if m != len(clauses):
        raise GraphError(f"header announces {m} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))
