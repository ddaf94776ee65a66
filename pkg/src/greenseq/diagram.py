"""Diagrams of exchange matrices and the 3x3 mutation-cyclicity classifier.

The diagram of B has a directed edge i -> j iff B[j][i] > 0, weighted by
|B[i][j] * B[j][i]|.  Mutation-cyclicity at rank 3 is decided by weight
descent: repeatedly apply the mutation that lowers the total edge weight
the most, stopping at an acyclic diagram or at a weight-minimal cyclic one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import ExchangeMatrix, Matrix, _mutate_matrix_rows
from .errors import UnsupportedDimension

DEFAULT_BUDGET = 1000


@dataclass(frozen=True)
class Diagram:
    """Directed weighted graph on vertices 1..n; edges are (source, target, weight)."""

    n: int
    edges: frozenset[tuple[int, int, int]]

    def sorted_edges(self) -> list[tuple[int, int, int]]:
        return sorted(self.edges)

    def total_weight(self) -> int:
        return sum(w for _, _, w in self.edges)

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


def _diagram_of_rows(rows: Matrix) -> Diagram:
    n = len(rows)
    edges = set()
    for i in range(n):
        for j in range(n):
            if rows[j][i] > 0:
                edges.add((i + 1, j + 1, abs(rows[i][j] * rows[j][i])))
    return Diagram(n, frozenset(edges))


def diagram_of(b: ExchangeMatrix) -> Diagram:
    """The diagram of b: edge i -> j iff B_{j,i} > 0, weight |B_{ij} B_{ji}|."""
    return _diagram_of_rows(b.entries)


def is_cyclic(g: Diagram) -> bool:
    """True iff g contains an oriented cycle (any length)."""
    succ = {v: [] for v in range(1, g.n + 1)}
    indeg = {v: 0 for v in range(1, g.n + 1)}
    for i, j, _ in g.edges:
        succ[i].append(j)
        indeg[j] += 1
    # Kahn peeling: leftovers mean a cycle.
    queue = [v for v in indeg if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen < g.n


def sources_and_sinks(g: Diagram) -> tuple[set[int], set[int]]:
    """(sources, sinks); isolated vertices belong to neither set."""
    outdeg = {v: 0 for v in range(1, g.n + 1)}
    indeg = {v: 0 for v in range(1, g.n + 1)}
    for i, j, _ in g.edges:
        outdeg[i] += 1
        indeg[j] += 1
    sources = {v for v in outdeg if outdeg[v] >= 1 and indeg[v] == 0}
    sinks = {v for v in indeg if indeg[v] >= 1 and outdeg[v] == 0}
    return sources, sinks


@dataclass(frozen=True)
class CyclicityVerdict:
    """Outcome of the weight-descent classification.

    For MutationAcyclic, witness is a mutation path whose replay ends at an
    acyclic diagram.  For MutationCyclic, witness is the descent path to
    the weight-minimal cyclic diagram stored in terminal.
    """

    kind: str  # "MutationAcyclic" | "MutationCyclic" | "Inconclusive"
    witness: tuple[int, ...]
    budget_used: int
    terminal: Diagram | None = field(default=None)

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "witness": list(self.witness),
            "budget_used": self.budget_used,
        }
        if self.terminal is not None:
            out["terminal_diagram"] = self.terminal.to_dict()
        return out


def classify_mutation_cyclicity(
    b: ExchangeMatrix, budget: int = DEFAULT_BUDGET
) -> CyclicityVerdict:
    """Weight-descent classifier for 3x3 exchange matrices.

    While some single mutation strictly decreases the total edge weight,
    apply the one with the minimal resulting total (ties: smallest vertex
    index).  Acyclic diagram reached -> MutationAcyclic with the path as
    witness; cyclic with no descending move -> MutationCyclic; budget
    exhausted first -> Inconclusive.
    """
    if b.n != 3:
        raise UnsupportedDimension(f"classifier requires n=3, got n={b.n}")
    rows = b.entries
    path: list[int] = []
    steps = 0
    while True:
        g = _diagram_of_rows(rows)
        if not is_cyclic(g):
            return CyclicityVerdict("MutationAcyclic", tuple(path), steps)
        total = g.total_weight()
        best = None
        for k0 in range(3):
            cand = _mutate_matrix_rows(rows, k0)
            cand_total = _diagram_of_rows(cand).total_weight()
            if cand_total < total and (best is None or cand_total < best[0]):
                best = (cand_total, k0, cand)
        if best is None:
            return CyclicityVerdict("MutationCyclic", tuple(path), steps, g)
        if steps >= budget:
            return CyclicityVerdict("Inconclusive", tuple(path), steps)
        _, k0, rows = best
        path.append(k0 + 1)
        steps += 1
