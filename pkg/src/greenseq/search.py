"""Green sequences: verification, search/enumeration, and theorem audits.

A vertex is green when its c-vector is nonnegative; a green sequence only
ever mutates green vertices, and is maximal when every c-vector ends up
negative.  The search explores the tree of green moves depth-first in
ascending vertex order with an explicit depth limit and an honest
"exhausted" flag; there is no visited-state pruning, so enumeration counts
do not depend on any state-equivalence assumption.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    YSeed,
    Vector,
    _check_index,
    _mutate_cvectors,
    _mutate_matrix_rows,
    _sign_vector,
    mutate_seed,
    sign_of,
)
from .diagram import (
    DEFAULT_BUDGET,
    _diagram_of_rows,
    classify_mutation_cyclicity,
    is_cyclic,
)
from .errors import (
    IdentityViolation,
    InconclusiveClassification,
    NotFromInitialSeed,
    NotMaximal,
    NotMutationAcyclic,
    TheoremViolation,
    UnsupportedDimension,
)
from .radical import check_radical_identity


def is_green_vertex(s: YSeed, k: int) -> bool:
    """True iff c_k is nonnegative (and non-zero)."""
    k0 = _check_index(k, s.n)
    return sign_of(s.c[k0]) == 1


def is_final(s: YSeed) -> bool:
    """True iff every c-vector is nonpositive."""
    return all(sign_of(v) == -1 for v in s.c)


def _replay(s0: YSeed, seq):
    """Replay seq from s0.

    Returns (green_valid, maximal, first_non_green, seeds) where seeds has
    the l+1 intermediate seeds and first_non_green is the 1-based step of
    the first non-green mutation (None when green_valid).
    """
    seeds = [s0]
    green_valid = True
    first_non_green = None
    s = s0
    for step, k in enumerate(seq, start=1):
        if green_valid and not is_green_vertex(s, k):
            green_valid = False
            first_non_green = step
        s = mutate_seed(s, k)
        seeds.append(s)
    maximal = green_valid and is_final(s)
    return green_valid, maximal, first_non_green, seeds


@dataclass(frozen=True)
class PassageReport:
    """Indices j along a maximal green sequence where Gamma(B_j) is acyclic."""

    holds: bool
    indices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"holds": self.holds, "indices": list(self.indices)}


def check_acyclic_passage(
    s0: YSeed, mgs, budget: int = DEFAULT_BUDGET
) -> PassageReport:
    """Check that some B_j along the maximal green sequence has an acyclic diagram.

    Requires a mutation-acyclic 3x3 seed and a verified MGS; an empty
    passage set raises TheoremViolation with the full trace.
    """
    if s0.n != 3:
        raise UnsupportedDimension(f"passage check requires n=3, got n={s0.n}")
    mgs = tuple(mgs)
    green_valid, maximal, _, seeds = _replay(s0, mgs)
    if not maximal:
        raise NotMaximal(f"sequence {list(mgs)} is not a maximal green sequence")
    verdict = classify_mutation_cyclicity(s0.b, budget)
    if verdict.kind == "Inconclusive":
        raise InconclusiveClassification(
            f"cyclicity undecided within budget {budget}"
        )
    if verdict.kind != "MutationAcyclic":
        raise NotMutationAcyclic("passage check applies to mutation-acyclic seeds")
    indices = tuple(
        j for j, s in enumerate(seeds) if not is_cyclic(_diagram_of_rows(s.b.entries))
    )
    if not indices:
        raise TheoremViolation(
            f"no acyclic diagram along maximal green sequence {list(mgs)}",
            trace=[s.b.entries for s in seeds],
        )
    return PassageReport(True, indices)


@dataclass(frozen=True)
class VerificationReport:
    """Replay record of a mutation sequence with per-step c-matrices."""

    sequence: tuple[int, ...]
    green_valid: bool
    maximal: bool
    first_non_green: int | None
    c_steps: tuple[tuple[Vector, ...], ...]
    audits: dict

    def to_dict(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "green_valid": self.green_valid,
            "maximal": self.maximal,
            "first_non_green": self.first_non_green,
            "c_steps": [[list(v) for v in c] for c in self.c_steps],
            "audits": self.audits,
        }

    def all_hold(self) -> bool:
        return self.green_valid and all(
            a.get("holds") is not False for a in self.audits.values()
            if isinstance(a, dict)
        )


def _theorem_audits(s0: YSeed, seq, maximal: bool, budget: int) -> dict:
    audits: dict = {}
    if s0.n != 3:
        return audits
    if not s0.has_initial_c():
        audits["skipped"] = "NotFromInitialSeed"
        return audits
    try:
        audits["radical_identity"] = check_radical_identity(seq, s0, budget).to_dict()
    except InconclusiveClassification:
        audits["radical_identity"] = {"holds": None, "skipped": "Inconclusive"}
    except IdentityViolation as exc:
        audits["radical_identity"] = {"holds": False, "error": str(exc)}
    if maximal:
        try:
            audits["acyclic_passage"] = check_acyclic_passage(s0, seq, budget).to_dict()
        except NotMutationAcyclic:
            audits["acyclic_passage"] = {"holds": None, "skipped": "NotMutationAcyclic"}
        except InconclusiveClassification:
            audits["acyclic_passage"] = {"holds": None, "skipped": "Inconclusive"}
        except TheoremViolation as exc:
            audits["acyclic_passage"] = {"holds": False, "error": str(exc)}
    return audits


def verify_sequence(
    s0: YSeed, seq, budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    """Replay seq and report green validity, maximality and theorem audits.

    Non-green mutations are replayed anyway (and flagged); only a sign
    coherence failure or a bad index aborts.
    """
    seq = tuple(int(k) for k in seq)
    green_valid, maximal, first_non_green, seeds = _replay(s0, seq)
    audits = _theorem_audits(s0, seq, maximal, budget)
    return VerificationReport(
        seq,
        green_valid,
        maximal,
        first_non_green,
        tuple(s.c for s in seeds),
        audits,
    )


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an MGS search, with theorem audits per found sequence."""

    mode: str  # "FirstFound" | "EnumerateAll"
    found: tuple[tuple[int, ...], ...]
    depth_limit: int
    exhausted: bool
    audits: tuple[dict, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "found": [list(seq) for seq in self.found],
            "depth_limit": self.depth_limit,
            "exhausted": self.exhausted,
            "audits": list(self.audits),
        }


def search_mgs(
    s0: YSeed,
    depth_limit: int,
    mode: str = "FirstFound",
    budget: int = DEFAULT_BUDGET,
) -> SearchReport:
    """Search the green-move tree for maximal green sequences.

    Moves at each state are exactly the green vertices, explored in
    ascending index.  FirstFound reports the single shortest (then
    lexicographically smallest) MGS; EnumerateAll reports every MGS of
    length <= depth_limit in exploration order.  exhausted is True iff no
    branch was cut by the depth limit while still having green moves.
    """
    if mode not in ("FirstFound", "EnumerateAll"):
        raise ValueError(f"unknown mode {mode!r}")
    if depth_limit < 0:
        raise ValueError("depth_limit must be >= 0")
    found: list[tuple[int, ...]] = []
    cut = False

    def dfs(c, rows, depth_left, prefix):
        nonlocal cut
        greens = [i for i, v in enumerate(c) if _sign_vector(v, prefix) == 1]
        if not greens:
            # No green vertex means every c-vector is negative: an MGS.
            found.append(prefix)
            return
        if depth_left == 0:
            cut = True
            return
        for k0 in greens:
            dfs(
                _mutate_cvectors(c, rows, k0, prefix),
                _mutate_matrix_rows(rows, k0),
                depth_left - 1,
                prefix + (k0 + 1,),
            )

    dfs(s0.c, s0.b.entries, depth_limit, ())
    if mode == "FirstFound":
        result = tuple(
            [min(found, key=lambda p: (len(p), p))] if found else []
        )
    else:
        result = tuple(found)
    audits = tuple(
        {"sequence": list(seq), **_theorem_audits(s0, seq, True, budget)}
        for seq in result
    )
    return SearchReport(mode, result, depth_limit, not cut, audits)
