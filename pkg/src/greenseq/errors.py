"""Exception hierarchy.

Violations of the checked mathematical properties (sign coherence, lemma
predictions, the radical identity, positivity) are first-class errors that
carry enough context to reproduce the offending mutation path.
"""


class GreenSeqError(Exception):
    """Base class for all errors raised by this package."""


class NotSkewSymmetrizable(GreenSeqError):
    """No positive integer diagonal D makes D*B skew-symmetric."""


class IndexOutOfRange(GreenSeqError):
    """Vertex index outside 1..n."""


class SignCoherenceViolation(GreenSeqError):
    """A c-vector with entries of both signs was encountered.

    Sign coherence is assumed, not proved; hitting this means either a
    genuine counterexample or an out-of-scope input.  The offending vector
    and, when known, the mutation path are attached.
    """

    def __init__(self, vector, path=None):
        self.vector = tuple(vector)
        self.path = tuple(path) if path is not None else None
        msg = f"c-vector {self.vector} has entries of both signs"
        if self.path is not None:
            msg += f" (path {list(self.path)})"
        super().__init__(msg)


class UnsupportedDimension(GreenSeqError):
    """Operation only defined for 3x3 matrices."""


class ZeroMatrix(GreenSeqError):
    """The zero matrix has no canonical radical vector."""


class InvalidSeedFile(GreenSeqError):
    """Seed JSON is malformed or internally inconsistent."""


class InconclusiveClassification(GreenSeqError):
    """Cyclicity classifier ran out of budget before reaching a verdict."""


class NotMutationCyclic(GreenSeqError):
    """A no-MGS certificate was requested for a non-mutation-cyclic seed."""


class NotMutationAcyclic(GreenSeqError):
    """Acyclic-passage check requested for a non-mutation-acyclic seed."""


class NotMaximal(GreenSeqError):
    """Acyclic-passage check requested for a sequence that is not an MGS."""


class NotFromInitialSeed(GreenSeqError):
    """Theorem audits need the standard-basis initial c-vectors."""


class LemmaMismatch(GreenSeqError):
    """Tracked coordinates disagree with the lemma-predicted value."""

    def __init__(self, seed, k, path, actual, predicted):
        self.seed = seed
        self.k = k
        self.path = tuple(path) if path is not None else None
        self.actual = tuple(actual)
        self.predicted = tuple(predicted)
        super().__init__(
            f"tracked coordinates {self.actual} != predicted {self.predicted} "
            f"at k={k} (path {list(self.path) if self.path else []})"
        )


class IdentityViolation(GreenSeqError):
    """The radical-vector identity failed at some step of a replay."""

    def __init__(self, step, lhs, rhs, path=None):
        self.step = step
        self.lhs = tuple(lhs)
        self.rhs = tuple(rhs)
        self.path = tuple(path) if path is not None else None
        super().__init__(
            f"radical identity failed at step {step}: {self.lhs} != +/-{self.rhs}"
        )


class PositivityViolation(GreenSeqError):
    """Tracked radical coordinates stopped being strictly positive."""

    def __init__(self, path, coords):
        self.path = tuple(path)
        self.coords = tuple(coords)
        super().__init__(
            f"tracked coordinates {self.coords} not strictly positive "
            f"after path {list(self.path)}"
        )


class TheoremViolation(GreenSeqError):
    """A checked theorem consequence failed; carries the full trace."""

    def __init__(self, message, trace=None):
        self.trace = trace
        super().__init__(message)
