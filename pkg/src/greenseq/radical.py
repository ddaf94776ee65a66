"""Radical vectors of 3x3 exchange matrices and coordinate tracking.

For B with skew-symmetrizer d, the signed triple
(d2*B23, d3*B31, d1*B12) always satisfies B*u = 0 (it is, up to sign, the
kernel generator of the skew-symmetric matrix D*B).  The public
radical_vector normalizes its sign by the shape of the diagram; the
coordinate-tracking operations express a fixed ambient vector in the
moving c-vector basis and cross-check each step against the closed-form
prediction, which is the executable content of the no-MGS certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ExchangeMatrix,
    Matrix,
    Vector,
    YSeed,
    _check_index,
    _mutate_cvectors,
    _mutate_matrix_rows,
    _sign_vector,
    find_skew_symmetrizer,
    mutate_seed,
)
from .diagram import (
    DEFAULT_BUDGET,
    _diagram_of_rows,
    classify_mutation_cyclicity,
    is_cyclic,
    sources_and_sinks,
)
from .errors import (
    IdentityViolation,
    InconclusiveClassification,
    LemmaMismatch,
    NotFromInitialSeed,
    NotMutationCyclic,
    PositivityViolation,
    UnsupportedDimension,
    ZeroMatrix,
)


@dataclass(frozen=True)
class RadicalVector:
    """An integer kernel vector of B with its sign-convention tag."""

    coords: Vector
    convention_tag: str  # "Cyclic" | "AcyclicCanonical" | "KernelFallback"

    def to_dict(self) -> dict:
        return {"coords": list(self.coords), "convention_tag": self.convention_tag}


def _signed_kernel_triple(rows: Matrix, d: Vector) -> Vector:
    """(d2*B23, d3*B31, d1*B12); a radical vector of B, zero only for B=0."""
    return (d[1] * rows[1][2], d[2] * rows[2][0], d[0] * rows[0][1])


def radical_vector(b: ExchangeMatrix, d=None) -> RadicalVector:
    """The canonical radical vector u(B) of a non-zero 3x3 matrix.

    Cyclic diagram: all coordinates positive.  Acyclic with a unique
    source and sink: source coordinate positive (source and sink share a
    sign, the middle coordinate is opposite).  Degenerate acyclic shapes
    (two sources, two sinks, or at most one edge): first non-zero
    coordinate positive, tagged KernelFallback.
    """
    if b.n != 3:
        raise UnsupportedDimension(f"radical vector requires n=3, got n={b.n}")
    rows = b.entries
    if all(x == 0 for row in rows for x in row):
        raise ZeroMatrix("the zero matrix has no canonical radical vector")
    dd = tuple(d.d) if d is not None else find_skew_symmetrizer(rows).d
    v = _signed_kernel_triple(rows, dd)
    g = _diagram_of_rows(rows)
    if is_cyclic(g):
        coords = tuple(abs(x) for x in v)
        tag = "Cyclic"
    else:
        sources, sinks = sources_and_sinks(g)
        if len(g.edges) >= 2 and len(sources) == 1 and len(sinks) == 1:
            (src,) = sources
            coords = v if v[src - 1] > 0 else tuple(-x for x in v)
            tag = "AcyclicCanonical"
        else:
            first = next(x for x in v if x != 0)
            coords = v if first > 0 else tuple(-x for x in v)
            tag = "KernelFallback"
    assert all(
        sum(rows[i][j] * coords[j] for j in range(3)) == 0 for i in range(3)
    ), f"B*u != 0 for B={rows}, u={coords}"
    return RadicalVector(coords, tag)


def _coordinate_change_raw(a, c, rows: Matrix, k0: int, path=None):
    s = _sign_vector(c[k0], path)
    acc = -a[k0]
    rk = rows[k0]
    for i in range(len(a)):
        if i != k0:
            coeff = s * rk[i]
            if coeff > 0:
                acc += a[i] * coeff
    out = list(a)
    out[k0] = acc
    return tuple(out)


def coordinate_change(a, s: YSeed, k: int) -> Vector:
    """Coordinates of a fixed ambient vector after mutating the c-basis at k.

    a'_i = a_i for i != k;  a'_k = -a_k + sum_{i != k} a_i [sgn(c_k) B_{k,i}]_+.
    """
    k0 = _check_index(k, s.n)
    return _coordinate_change_raw(tuple(int(x) for x in a), s.c, s.b.entries, k0)


def _first_sign(values, default=1):
    for x in values:
        if x:
            return 1 if x > 0 else -1
    return default


def _predict_raw(a, rows: Matrix, d: Vector, k0: int) -> Vector:
    """Closed-form prediction for the tracked coordinates after mutating at k.

    Cyclic diagram: the new coordinates are the kernel-triple magnitudes of
    the mutated matrix (k-th coordinate negated when the mutation leaves
    the cyclic regime), carrying the overall sign of a.  Acyclic diagram:
    mutating a source, sink or isolated vertex only negates the k-th
    coordinate; mutating the middle vertex re-enters the cyclic form with
    the sign of the untouched coordinates.
    """
    g = _diagram_of_rows(rows)
    rows2 = _mutate_matrix_rows(rows, k0)
    mags2 = tuple(abs(x) for x in _signed_kernel_triple(rows2, d))
    if is_cyclic(g):
        eps = _first_sign(a)
        pred = [eps * m for m in mags2]
        if not is_cyclic(_diagram_of_rows(rows2)):
            pred[k0] = -pred[k0]
        return tuple(pred)
    has_in = any(rows[k0][i] > 0 for i in range(3) if i != k0)
    has_out = any(rows[i][k0] > 0 for i in range(3) if i != k0)
    if has_in and has_out:
        eps = _first_sign(a[i] for i in range(3) if i != k0)
        return tuple(eps * m for m in mags2)
    out = list(a)
    out[k0] = -out[k0]
    return tuple(out)


def track_step(a, s: YSeed, k: int, path=None) -> tuple[Vector, Vector]:
    """One tracking step: (coordinate_change result, lemma-predicted value).

    The two components must agree; a difference raises LemmaMismatch with
    the full context, since it would falsify either the implementation or
    the preconditions on a.
    """
    if s.n != 3:
        raise UnsupportedDimension(f"track_step requires n=3, got n={s.n}")
    k0 = _check_index(k, 3)
    a = tuple(int(x) for x in a)
    d = find_skew_symmetrizer(s.b.entries).d
    actual = _coordinate_change_raw(a, s.c, s.b.entries, k0, path)
    predicted = _predict_raw(a, s.b.entries, d, k0)
    if actual != predicted:
        raise LemmaMismatch(s, k, path or (), actual, predicted)
    return actual, predicted


@dataclass(frozen=True)
class IdentityReport:
    """Per-step audit of the radical-vector identity along a replay."""

    holds: bool
    signs: tuple[str, ...]  # "+" or "-" at steps 0..l
    sign: str  # "+", "-", or "mixed-by-step"
    mutation_cyclic: bool
    path: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"holds": self.holds, "sign": self.sign, "signs": list(self.signs)}


def _summarize_signs(signs) -> str:
    uniq = set(signs)
    if uniq <= {"+"}:
        return "+"
    if uniq == {"-"}:
        return "-"
    return "mixed-by-step"


def check_radical_identity(
    path, s0: YSeed, budget: int = DEFAULT_BUDGET
) -> IdentityReport:
    """Replay path and audit a'*c'_1 + b'*c'_2 + c'*c'_3 = +/- u(B_0) at each step.

    For a mutation-cyclic B_0 the sign must be + at every step; any
    discrepancy raises IdentityViolation with the step and both sides.
    """
    if s0.n != 3:
        raise UnsupportedDimension(f"identity audit requires n=3, got n={s0.n}")
    if not s0.has_initial_c():
        raise NotFromInitialSeed("identity audit needs standard-basis c-vectors")
    path = tuple(path)
    verdict = classify_mutation_cyclicity(s0.b, budget)
    if verdict.kind == "Inconclusive":
        raise InconclusiveClassification(
            f"cyclicity of B_0 undecided within budget {budget}"
        )
    cyclic_class = verdict.kind == "MutationCyclic"
    u0 = radical_vector(s0.b).coords
    neg_u0 = tuple(-x for x in u0)
    s = s0
    signs = []
    for step in range(len(path) + 1):
        u = radical_vector(s.b).coords
        lhs = tuple(
            sum(u[i] * s.c[i][j] for i in range(3)) for j in range(3)
        )
        if lhs == u0:
            signs.append("+")
        elif lhs == neg_u0:
            signs.append("-")
        else:
            raise IdentityViolation(step, lhs, u0, path)
        if cyclic_class and signs[-1] != "+":
            raise IdentityViolation(step, lhs, u0, path)
        if step < len(path):
            s = mutate_seed(s, path[step])
    return IdentityReport(True, tuple(signs), _summarize_signs(signs), cyclic_class, path)


@dataclass(frozen=True)
class NoMgsCertificate:
    """Certificate that a mutation-cyclic seed admits no maximal green sequence.

    u0 has strictly positive coordinates and is radical for B_0; along any
    mutation path the tracked coordinates of u0 stay strictly positive, so
    u0 = sum a_i c'_i with a_i > 0 can never have all c'_i negative while
    its initial coordinates are positive.  replay() machine-checks this on
    any supplied path.
    """

    seed: YSeed
    u0: RadicalVector
    statement: str

    def replay(self, path) -> list[Vector]:
        """Track u0 along path; returns the coordinates at every step.

        Raises PositivityViolation as soon as a coordinate fails to be
        strictly positive, LemmaMismatch if the tracking disagrees with the
        closed-form prediction.
        """
        path = tuple(path)
        s = self.seed
        a = self.u0.coords
        trace = [a]
        for i, k in enumerate(path):
            a, _ = track_step(a, s, k, path[: i + 1])
            if any(x <= 0 for x in a):
                raise PositivityViolation(path[: i + 1], a)
            s = mutate_seed(s, k)
            trace.append(a)
        return trace

    def replay_all(self, length: int) -> int:
        """Check every mutation path of the given length; returns the count."""
        rows = self.seed.b.entries
        d = find_skew_symmetrizer(rows).d
        c0 = self.seed.c
        count = 0

        def walk(c, rows, a, depth, prefix):
            nonlocal count
            if depth == 0:
                count += 1
                return
            for k0 in range(3):
                a2 = _coordinate_change_raw(a, c, rows, k0, prefix)
                pred = _predict_raw(a, rows, d, k0)
                if a2 != pred:
                    raise LemmaMismatch(self.seed, k0 + 1, prefix, a2, pred)
                if any(x <= 0 for x in a2):
                    raise PositivityViolation(prefix + (k0 + 1,), a2)
                c2 = _mutate_cvectors(c, rows, k0, prefix)
                walk(c2, _mutate_matrix_rows(rows, k0), a2, depth - 1, prefix + (k0 + 1,))

        walk(c0, rows, self.u0.coords, length, ())
        return count

    def to_dict(self) -> dict:
        return {
            "u0": self.u0.to_dict(),
            "statement": self.statement,
        }


def certify_no_mgs(s0: YSeed, budget: int = DEFAULT_BUDGET) -> NoMgsCertificate:
    """Build the no-MGS certificate for a mutation-cyclic 3x3 seed."""
    if s0.n != 3:
        raise UnsupportedDimension(f"certificate requires n=3, got n={s0.n}")
    if not s0.has_initial_c():
        raise NotFromInitialSeed("certificate needs standard-basis c-vectors")
    verdict = classify_mutation_cyclicity(s0.b, budget)
    if verdict.kind == "Inconclusive":
        raise InconclusiveClassification(
            f"cyclicity undecided within budget {budget}"
        )
    if verdict.kind != "MutationCyclic":
        raise NotMutationCyclic("seed is mutation-acyclic; no certificate applies")
    u0 = radical_vector(s0.b)
    assert u0.convention_tag == "Cyclic" and all(x > 0 for x in u0.coords)
    statement = (
        "u0 is a radical vector with strictly positive coordinates; its "
        "tracked coordinates stay strictly positive along every mutation "
        "path, so the c-vectors can never all be negative at once and no "
        "maximal green sequence exists."
    )
    return NoMgsCertificate(s0, u0, statement)
