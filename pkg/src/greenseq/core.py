"""Exact integer exchange matrices, skew-symmetrizers and Y-seed mutation.

All matrices and vectors are tuples of Python ints, so arithmetic is exact
at any magnitude.  Vertex indices in the public API are 1-based, matching
the usual labeling of the indices 1..n; the 0-based shift is internal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    IndexOutOfRange,
    InvalidSeedFile,
    NotSkewSymmetrizable,
    SignCoherenceViolation,
)

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def _freeze_matrix(entries) -> Matrix:
    rows = tuple(tuple(int(x) for x in row) for row in entries)
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise InvalidSeedFile("matrix must be square and non-empty")
    return rows


@dataclass(frozen=True)
class SkewSymmetrizer:
    """Positive integer diagonal d with d[i]*B[i][j] = -d[j]*B[j][i].

    Normalized so each connected block of the sign pattern has jointly
    coprime entries, which makes the value canonical and comparable.
    """

    d: Vector

    def __post_init__(self):
        if not self.d or any(x <= 0 for x in self.d):
            raise NotSkewSymmetrizable(f"diagonal must be positive: {self.d}")


def find_skew_symmetrizer(b) -> SkewSymmetrizer:
    """Return the normalized skew-symmetrizer of an integer matrix.

    Raises NotSkewSymmetrizable when the diagonal is non-zero, some pair
    B[i][j], B[j][i] does not have opposite signs, or the ratio constraints
    d[j] = d[i]*B[i][j]/(-B[j][i]) are inconsistent along cycles.
    """
    rows = _freeze_matrix(b)
    n = len(rows)
    for i in range(n):
        if rows[i][i] != 0:
            raise NotSkewSymmetrizable(f"non-zero diagonal entry at {i + 1}")
    for i in range(n):
        for j in range(i + 1, n):
            p, q = rows[i][j], rows[j][i]
            if (p == 0) != (q == 0) or p * q > 0:
                raise NotSkewSymmetrizable(
                    f"entries ({i + 1},{j + 1})={p} and ({j + 1},{i + 1})={q} "
                    "must be zero together or have opposite signs"
                )

    # Propagate d along the non-zero pattern; each connected component has
    # one free scale, fixed afterwards by clearing denominators and gcd.
    vals: list[Fraction | None] = [None] * n
    for root in range(n):
        if vals[root] is not None:
            continue
        vals[root] = Fraction(1)
        stack = [root]
        component = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if rows[i][j] == 0:
                    continue
                ratio = vals[i] * Fraction(rows[i][j], -rows[j][i])
                if vals[j] is None:
                    vals[j] = ratio
                    component.append(j)
                    stack.append(j)
                elif vals[j] != ratio:
                    raise NotSkewSymmetrizable(
                        f"inconsistent ratio constraints at ({i + 1},{j + 1})"
                    )
        scale = lcm(*(v.denominator for v in (vals[i] for i in component)))
        ints = [int(vals[i] * scale) for i in component]
        g = gcd(*ints)
        for i, v in zip(component, ints):
            vals[i] = Fraction(v // g)

    d = tuple(int(v) for v in vals)
    for i in range(n):
        for j in range(n):
            if d[i] * rows[i][j] != -d[j] * rows[j][i]:
                raise NotSkewSymmetrizable("no consistent positive diagonal")
    return SkewSymmetrizer(d)


@dataclass(frozen=True)
class ExchangeMatrix:
    """n x n integer matrix with zero diagonal and a skew-symmetrizer.

    Validity (including existence of the symmetrizer) is checked at
    construction; instances are immutable.
    """

    entries: Matrix

    def __post_init__(self):
        object.__setattr__(self, "entries", _freeze_matrix(self.entries))
        find_skew_symmetrizer(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def skew_symmetrizer(self) -> SkewSymmetrizer:
        return find_skew_symmetrizer(self.entries)

    def __getitem__(self, ij) -> int:
        """1-based entry access: m[i, j] = B_{i,j}."""
        i, j = ij
        return self.entries[i - 1][j - 1]


def _check_index(k: int, n: int) -> int:
    if not isinstance(k, int) or not 1 <= k <= n:
        raise IndexOutOfRange(f"vertex index {k} outside 1..{n}")
    return k - 1


def _mutate_matrix_rows(rows: Matrix, k0: int) -> Matrix:
    n = len(rows)
    rk = rows[k0]
    col = tuple(rows[i][k0] for i in range(n))
    out = []
    for i in range(n):
        ri = rows[i]
        if i == k0:
            out.append(tuple(-x for x in ri))
            continue
        bik = col[i]
        new = list(ri)
        new[k0] = -ri[k0]
        if bik > 0:
            for j in range(n):
                if j != k0 and rk[j] > 0:
                    new[j] = ri[j] + bik * rk[j]
        elif bik < 0:
            for j in range(n):
                if j != k0 and rk[j] < 0:
                    new[j] = ri[j] - bik * rk[j]
        out.append(tuple(new))
    return tuple(out)


def mutate_matrix(b: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at vertex k (1-based).

    B'_{ij} = -B_{ij} if i=k or j=k, else
    B_{ij} + [B_{ik}]_+ [B_{kj}]_+ - [-B_{ik}]_+ [-B_{kj}]_+.
    """
    k0 = _check_index(k, b.n)
    return ExchangeMatrix(_mutate_matrix_rows(b.entries, k0))


def _sign_vector(v: Vector, path=None) -> int:
    has_pos = any(x > 0 for x in v)
    has_neg = any(x < 0 for x in v)
    if has_pos and has_neg:
        raise SignCoherenceViolation(v, path)
    return -1 if has_neg else 1


def sign_of(c: Vector) -> int:
    """+1 for a nonnegative c-vector, -1 for a nonpositive one.

    Mixed signs raise SignCoherenceViolation; this is the runtime check of
    the (conjectural) sign coherence property.
    """
    v = tuple(int(x) for x in c)
    if not any(v):
        raise ValueError("sign of the zero vector is undefined")
    return _sign_vector(v)


def _mutate_cvectors(c: tuple[Vector, ...], rows: Matrix, k0: int, path=None):
    ck = c[k0]
    s = _sign_vector(ck, path)
    if s == 1 and not any(ck):
        raise ValueError("zero c-vector has no sign")
    rk = rows[k0]
    out = []
    for i, ci in enumerate(c):
        if i == k0:
            out.append(tuple(-x for x in ck))
        else:
            coeff = s * rk[i]
            if coeff > 0:
                out.append(tuple(x + coeff * y for x, y in zip(ci, ck)))
            else:
                out.append(ci)
    return tuple(out)


@dataclass(frozen=True)
class YSeed:
    """A pair (c, B): a tuple of n integer c-vectors and an exchange matrix."""

    c: tuple[Vector, ...]
    b: ExchangeMatrix

    def __post_init__(self):
        n = self.b.n
        c = tuple(tuple(int(x) for x in v) for v in self.c)
        if len(c) != n or any(len(v) != n for v in c):
            raise InvalidSeedFile(f"need {n} c-vectors of length {n}")
        if any(not any(v) for v in c):
            raise InvalidSeedFile("c-vectors must be non-zero")
        object.__setattr__(self, "c", c)

    @classmethod
    def initial(cls, b: ExchangeMatrix) -> "YSeed":
        """The initial Y-seed: standard basis c-vectors over b."""
        n = b.n
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), b)

    @property
    def n(self) -> int:
        return self.b.n

    def has_initial_c(self) -> bool:
        n = self.n
        return all(
            self.c[i][j] == (i == j) for i in range(n) for j in range(n)
        )


def mutate_seed(s: YSeed, k: int) -> YSeed:
    """Y-seed mutation at vertex k: c'_k = -c_k, c'_i = c_i + [sgn(c_k) B_{k,i}]_+ c_k."""
    k0 = _check_index(k, s.n)
    rows = s.b.entries
    c_new = _mutate_cvectors(s.c, rows, k0)
    return YSeed(c_new, ExchangeMatrix(_mutate_matrix_rows(rows, k0)))


def apply_sequence(s: YSeed, seq) -> YSeed:
    """Apply a 1-based mutation sequence left to right."""
    for k in seq:
        s = mutate_seed(s, k)
    return s


# --- seed file format ---------------------------------------------------
#
# {"n": int, "b": [[int]], "d": [int] (optional), "c": [[int]] (optional)}
# Row i of "c" is the c-vector c_i; "c" defaults to the standard basis.

def seed_from_dict(data) -> YSeed:
    if not isinstance(data, dict):
        raise InvalidSeedFile("seed file must be a JSON object")
    try:
        n = int(data["n"])
        b_rows = data["b"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSeedFile(f"missing or malformed field: {exc}") from exc
    try:
        b = ExchangeMatrix(b_rows)
    except (NotSkewSymmetrizable, InvalidSeedFile, TypeError, ValueError) as exc:
        raise InvalidSeedFile(f"invalid exchange matrix: {exc}") from exc
    if b.n != n:
        raise InvalidSeedFile(f'"n"={n} does not match a {b.n}x{b.n} matrix')
    if "d" in data and data["d"] is not None:
        claimed = tuple(int(x) for x in data["d"])
        if len(claimed) != n or any(x <= 0 for x in claimed):
            raise InvalidSeedFile(f'invalid "d": {list(claimed)}')
        for i in range(n):
            for j in range(n):
                if claimed[i] * b.entries[i][j] != -claimed[j] * b.entries[j][i]:
                    raise InvalidSeedFile(
                        f'"d"={list(claimed)} does not skew-symmetrize "b"'
                    )
    if "c" in data and data["c"] is not None:
        try:
            return YSeed(tuple(tuple(int(x) for x in row) for row in data["c"]), b)
        except (InvalidSeedFile, TypeError, ValueError) as exc:
            raise InvalidSeedFile(f'invalid "c": {exc}') from exc
    return YSeed.initial(b)


def seed_to_dict(s: YSeed) -> dict:
    """Canonical JSON-ready form, always including the computed "d"."""
    return {
        "n": s.n,
        "b": [list(row) for row in s.b.entries],
        "d": list(s.b.skew_symmetrizer().d),
        "c": [list(v) for v in s.c],
    }


def load_seed(path) -> YSeed:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidSeedFile(f"cannot read seed file {path}: {exc}") from exc
    return seed_from_dict(data)
