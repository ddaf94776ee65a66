"""Shared oracles and corpus generators.

The naive_* functions are deliberately independent re-implementations of
the mutation formulas (straight from their definitions, no shortcuts) so
the production code is always checked against a second route.
"""

from fractions import Fraction
from math import gcd

from greenseq import ExchangeMatrix, YSeed, mutate_seed


def naive_mutate_matrix(rows, k):
    """Textbook matrix mutation, 1-based k, plain lists."""
    n = len(rows)
    k0 = k - 1
    pos = lambda x: max(x, 0)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k0 or j == k0:
                out[i][j] = -rows[i][j]
            else:
                out[i][j] = (
                    rows[i][j]
                    + pos(rows[i][k0]) * pos(rows[k0][j])
                    - pos(-rows[i][k0]) * pos(-rows[k0][j])
                )
    return out


def naive_sign(v):
    assert all(x >= 0 for x in v) or all(x <= 0 for x in v)
    return -1 if any(x < 0 for x in v) else 1


def naive_mutate_c(cvecs, rows, k):
    """Textbook c-vector mutation, 1-based k."""
    n = len(cvecs)
    k0 = k - 1
    s = naive_sign(cvecs[k0])
    pos = lambda x: max(x, 0)
    out = []
    for i in range(n):
        if i == k0:
            out.append([-x for x in cvecs[k0]])
        else:
            coeff = pos(s * rows[k0][i])
            out.append([x + coeff * y for x, y in zip(cvecs[i], cvecs[k0])])
    return out


def solve_coords(cvecs, target):
    """Solve sum_i a_i * c_i = target exactly; returns integer tuple or None.

    Independent oracle for the tracked coordinates: plain Gaussian
    elimination over Fractions on the 3x3 system.
    """
    n = len(target)
    aug = [
        [Fraction(cvecs[i][j]) for i in range(n)] + [Fraction(target[j])]
        for j in range(n)
    ]
    row = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(row, n) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        aug[row] = [x / aug[row][col] for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] != 0:
                aug[r] = [x - aug[r][col] * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    if row < n:
        return None
    sol = [aug[pivots.index(c)][n] for c in range(n)]
    if any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


def random_skew_symmetrizable_rows(rng, n, max_abs=3):
    """Random integer matrix with a positive diagonal symmetrizer d."""
    d = [rng.choice([1, 1, 1, 2, 3]) for _ in range(n)]
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(d[i], d[j])
            bound = min(max_abs * g // d[j], max_abs * g // d[i])
            x = rng.randint(-bound, bound) if bound > 0 else 0
            rows[i][j] = x * d[j] // g
            rows[j][i] = -x * d[i] // g
    return rows


def random_skew_symmetric_rows(rng, n, max_abs=3):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = rng.randint(-max_abs, max_abs)
            rows[i][j] = x
            rows[j][i] = -x
    return rows


def random_seed_on_path(rng, rows, max_len=5):
    """A random Y-seed in the pattern of rows: initial seed pushed along a path."""
    s = YSeed.initial(ExchangeMatrix(rows))
    for _ in range(rng.randint(0, max_len)):
        s = mutate_seed(s, rng.randint(1, s.n))
    return s


MARKOV = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))
TRIANGLE = ((0, 1, -1), (-1, 0, 1), (1, -1, 0))
A2 = ((0, 1), (-1, 0))
A3_PATH = ((0, -1, 0), (1, 0, -1), (0, 1, 0))


def cyclic_skew_symmetric_matrices(magnitudes):
    """All skew-symmetric 3x3 matrices whose diagram is an oriented 3-cycle
    with the three entry magnitudes drawn from the given set."""
    out = []
    for a in magnitudes:
        for b in magnitudes:
            for c in magnitudes:
                # cycle 1 -> 2 -> 3 -> 1: B21, B32, B13 > 0
                out.append(((0, -a, c), (a, 0, -b), (-c, b, 0)))
                # reversed orientation
                out.append(((0, a, -c), (-a, 0, b), (c, -b, 0)))
    return out
