"""Exact matrix utilities: RREF, determinants, minors, twistors, moment curves.

Matrices are lists of row lists with int or Fraction entries. Nothing here knows
about marker sets; column relabeling under cyc/refl/pre is decided by callers.
"""

from fractions import Fraction
from math import comb

__all__ = [
    "rref", "row_span_equal", "det", "minor", "matmul",
    "matrix_cyc", "matrix_refl", "insert_zero_columns",
    "vandermonde_Z", "twistor", "bracket_evaluator", "row_supports",
]


def _as_fraction_rows(M):
    return [[Fraction(x) for x in row] for row in M]


def rref(M):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    R = _as_fraction_rows(M)
    if not R:
        return [], []
    rows, cols = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = R[r][c]
        R[r] = [x / inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def row_span_equal(A, B):
    """True when the two matrices have the same row span."""
    ra, pa = rref(A)
    rb, pb = rref(B)
    return pa == pb and ra == rb


def det(M):
    """Determinant: Bareiss on integer input, fraction elimination otherwise."""
    n = len(M)
    if n == 0:
        return 1
    if any(len(r) != n for r in M):
        raise ValueError("det of a non-square matrix")
    if all(isinstance(x, int) for row in M for x in row):
        return _det_bareiss([row[:] for row in M])
    A = _as_fraction_rows(M)
    sign = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if A[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            A[c], A[pr] = A[pr], A[c]
            sign = -sign
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / A[c][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    out = Fraction(sign)
    for i in range(n):
        out *= A[i][i]
    return out


def _det_bareiss(A):
    n = len(A)
    sign = 1
    prev = 1
    for c in range(n - 1):
        if A[c][c] == 0:
            pr = next((i for i in range(c + 1, n) if A[i][c] != 0), None)
            if pr is None:
                return 0
            A[c], A[pr] = A[pr], A[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                A[i][j] = (A[i][j] * A[c][c] - A[i][c] * A[c][j]) // prev
            A[i][c] = 0
        prev = A[c][c]
    return sign * A[n - 1][n - 1]


def minor(M, cols):
    """Maximal minor of a k x n matrix on the given column list (in order)."""
    return det([[row[c] for c in cols] for row in M])


def matmul(A, B):
    cols = len(B[0]) if B else 0
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matrix_cyc(M):
    """One cyclic shift: column n moves to the front scaled by (-1)^(k-1)."""
    k = len(M)
    s = -1 if (k - 1) % 2 else 1
    return [[s * row[-1]] + row[:-1] for row in M]


def matrix_refl(M):
    """Column reversal with one row scaled by (-1)^C(k,2)."""
    k = len(M)
    s = -1 if comb(k, 2) % 2 else 1
    out = [row[::-1] for row in M]
    if out and s == -1:
        out[0] = [-x for x in out[0]]
    return out


def insert_zero_columns(M, positions):
    """Insert zero columns so they land at the given (sorted) final indices."""
    k = len(M)
    if k == 0:
        return M
    width = len(M[0]) + len(positions)
    posset = set(positions)
    out = []
    for row in M:
        it = iter(row)
        out.append([0 if j in posset else next(it) for j in range(width)])
    return out


def vandermonde_Z(n, k, nodes=None):
    """Moment-curve Z: row i is (1, t_i, ..., t_i^(k+3)), totally positive."""
    if nodes is None:
        nodes = list(range(1, n + 1))
    if len(nodes) != n or any(nodes[i] >= nodes[i + 1] for i in range(n - 1)):
        raise ValueError("nodes must be strictly increasing and of length n")
    Z = [[t ** j for j in range(k + 4)] for t in nodes]
    if n <= 10:
        from itertools import combinations
        for rows in combinations(range(n), k + 4):
            if det([Z[i] for i in rows]) <= 0:
                raise ValueError("Z is not totally positive")
    return Z


def twistor(Y, Z, idx):
    """<<Y Z_i1 .. Z_i4>>: determinant of Y stacked over four Z rows (1-based)."""
    rows = [list(r) for r in Y] + [list(Z[i - 1]) for i in idx]
    return det(rows)


def bracket_evaluator(Y, Z):
    """Callable mapping a sorted 4-tuple symbol to its twistor value, cached."""
    cache = {}

    def value_of(sym):
        v = cache.get(sym)
        if v is None:
            v = twistor(Y, Z, sym)
            cache[sym] = v
        return v

    return value_of


def row_supports(M):
    """Support sizes of the rows of the RREF representative."""
    R, _ = rref(M)
    return [sum(1 for x in row if x != 0) for row in R]
