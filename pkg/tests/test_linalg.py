"""Exact linear algebra: RREF, determinants, minor transport, moment curves."""

from fractions import Fraction
from itertools import combinations, permutations

import pytest

from amplitile.linalg import (
    bracket_evaluator, det, insert_zero_columns, matmul, matrix_cyc,
    matrix_refl, minor, row_span_equal, row_supports, rref, twistor,
    vandermonde_Z,
)
from amplitile.rng import stream


def rand_matrix(rng, rows, cols, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def det_by_permutations(M):
    n = len(M)
    total = 0
    for p in permutations(range(n)):
        sgn = 1
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            j, ln = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                ln += 1
            if ln % 2 == 0:
                sgn = -sgn
        term = sgn
        for i in range(n):
            term *= M[i][p[i]]
        total += term
    return total


def test_det_matches_permanent_expansion():
    rng = stream(11, "linalg", "det")
    for n in range(1, 5):
        for _ in range(10):
            M = rand_matrix(rng, n, n)
            assert det(M) == det_by_permutations(M)
            F = [[Fraction(x, 3) for x in row] for row in M]
            assert det(F) == Fraction(det_by_permutations(M), 3 ** n)


def test_cauchy_binet():
    rng = stream(11, "linalg", "cb")
    for _ in range(100):
        k = rng.randint(1, 3)
        n = rng.randint(k, k + 3)
        A = rand_matrix(rng, k, n, -5, 5)
        B = rand_matrix(rng, n, k, -5, 5)
        lhs = det(matmul(A, B))
        rhs = sum(minor(A, S) * det([B[i] for i in S])
                  for S in combinations(range(n), k))
        assert lhs == rhs


def test_rref_and_row_span():
    rng = stream(11, "linalg", "rref")
    for _ in range(20):
        k, n = 3, 6
        M = rand_matrix(rng, k, n)
        R, piv = rref(M)
        for r, c in zip(R, piv):
            assert r[c] == 1
        # row operations keep the span
        M2 = [
            [a + 2 * b for a, b in zip(M[0], M[1])],
            [3 * x for x in M[1]],
            M[2],
        ]
        assert row_span_equal(M, M2)
        M3 = [M[0], M[1], [x + 1 for x in M[2]]]
        if not row_span_equal(M, M3):
            assert rref(M3) != (R, piv)


def test_matrix_cyc_minor_transport():
    rng = stream(11, "linalg", "cyc")
    for k in (1, 2, 3):
        n = 6
        M = rand_matrix(rng, k, n)
        C = matrix_cyc(M)
        for I in combinations(range(1, n + 1), k):
            J = tuple(sorted((i - 2) % n + 1 for i in I))
            assert minor(C, [i - 1 for i in I]) == minor(M, [j - 1 for j in J])


def test_matrix_cyc_n_is_identity_on_minors():
    rng = stream(11, "linalg", "cycn")
    for k in (1, 2, 3, 4):
        n = 7
        M = rand_matrix(rng, k, n)
        C = M
        for _ in range(n):
            C = matrix_cyc(C)
        assert row_span_equal(C, M)
        for I in combinations(range(n), k):
            assert minor(C, list(I)) == minor(M, list(I))


def test_matrix_refl_involution_and_transport():
    rng = stream(11, "linalg", "refl")
    for k in (1, 2, 3, 4):
        n = 7
        M = rand_matrix(rng, k, n)
        assert matrix_refl(matrix_refl(M)) == M
        R = matrix_refl(M)
        for I in combinations(range(1, n + 1), k):
            J = tuple(sorted(n + 1 - i for i in I))
            assert minor(R, [i - 1 for i in I]) == minor(M, [j - 1 for j in J])


def test_insert_zero_columns():
    M = [[1, 2], [3, 4]]
    out = insert_zero_columns(M, [1, 3])
    assert out == [[1, 0, 2, 0], [3, 0, 4, 0]]
    assert insert_zero_columns(M, []) == M


def test_vandermonde_total_positivity():
    for n, k in [(5, 1), (6, 2), (8, 2)]:
        Z = vandermonde_Z(n, k)
        assert len(Z) == n and len(Z[0]) == k + 4
        for rows in combinations(range(n), k + 4):
            assert det([Z[i] for i in rows]) > 0
    with pytest.raises(ValueError):
        vandermonde_Z(4, 1, nodes=[3, 2, 1, 4])


def test_twistor_and_bracket_evaluator():
    rng = stream(11, "linalg", "twist")
    n, k = 7, 2
    Z = vandermonde_Z(n, k)
    Y = rand_matrix(rng, k, k + 4)
    ev = bracket_evaluator(Y, Z)
    for idx in combinations(range(1, n + 1), 4):
        direct = det([list(r) for r in Y] + [Z[i - 1] for i in idx])
        assert twistor(Y, Z, idx) == direct
        assert ev(idx) == direct
        assert ev(idx) == direct  # cached path


def test_row_supports():
    M = [[1, 0, 2, 0], [0, 1, 0, 0]]
    assert row_supports(M) == [2, 1]
