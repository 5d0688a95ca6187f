"""Exact rank and determinant of integer matrices by fraction-free elimination.

Bareiss's algorithm: after each elimination step every entry is divided by
the previous pivot; all divisions are exact, so the arithmetic stays in the
integers and results are exact in characteristic zero.
"""

from __future__ import annotations


def int_rank(rows) -> int:
    """Rank over the rationals of an integer matrix (list of rows)."""
    m = [list(map(int, r)) for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = 1
    while rank < nr and rank < nc:
        # full pivot search in the remaining submatrix
        pr = pc = -1
        for i in range(rank, nr):
            for j in range(rank, nc):
                if m[i][j] != 0:
                    pr, pc = i, j
                    break
            if pr >= 0:
                break
        if pr < 0:
            break
        if pr != rank:
            m[pr], m[rank] = m[rank], m[pr]
        if pc != rank:
            for row in m:
                row[pc], row[rank] = row[rank], row[pc]
        piv = m[rank][rank]
        for i in range(rank + 1, nr):
            fac = m[i][rank]
            for j in range(rank + 1, nc):
                m[i][j] = (m[i][j] * piv - fac * m[rank][j]) // prev
            m[i][rank] = 0
        prev = piv
        rank += 1
    return rank


def int_det(mat) -> int:
    """Determinant of a square integer matrix."""
    m = [list(map(int, r)) for r in mat]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[i], m[k] = m[k], m[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            fac = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * piv - fac * m[k][j]) // prev
            m[i][k] = 0
        prev = piv
    return sign * m[n - 1][n - 1]
