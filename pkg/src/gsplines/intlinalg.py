"""Exact integer linear algebra: solve ``A y = b`` over Z.

The matrix is brought to lower column-echelon (Hermite-style) form ``H = A U``
by unimodular column operations, so integral solutions of ``A y = b``
correspond one-to-one to integral solutions of ``H z = b`` via ``y = U z``.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

Matrix = List[List[int]]


def xgcd(a: int, b: int) -> tuple:
    """Return ``(g, s, t)`` with ``g = s*a + t*b = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def column_echelon(A: Sequence[Sequence[int]]) -> tuple:
    """Reduce ``A`` (rows x cols) to column-echelon form.

    Returns ``(H, U, pivots)`` where ``H = A U``, ``U`` is unimodular, and
    ``pivots`` lists ``(row, col)`` for each pivot; pivot columns are
    ``0..rank-1`` and every entry of ``H`` to the right of a pivot in its row
    is zero.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    H = [list(r) for r in A]
    U = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def combine(k: int, j: int, s: int, t: int, u: int, v: int) -> None:
        # col_k, col_j <- s*col_k + t*col_j, u*col_k + v*col_j
        for M in (H, U):
            for row in M:
                a, b = row[k], row[j]
                row[k], row[j] = s * a + t * b, u * a + v * b

    pivots = []
    k = 0
    for i in range(rows):
        if k >= cols:
            break
        for j in range(k + 1, cols):
            b = H[i][j]
            if b == 0:
                continue
            a = H[i][k]
            g, s, t = xgcd(a, b)
            combine(k, j, s, t, -b // g, a // g)
        if H[i][k] == 0:
            continue
        if H[i][k] < 0:
            for M in (H, U):
                for row in M:
                    row[k] = -row[k]
        # reduce earlier pivot columns' entries in this row into [0, pivot)
        p = H[i][k]
        for j in range(k):
            q = H[i][j] // p
            if q:
                for M in (H, U):
                    for row in M:
                        row[j] -= q * row[k]
        pivots.append((i, k))
        k += 1
    return H, U, pivots


def solve_integer_system(A: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[List[int]]:
    """Find one integral ``y`` with ``A y = b``, or return None if none exists."""
    rows = len(A)
    if rows == 0:
        return []
    cols = len(A[0])
    H, U, pivots = column_echelon(A)
    z = [0] * cols
    pivot_row = {i: k for i, k in pivots}
    for i in range(rows):
        acc = sum(H[i][j] * z[j] for j in range(cols) if z[j])
        if i in pivot_row:
            k = pivot_row[i]
            q, r = divmod(b[i] - acc, H[i][k])
            if r:
                return None
            z[k] = q
        elif acc != b[i]:
            return None
    return [sum(U[r][c] * z[c] for c in range(cols)) for r in range(cols)]
