"""Exact integer linear systems via unimodular column reduction.

Reduces the coefficient matrix to column echelon form (a Hermite-style
normal form) with extended-gcd column operations, tracking the transform so
a particular integer solution can be read off by forward substitution.
"""

from __future__ import annotations


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0 when (a, b) != (0, 0)."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def solve_integer(rows: list[list[int]], rhs: list[int]) -> list[int] | None:
    """Find an integer solution x of A x = b, or None if there is none.

    Free coordinates of the echelonised system are set to zero, so the result
    is deterministic for a given input.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if len(rhs) != m:
        raise ValueError("rhs length does not match row count")
    a = [list(row) for row in rows]
    for row in a:
        if len(row) != n:
            raise ValueError("ragged matrix")

    # Column operations on `a` are mirrored on `u`, so a_original @ u == a.
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def combine_cols(c1: int, c2: int, p: int, q: int, r: int, s: int) -> None:
        # (col c1, col c2) <- (p*c1 + q*c2, r*c1 + s*c2); p*s - q*r == +-1
        for mat in (a, u):
            for row in mat:
                v1, v2 = row[c1], row[c2]
                row[c1] = p * v1 + q * v2
                row[c2] = r * v1 + s * v2

    pivots: list[tuple[int, int]] = []
    col = 0
    for row_idx in range(m):
        if col >= n:
            break
        nonzero = [j for j in range(col, n) if a[row_idx][j] != 0]
        if not nonzero:
            continue
        j0 = nonzero[0]
        if j0 != col:
            for mat in (a, u):
                for row in mat:
                    row[col], row[j0] = row[j0], row[col]
        for j in nonzero[1:]:
            if j == j0:
                continue
            v1, v2 = a[row_idx][col], a[row_idx][j]
            if v2 == 0:
                continue
            p, q, g = xgcd(v1, v2)
            combine_cols(col, j, p, q, -(v2 // g), v1 // g)
        pivots.append((row_idx, col))
        col += 1

    # Forward substitution over pivot columns; divisibility failures mean no
    # integer solution along this branch, and the final exact check guards
    # against inconsistent non-pivot rows.
    y = [0] * n
    for row_idx, c in pivots:
        acc = rhs[row_idx]
        for _, c2 in pivots:
            if c2 >= c:
                break
            acc -= a[row_idx][c2] * y[c2]
        piv = a[row_idx][c]
        if acc % piv != 0:
            return None
        y[c] = acc // piv

    x = [sum(u[i][j] * y[j] for j in range(n)) for i in range(n)]
    for i, row in enumerate(rows):
        if sum(row[j] * x[j] for j in range(n)) != rhs[i]:
            return None
    return x
