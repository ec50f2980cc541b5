"""Gaussian elimination over any exact field (Fraction, NFElement, ...)."""

from __future__ import annotations

from .errors import NotInvertible


def row_echelon(rows):
    """Return (reduced rows, pivot columns). Entries need +, -, *, / and truthiness."""
    a = [list(r) for r in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(rows) -> int:
    return len(row_echelon(rows)[1])


def solve(matrix, rhs):
    """Unique solution x of matrix @ x = rhs for a square nonsingular matrix."""
    n = len(matrix)
    aug = [list(r) + [b] for r, b in zip(matrix, rhs)]
    red, pivots = row_echelon(aug)
    if pivots != list(range(n)):
        raise NotInvertible("singular linear system")
    return [red[i][n] for i in range(n)]
