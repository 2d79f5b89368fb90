"""Exact Gaussian elimination over the rationals.

Pivoting is fully deterministic: columns are scanned left to right and the
first row with a nonzero entry wins. Everything returns Fractions/ints.
"""

from __future__ import annotations

from fractions import Fraction

from .rationals import canon


def rref(rows, ncols):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_cols). Input rows are not modified. Zero
    rows are dropped.
    """
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = work[r][c]
        work[r] = [v / pv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [row for row in work[:r]], pivots


def matrix_rank(rows, ncols=None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    _, pivots = rref(rows, ncols)
    return len(pivots)


def kernel_vector(rows, ncols):
    """One nonzero kernel vector of the row system, or None if the kernel is {0}.

    The first free column (lowest index) is set to 1 and all other free
    columns to 0, so the result is deterministic.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    if not free:
        return None
    f = free[0]
    vec = [Fraction(0)] * ncols
    vec[f] = Fraction(1)
    for row, c in zip(reduced, pivots):
        vec[c] = -row[f]
    return tuple(canon(v) for v in vec)


def affine_rank(points) -> int:
    """Dimension of the affine hull of the given points (0 for a single point)."""
    pts = list(points)
    if len(pts) <= 1:
        return 0
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    return matrix_rank(diffs, len(base))
