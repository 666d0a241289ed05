"""Exact Gaussian elimination over any field scalar.

Matrices are lists of row lists.  Integer entries are lifted to Fraction so
that division stays exact; other scalar types (prime-field elements) pass
through untouched and must support the four operations and int comparison.
"""

from __future__ import annotations

from fractions import Fraction


def _lift(x):
    return Fraction(x) if isinstance(x, int) else x


def _copy(rows):
    return [[_lift(x) for x in row] for row in rows]


def rref(rows) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    mat = _copy(rows)
    if not mat:
        return mat, []
    n_rows, n_cols = len(mat), len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((k for k in range(r, n_rows) if mat[k][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for k in range(n_rows):
            if k != r and mat[k][c] != 0:
                factor = mat[k][c]
                mat[k] = [a - factor * b for a, b in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return mat, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def det(rows):
    """Exact determinant by elimination with row-swap sign tracking."""
    mat = _copy(rows)
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    sign = 1
    for c in range(n):
        pivot_row = next((k for k in range(c, n) if mat[k][c] != 0), None)
        if pivot_row is None:
            return 0 * mat[0][0]
        if pivot_row != c:
            mat[c], mat[pivot_row] = mat[pivot_row], mat[c]
            sign = -sign
        for k in range(c + 1, n):
            if mat[k][c] != 0:
                factor = mat[k][c] / mat[c][c]
                mat[k] = [a - factor * b for a, b in zip(mat[k], mat[c])]
    result = mat[0][0]
    for c in range(1, n):
        result = result * mat[c][c]
    return result if sign > 0 else -result


def kernel_basis(rows) -> list[list]:
    """A basis of the right null space; empty when the kernel is trivial.

    Each vector has a 1 in one free column and the negated reduced entries in
    the pivot columns, so the basis is exact and deterministic.
    """
    if not rows:
        return []
    n_cols = len(rows[0])
    mat, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        vec: list = [0] * n_cols
        vec[f] = 1
        for r, c in enumerate(pivots):
            if mat[r][f] != 0:
                vec[c] = -mat[r][f]
        basis.append(vec)
    return basis
