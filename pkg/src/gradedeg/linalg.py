"""Small exact linear algebra over the rationals (and determinants over
polynomial rings via Bareiss elimination)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = [
    "SingularMatrixError",
    "as_matrix",
    "solve_linear",
    "rref",
    "rank",
    "nullspace",
    "bareiss_det",
    "matmul",
]


class SingularMatrixError(ArithmeticError):
    pass


def as_matrix(rows) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in r] for r in rows]
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("matrix rows have different lengths")
    return rows


def matmul(A, B):
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in zip(*B)] for row in A]


def bareiss_det(M, zero=0, one=1):
    """Fraction-free determinant.

    Works for any entries supporting ``+ - *`` and exact division ``/``
    (integers, Fractions, :class:`Polynomial`).
    """
    n = len(M)
    if n == 0:
        return one
    A = [list(r) for r in M]
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(A[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(A[i][k]):
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = _exact(num, prev)
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return -d if sign < 0 else d


def _is_zero(x) -> bool:
    return not x


def _exact(num, den):
    if isinstance(den, int) and den == 1:
        return num
    if hasattr(num, "exact_div"):
        if isinstance(den, (int, Fraction)):
            return num / den
        return num.exact_div(den)
    q = Fraction(num) / Fraction(den)
    return q


def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    A = as_matrix(rows)
    if not A:
        return [], []
    m, n = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}``, one vector per free column."""
    A = as_matrix(rows)
    if ncols is None:
        if not A:
            raise ValueError("column count needed for an empty matrix")
        ncols = len(A[0])
    R, piv = rref(A) if A else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, piv):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve_linear(A: Sequence[Sequence], c: Sequence) -> list[Fraction]:
    """Solve the square nonsingular system ``A x = c`` exactly."""
    A = as_matrix(A)
    n = len(A)
    if any(len(r) != n for r in A) or len(c) != n:
        raise ValueError("solve_linear needs a square system")
    if bareiss_det(A, Fraction(0), Fraction(1)) == 0:
        raise SingularMatrixError("matrix is singular")
    aug = [row + [Fraction(v)] for row, v in zip(A, c)]
    R, piv = rref(aug)
    return [R[i][n] for i in range(n)]
