"""Dense square matrices and a fraction-free (Bareiss) determinant.

Entries are exact rationals or polynomials, but never both: mixed input
is lifted to polynomials at construction.  Bareiss elimination keeps all
intermediate values in the ring (every division is exact), which is what
makes symbolic determinants feasible without rational-function blowup.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .poly import MPoly
from .rational import Scalar, as_exact


class SquareMatrix:
    """Immutable square matrix over exact rationals or over MPoly."""

    __slots__ = ("_rows", "_poly_mode")

    def __init__(self, rows: Sequence[Sequence["MPoly | Scalar"]]):
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise InputError("matrix is not square")
        poly_mode = any(isinstance(e, MPoly) for row in rows for e in row)
        if poly_mode:
            fixed = tuple(
                tuple(e if isinstance(e, MPoly) else MPoly.constant(e) for e in row)
                for row in rows
            )
        else:
            fixed = tuple(tuple(as_exact(e) for e in row) for row in rows)
        object.__setattr__(self, "_rows", fixed)
        object.__setattr__(self, "_poly_mode", poly_mode)

    @property
    def dimension(self) -> int:
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self._rows[i][j]

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self._rows
        )

    def det(self):
        return det(self)


def _is_zero(value) -> bool:
    if isinstance(value, MPoly):
        return value.is_zero()
    return value == 0


def _exact_div(value, divisor, poly_mode: bool):
    if not poly_mode:
        if isinstance(value, int) and isinstance(divisor, int):
            return as_exact(Fraction(value, divisor))
        return as_exact(value / divisor)
    if isinstance(divisor, int) and divisor == 1:
        return value
    return value.divexact(divisor)


def det(matrix: SquareMatrix):
    """Exact determinant by fraction-free Bareiss elimination.

    Row swaps handle vanishing pivots; the empty matrix has determinant 1.
    """
    n = matrix.dimension
    if n == 0:
        return 1
    work = [list(row) for row in matrix.rows]
    poly_mode = matrix._poly_mode
    zero = MPoly.zero() if poly_mode else 0
    sign = 1
    previous_pivot = 1
    for k in range(n - 1):
        if _is_zero(work[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(work[i][k]):
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = work[k][k]
        for i in range(k + 1, n):
            row_i = work[i]
            head = row_i[k]
            if _is_zero(head):
                for j in range(k + 1, n):
                    row_i[j] = _exact_div(pivot * row_i[j], previous_pivot, poly_mode)
            else:
                row_k = work[k]
                for j in range(k + 1, n):
                    row_i[j] = _exact_div(
                        pivot * row_i[j] - head * row_k[j], previous_pivot, poly_mode
                    )
        previous_pivot = pivot
    result = work[n - 1][n - 1]
    return result if sign == 1 else -result
