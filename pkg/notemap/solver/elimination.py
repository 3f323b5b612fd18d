"""
Exact Gaussian elimination, determinants and Cramer's rule over Fractions
"""

from fractions import Fraction
from typing import List, Optional, Sequence

from ..core.errors import DimensionMismatch, NotFourByFour, NotSquare, SingularMatrix
from ..core.models import RMatrix, RVector, SolveKind, SolveOutcome
from ..utils.logger import get_logger

logger = get_logger(__name__)


def gaussian_solve(a: RMatrix, b: RVector, column_order: Optional[Sequence[int]] = None) -> SolveOutcome:
    """Classify and solve A x = b by Gauss-Jordan elimination

    Columns are visited right to left by default. With descending-power
    Vandermonde columns this puts pivots on the low powers first, so any free
    parameters fall on the highest powers and are pinned to zero.
    """
    if a.rows != len(b):
        raise DimensionMismatch(f"matrix has {a.rows} rows but right-hand side has {len(b)} entries")

    order = list(column_order) if column_order is not None else list(range(a.cols - 1, -1, -1))
    if sorted(order) != list(range(a.cols)):
        raise ValueError("column order must be a permutation of the matrix columns")

    # Augmented rows; the right-hand side sits at index a.cols
    rows: List[List[Fraction]] = [a.row(i) + [b[i]] for i in range(a.rows)]
    pivots = {}
    next_row = 0

    for col in order:
        pivot_row = next((r for r in range(next_row, a.rows) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[next_row], rows[pivot_row] = rows[pivot_row], rows[next_row]

        pivot = rows[next_row][col]
        rows[next_row] = [v / pivot for v in rows[next_row]]
        for r in range(a.rows):
            if r != next_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [v - factor * p for v, p in zip(rows[r], rows[next_row])]

        logger.debug(f"pivot column {col} at row {next_row}")
        pivots[col] = next_row
        next_row += 1
        if next_row == a.rows:
            break

    rank = len(pivots)

    # A zero row with a nonzero right-hand side reads 0 = nonzero
    for r in range(rank, a.rows):
        if rows[r][a.cols] != 0:
            return SolveOutcome(kind=SolveKind.INCONSISTENT, rank=rank)

    solution = [Fraction(0)] * a.cols
    for col, r in pivots.items():
        solution[col] = rows[r][a.cols]

    free_columns = tuple(c for c in range(a.cols) if c not in pivots)
    kind = SolveKind.UNIQUE if not free_columns else SolveKind.UNDERDETERMINED
    return SolveOutcome(kind=kind, rank=rank, solution=RVector(tuple(solution)), free_columns=free_columns)


def _cofactor_determinant(rows: List[List[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        sign = 1 if j % 2 == 0 else -1
        total += sign * rows[0][j] * _cofactor_determinant(minor)
    return total


def _elimination_determinant(rows: List[List[Fraction]]) -> Fraction:
    n = len(rows)
    rows = [list(r) for r in rows]
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det *= pivot
        for r in range(col + 1, n):
            if rows[r][col] != 0:
                factor = rows[r][col] / pivot
                rows[r] = [v - factor * p for v, p in zip(rows[r], rows[col])]
    return det


def determinant(a: RMatrix) -> Fraction:
    """Exact determinant: cofactor expansion up to 3x3, elimination beyond"""
    if not a.is_square:
        raise NotSquare(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    if a.rows <= 3:
        return _cofactor_determinant(a.to_rows())
    return _elimination_determinant(a.to_rows())


def cramer_solve_4x4(a: RMatrix, b: RVector) -> RVector:
    """x_i = det(A with column i replaced by b) / det(A)"""
    if a.rows != 4 or a.cols != 4:
        raise NotFourByFour(f"Cramer path handles 4x4 systems, got {a.rows}x{a.cols}")
    if len(b) != 4:
        raise DimensionMismatch(f"right-hand side must have 4 entries, got {len(b)}")

    det = determinant(a)
    if det == 0:
        raise SingularMatrix("matrix is singular")

    return RVector(tuple(determinant(a.with_column(i, b.entries)) / det for i in range(4)))
