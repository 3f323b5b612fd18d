"""
Matrix construction for the interpolation systems

Rows of a Vandermonde matrix hold descending powers ``[s^M, ..., s, 1]``
so the unknown vector reads ``(c_M, ..., c_0)``.
"""

from fractions import Fraction
from typing import Sequence

from ..core.errors import DimensionMismatch
from ..core.models import RMatrix, RVector, as_rational


def build_vandermonde(nodes: Sequence, degree: int) -> RMatrix:
    """Build the (len(nodes)) x (degree + 1) system matrix; duplicate nodes allowed"""
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    rows = [[as_rational(s) ** p for p in range(degree, -1, -1)] for s in nodes]
    return RMatrix.from_rows(rows)


def mat_vec(a: RMatrix, x: RVector) -> RVector:
    """Exact product A . x"""
    if a.cols != len(x):
        raise DimensionMismatch(f"matrix has {a.cols} columns but vector has {len(x)} entries")
    return RVector(tuple(sum((a[i, j] * x[j] for j in range(a.cols)), Fraction(0)) for i in range(a.rows)))


def vandermonde_product(nodes: Sequence) -> Fraction:
    """prod_{i<j} (node_i - node_j): the determinant of the descending-power Vandermonde matrix"""
    values = [as_rational(s) for s in nodes]
    product = Fraction(1)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            product *= values[i] - values[j]
    return product
