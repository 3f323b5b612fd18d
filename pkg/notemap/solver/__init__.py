"""
Exact rational linear algebra for the interpolation systems
"""

from .elimination import cramer_solve_4x4, determinant, gaussian_solve
from .matrix import build_vandermonde, mat_vec, vandermonde_product

__all__ = [
    'build_vandermonde', 'mat_vec', 'vandermonde_product',
    'gaussian_solve', 'determinant', 'cramer_solve_4x4',
]
