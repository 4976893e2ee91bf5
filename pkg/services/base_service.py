"""
Base service class with common functionality

Provides shared guards and enumeration helpers for all services.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import lcm
from typing import Iterator, List, Optional, Sequence, Tuple

from semiring import Kind, TropScalar, tprod
from tensor import TropMatrix
from validators import MatrixValidator


class BaseService:
    """Base service with common matrix helpers"""

    @staticmethod
    def require_square(matrix: TropMatrix, operation: str) -> int:
        """
        Validate that a matrix is square

        Returns:
            The order n
        """
        MatrixValidator.validate_square(matrix, operation)
        return matrix.n

    @staticmethod
    def iter_permutations(n: int) -> Iterator[Tuple[int, ...]]:
        """All permutations of 1..n in lexicographic order, as image tuples"""
        return permutations(range(1, n + 1))

    @staticmethod
    def permutation_product(matrix: TropMatrix, sigma: Sequence[int]) -> TropScalar:
        """a_{1,σ(1)} ⊙ ... ⊙ a_{n,σ(n)}"""
        return tprod(matrix.rows[i][s - 1] for i, s in enumerate(sigma))

    @staticmethod
    def index_subsets(upper: int, size: int) -> Iterator[Tuple[int, ...]]:
        """Ascending 1-based index sets of the given size, lexicographic"""
        return combinations(range(1, upper + 1), size)

    @staticmethod
    def integer_weights(matrix: TropMatrix) -> Tuple[List[List[Optional[int]]], int]:
        """
        Scale finite magnitudes to integers by the common denominator

        Returns:
            (weights with None for -inf, scale factor)
        """
        denominators = [
            x.magnitude.denominator
            for row in matrix.rows for x in row if x.kind is not Kind.NEG_INF
        ]
        scale = lcm(*denominators) if denominators else 1
        weights = [
            [None if x.kind is Kind.NEG_INF else int(x.magnitude * scale) for x in row]
            for row in matrix.rows
        ]
        return weights, scale

    @staticmethod
    def unscale(value: int, scale: int) -> Fraction:
        return Fraction(value, scale)
