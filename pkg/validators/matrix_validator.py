"""
Matrix validator - Validates shapes, indices and size guards

Exhaustive algorithms (permutation enumeration, minor search) grow
factorially, so each one has a hard cap declared here.
"""

from exceptions import (
    IndexOutOfRangeError,
    NonSquareError,
    ShapeMismatchError,
    SizeGuardError,
)
from .base_validator import BaseValidator


class MatrixValidator(BaseValidator):
    """Validates matrix arguments"""

    # Constants for validation
    MAX_BRUTE_N = 10
    MAX_RANK_N = 8
    MAX_SOLVE_N = 8
    AUTO_BRUTE_N = 6
    MAX_GRID_POINTS = 500_000
    METHODS = ('brute', 'expand', 'fast', 'auto')

    @classmethod
    def validate_square(cls, matrix, operation: str) -> None:
        """Validate that the matrix is square"""
        if matrix.m != matrix.n:
            raise NonSquareError(operation, matrix.shape)

    @classmethod
    def validate_same_shape(cls, left, right, operation: str) -> None:
        """Validate that two matrices share a shape"""
        if left.shape != right.shape:
            raise ShapeMismatchError(operation, left.shape, right.shape)

    @classmethod
    def validate_product_shapes(cls, left, right) -> None:
        """Validate that inner dimensions agree"""
        if left.n != right.m:
            raise ShapeMismatchError('matrix product', left.shape, right.shape)

    @classmethod
    def validate_lengths(cls, lengths, operation: str) -> None:
        """Validate that all vectors have the same length"""
        lengths = list(lengths)
        if len(set(lengths)) > 1:
            raise ShapeMismatchError(operation, (min(lengths),), (max(lengths),))

    @classmethod
    def validate_index(cls, index: int, upper: int, axis: str = 'index') -> None:
        """Validate a 1-based index"""
        if isinstance(index, bool) or not isinstance(index, int) or not 1 <= index <= upper:
            raise IndexOutOfRangeError(index, upper, axis)

    @classmethod
    def validate_index_set(cls, indices, upper: int, axis: str = 'index') -> None:
        """Validate a set of distinct 1-based indices"""
        for index in indices:
            cls.validate_index(index, upper, axis)
        cls.validate_no_duplicates(list(indices), f'{axis} indices')

    @classmethod
    def validate_min_size(cls, matrix, minimum: int, operation: str) -> None:
        """Validate that both dimensions reach a minimum"""
        if matrix.m < minimum or matrix.n < minimum:
            raise ShapeMismatchError(operation, matrix.shape)

    @classmethod
    def validate_size_guard(cls, size: int, limit: int, operation: str) -> None:
        """Reject exhaustive work above the cap"""
        if size > limit:
            raise SizeGuardError(operation, size, limit)

    @classmethod
    def validate_method(cls, method: str) -> None:
        """Validate the determinant method name"""
        cls.validate_choice(method, 'method', cls.METHODS)
