"""
Rank service - Tropical dependence, dependence witnesses and rank

Demonstrates:
- Dependence decided through nonsingular minors
- Constructive witnesses from minor determinants, always re-validated
- Rank as the size of a maximal nonsingular minor
"""

import logging
from itertools import combinations_with_replacement
from typing import List, Optional, Sequence, Tuple

from exceptions import (
    GhostEntryError,
    NonsingularMatrixError,
    NotDependentError,
    WitnessValidationError,
)
from models import DependenceWitness, MinorLocation
from semiring import (
    NEG_INF,
    ONE,
    Kind,
    TropScalar,
    format_scalar,
    is_ghost,
    strip,
    tsum,
)
from tensor import (
    TropMatrix,
    TropVector,
    combine,
    duplicate_column,
    is_ghost_vector,
    minor,
    permute_cols,
    submatrix,
    transpose,
)
from validators import MatrixValidator
from .base_service import BaseService
from .determinant_service import DeterminantService

logger = logging.getLogger(__name__)

Coefficients = List[TropScalar]


class RankService(BaseService):
    """Service for dependence and rank"""

    # ==================== DEPENDENCE ====================

    @staticmethod
    def is_dependent(vectors: Sequence[TropVector]) -> bool:
        """
        Decide tropical dependence of m vectors of length n

        More than n vectors are always dependent; a square family is
        dependent iff its matrix is singular; otherwise some m x m minor
        must be nonsingular for independence.

        Raises:
            ShapeMismatchError: If the vectors differ in length
        """
        matrix = RankService._stack(vectors)
        m, n = matrix.shape
        if m > n:
            return True
        if any(is_ghost_vector(v) for v in matrix.row_vectors()):
            return True
        if m == n:
            return DeterminantService.is_singular(matrix)
        MatrixValidator.validate_size_guard(n, MatrixValidator.MAX_RANK_N, 'dependence test')
        return RankService._nonsingular_minor_of_size(matrix, m) is None

    @staticmethod
    def dependence_witness(vectors: Sequence[TropVector]) -> DependenceWitness:
        """
        Validated dependence coefficients for dependent vectors

        Coefficients are normalized so the last finite one is 0.

        Raises:
            NotDependentError: If the vectors are independent
            WitnessValidationError: If no construction validates
        """
        matrix = RankService._stack(vectors)
        if not RankService.is_dependent(vectors):
            raise NotDependentError(matrix.m)
        coefficients, construction = RankService._witness(matrix)
        normalized = RankService.normalize_witness(coefficients)
        return DependenceWitness(tuple(normalized), construction)

    @staticmethod
    def square_witness(matrix: TropMatrix) -> DependenceWitness:
        """
        Witness for the rows of a singular square matrix

        Returns the raw construction α_i = π(|A_{i,c}|) when the expansion
        column c works, without normalization.

        Raises:
            NonsingularMatrixError: If the matrix is nonsingular
        """
        RankService.require_square(matrix, 'square witness')
        determinant = DeterminantService.det(matrix)
        if not is_ghost(determinant):
            raise NonsingularMatrixError(format_scalar(determinant))
        coefficients, construction = RankService._witness(matrix)
        return DependenceWitness(tuple(coefficients), construction)

    @staticmethod
    def validate_witness(rows: Sequence[TropVector], coefficients: Sequence[TropScalar]) -> bool:
        """
        True when the coefficients are real or -inf, some coefficient is
        real, and ⊕_i α_i ⊙ r_i is ghost in every coordinate
        """
        if len(rows) != len(coefficients):
            return False
        if any(a.kind is Kind.GHOST for a in coefficients):
            return False
        if all(a.is_neg_inf for a in coefficients):
            return False
        return is_ghost_vector(combine(list(coefficients), list(rows)))

    @staticmethod
    def normalize_witness(coefficients: Sequence[TropScalar]) -> Coefficients:
        """Shift all finite coefficients so that the last finite one is 0"""
        finite = [a for a in coefficients if not a.is_neg_inf]
        if not finite:
            return list(coefficients)
        shift = finite[-1].magnitude
        return [a if a.is_neg_inf else TropScalar.real(a.magnitude - shift) for a in coefficients]

    # ==================== WITNESS CONSTRUCTION ====================

    @staticmethod
    def _witness(matrix: TropMatrix) -> Tuple[Coefficients, str]:
        rows = matrix.row_vectors()
        found = RankService._construct(matrix)
        if found is None:
            raise WitnessValidationError(
                f"No dependence witness validated for a {matrix.m}x{matrix.n} matrix"
            )
        coefficients, construction = found
        if not RankService.validate_witness(rows, coefficients):
            raise WitnessValidationError(f"Witness from {construction} construction failed validation")
        logger.debug("witness via %s: %s", construction, [format_scalar(a) for a in coefficients])
        return coefficients, construction

    @staticmethod
    def _construct(matrix: TropMatrix) -> Optional[Tuple[Coefficients, str]]:
        """Witness for dependent rows; tries each structured path before the exhaustive one"""
        rows = matrix.row_vectors()
        m, n = matrix.shape

        for i, row in enumerate(rows):
            if is_ghost_vector(row):
                return RankService._unit(m, i), 'ghost-row'

        if m == n:
            found = RankService._square_path(matrix)
        elif m > n:
            found = RankService._tall_path(matrix)
        else:
            found = RankService._wide_path(matrix)

        if found is not None and RankService.validate_witness(rows, found[0]):
            return found

        logger.warning("structured witness failed for %dx%d, running exhaustive search", m, n)
        return RankService._exhaustive_path(matrix)

    @staticmethod
    def _unit(m: int, index: int) -> Coefficients:
        return [ONE if i == index else NEG_INF for i in range(m)]

    @staticmethod
    def _pad(m: int, rowset: Sequence[int], values: Sequence[TropScalar]) -> Coefficients:
        """Place values at 1-based rows, -inf elsewhere"""
        coefficients = [NEG_INF] * m
        for r, a in zip(rowset, values):
            coefficients[r - 1] = a
        return coefficients

    @staticmethod
    def _minor_vector(matrix: TropMatrix, column: int) -> Coefficients:
        """α_i = π(|A_{i,column}|) for every row i"""
        return [
            DeterminantService.det_value(minor(matrix, i, column))
            for i in range(1, matrix.m + 1)
        ]

    @staticmethod
    def _square_path(matrix: TropMatrix) -> Optional[Tuple[Coefficients, str]]:
        n = matrix.n
        if n == 1:
            return None
        rows = matrix.row_vectors()
        determinant = DeterminantService.det(matrix)
        if not is_ghost(determinant):
            return None
        if determinant.is_neg_inf:
            return RankService._defect_path(matrix)

        column = RankService._expansion_column(matrix)
        candidates = [column] + [c for c in range(1, n + 1) if c != column]
        for c in candidates:
            coefficients = RankService._minor_vector(matrix, c)
            if all(a.is_neg_inf for a in coefficients):
                continue
            if RankService.validate_witness(rows, coefficients):
                label = 'minors' if c == column else 'minors-alternate-column'
                return coefficients, label
            logger.debug("expansion column %d does not validate", c)
        return None

    @staticmethod
    def _expansion_column(matrix: TropMatrix) -> int:
        """
        Column whose minors give a witness for a singular matrix with
        |A| != -inf

        Renumbers columns so the lexicographically least achieving
        permutation becomes the diagonal, then takes the least principal
        submatrix that is singular with its determinant attained on the
        diagonal; its first index, mapped back, is the column. Above the
        rank guard no principal submatrix is searched and the column is
        σ(1), so only that position is pinned.
        """
        n = matrix.n
        if n > MatrixValidator.MAX_RANK_N:
            return DeterminantService.lex_least_permutation(matrix, depth=1)[0]
        sigma = DeterminantService.lex_least_permutation(matrix)
        diagonalized = permute_cols(matrix, sigma)

        for size in range(1, n + 1):
            for indices in RankService.index_subsets(n, size):
                principal = submatrix(diagonalized, indices, indices)
                value = DeterminantService.det(principal)
                if not is_ghost(value) or value.is_neg_inf:
                    continue
                if DeterminantService.diagonal_product(principal).magnitude == value.magnitude:
                    return sigma[indices[0] - 1]
        return sigma[0]

    @staticmethod
    def _defect_path(matrix: TropMatrix) -> Optional[Tuple[Coefficients, str]]:
        """|A| = -inf: the k certified rows are dependent over the other k - 1 columns"""
        certificate = DeterminantService.rank_defect_certificate(matrix)
        if certificate is None:
            return None
        remaining = [j for j in range(1, matrix.n + 1) if j not in certificate.colset]
        if not remaining:
            return RankService._unit(matrix.m, certificate.rowset[0] - 1), 'rank-defect'
        restricted = submatrix(matrix, certificate.rowset, remaining)
        found = RankService._construct(restricted)
        if found is None:
            return None
        return RankService._pad(matrix.m, certificate.rowset, found[0]), 'rank-defect'

    @staticmethod
    def _tall_path(matrix: TropMatrix) -> Optional[Tuple[Coefficients, str]]:
        """
        m > n: keep n + 1 rows, drop columns that are -inf on all of them,
        repeat until stable, then duplicate a column to get a square
        singular matrix
        """
        rowset = list(range(1, matrix.m + 1))
        colset = list(range(1, matrix.n + 1))
        while True:
            rowset = rowset[:len(colset) + 1]
            kept = [
                j for j in colset
                if any(not matrix.rows[i - 1][j - 1].is_neg_inf for i in rowset)
            ]
            if kept == colset:
                break
            colset = kept
            if not colset:
                return RankService._unit(matrix.m, rowset[0] - 1), 'tall'

        square = duplicate_column(submatrix(matrix, rowset, colset), 1)
        found = RankService._construct(square)
        if found is None:
            return None
        return RankService._pad(matrix.m, rowset, found[0]), 'tall'

    @staticmethod
    def _wide_path(matrix: TropMatrix) -> Optional[Tuple[Coefficients, str]]:
        """
        m < n with rank < m: witnesses α' (last column dropped) and α''
        (first column dropped) are combined through the 2x2 matrix of their
        values on the first and last columns
        """
        m, n = matrix.shape
        rows = list(range(1, m + 1))
        left = RankService._construct(submatrix(matrix, rows, list(range(1, n))))
        right = RankService._construct(submatrix(matrix, rows, list(range(2, n + 1))))
        if left is None or right is None:
            return None
        alpha1, alpha2 = left[0], right[0]

        def value_on(alpha: Coefficients, column: int) -> TropScalar:
            return tsum(a * matrix.rows[i][column - 1] for i, a in enumerate(alpha))

        combiner = TropMatrix((
            (value_on(alpha1, 1), value_on(alpha1, n)),
            (value_on(alpha2, 1), value_on(alpha2, n)),
        ))
        mu = RankService._construct(combiner)
        if mu is None:
            return None
        mu1, mu2 = mu[0]
        beta = [strip(mu1 * a1 + mu2 * a2) for a1, a2 in zip(alpha1, alpha2)]
        return beta, 'column-split'

    @staticmethod
    def _exhaustive_path(matrix: TropMatrix) -> Optional[Tuple[Coefficients, str]]:
        """
        Search row subsets F by increasing size and column multisets C with
        |C| = |F| - 1, using α_i = π(per(A[F - i, C])) on F

        A dependent family always has a witness of this form supported on
        a minimal dependent subset.
        """
        m, n = matrix.shape
        rows = matrix.row_vectors()
        for size in range(1, min(m, n + 1) + 1):
            for rowset in RankService.index_subsets(m, size):
                for colset in combinations_with_replacement(range(1, n + 1), size - 1):
                    values = [
                        RankService._multiset_permanent(
                            matrix, [r for r in rowset if r != i], colset
                        )
                        for i in rowset
                    ]
                    coefficients = RankService._pad(m, rowset, values)
                    if RankService.validate_witness(rows, coefficients):
                        return coefficients, 'exhaustive'
        return None

    @staticmethod
    def _multiset_permanent(matrix: TropMatrix, rowset: Sequence[int], colset: Sequence[int]) -> TropScalar:
        if not rowset:
            return ONE
        block = TropMatrix(tuple(
            tuple(matrix.rows[i - 1][j - 1] for j in colset) for i in rowset
        ))
        return DeterminantService.det_value(block)

    # ==================== RANK ====================

    @staticmethod
    def rank(matrix: TropMatrix) -> int:
        """
        Maximal number of independent rows, computed as the size of a
        maximal nonsingular minor

        Raises:
            SizeGuardError: If m or n exceeds 8
        """
        location = RankService.max_nonsingular_minor(matrix)
        return location.size if location is not None else 0

    @staticmethod
    def max_nonsingular_minor(matrix: TropMatrix) -> Optional[MinorLocation]:
        """
        Largest nonsingular square submatrix, first in lexicographic order
        of (rows, columns) within its size

        Returns:
            The location, or None when every entry is ghost or -inf
        """
        m, n = matrix.shape
        MatrixValidator.validate_size_guard(max(m, n), MatrixValidator.MAX_RANK_N, 'rank')
        for size in range(min(m, n), 0, -1):
            location = RankService._nonsingular_minor_of_size(matrix, size)
            if location is not None:
                logger.debug("maximal nonsingular minor %s x %s", location.rows, location.cols)
                return location
        return None

    @staticmethod
    def _nonsingular_minor_of_size(matrix: TropMatrix, size: int) -> Optional[MinorLocation]:
        m, n = matrix.shape
        for rowset in RankService.index_subsets(m, size):
            for colset in RankService.index_subsets(n, size):
                block = submatrix(matrix, rowset, colset)
                method = 'brute' if size <= 3 else 'fast'
                if not DeterminantService.is_singular(block, method):
                    return MinorLocation(rowset, colset)
        return None

    @staticmethod
    def rank_dss(matrix: TropMatrix) -> int:
        """
        Rank of a real matrix by its largest nonsingular minor

        Raises:
            GhostEntryError: If some entry is ghost
        """
        for i, row in enumerate(matrix.rows, 1):
            for j, x in enumerate(row, 1):
                if x.kind is Kind.GHOST:
                    raise GhostEntryError(i, j)
        return RankService.rank(matrix)

    @staticmethod
    def rank_columns(matrix: TropMatrix) -> int:
        """Maximal number of independent columns"""
        return RankService.rank(transpose(matrix))

    @staticmethod
    def _stack(vectors: Sequence[TropVector]) -> TropMatrix:
        if isinstance(vectors, TropMatrix):
            return vectors
        return TropMatrix.from_rows(list(vectors))
