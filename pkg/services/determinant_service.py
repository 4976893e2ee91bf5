"""
Determinant service - Tropical determinant and everything derived from it

Demonstrates:
- Exhaustive permutation enumeration (the oracle)
- Row expansion by minors
- Exact assignment-problem evaluation with uniqueness detection
- Adjoint matrix and -inf determinant certificates
"""

import logging
from typing import List, Optional, Tuple

from assignment import MaxAssignment, hall_violator
from exceptions import TropicalAlgebraError
from models import AchievingPermutation, RankDefectCertificate
from semiring import (
    NEG_INF,
    Kind,
    TropScalar,
    is_ghost,
    strip,
    tsum,
)
from tensor import TropMatrix, identity, minor
from validators import MatrixValidator
from .base_service import BaseService

logger = logging.getLogger(__name__)


class DeterminantService(BaseService):
    """Service for determinant computations"""

    @staticmethod
    def det(matrix: TropMatrix, method: str = 'auto') -> TropScalar:
        """
        Tropical determinant |A| = ⊕_σ a_{1,σ(1)} ⊙ ... ⊙ a_{n,σ(n)}

        Args:
            matrix: Square matrix
            method: 'brute', 'expand', 'fast' or 'auto'

        Returns:
            The determinant, with its ghost tag

        Raises:
            NonSquareError: If the matrix is not square
            SizeGuardError: If an exhaustive method is asked for n > 10
        """
        n = DeterminantService.require_square(matrix, 'determinant')
        MatrixValidator.validate_method(method)

        if method == 'auto':
            method = 'brute' if n <= MatrixValidator.AUTO_BRUTE_N else 'fast'
        logger.debug("det %dx%d via %s", n, n, method)

        if n == 1:
            return matrix.rows[0][0]
        if method == 'brute':
            return DeterminantService.permanent_brute(matrix)
        if method == 'expand':
            MatrixValidator.validate_size_guard(n, MatrixValidator.MAX_BRUTE_N, 'expansion determinant')
            return DeterminantService._expand(matrix, 1, 'expand')
        return DeterminantService.det_fast(matrix)

    @staticmethod
    def permanent_brute(matrix: TropMatrix) -> TropScalar:
        """⊕-sum of all n! permutation products"""
        n = DeterminantService.require_square(matrix, 'determinant')
        MatrixValidator.validate_size_guard(n, MatrixValidator.MAX_BRUTE_N, 'brute-force determinant')
        return tsum(
            DeterminantService.permutation_product(matrix, sigma)
            for sigma in DeterminantService.iter_permutations(n)
        )

    @staticmethod
    def det_expand(matrix: TropMatrix, i: int, method: str = 'auto') -> TropScalar:
        """
        Expansion along row i: ⊕_j a_{i,j} ⊙ |A_{i,j}|

        Args:
            matrix: Square matrix, n >= 2
            i: Row index (1-based)
            method: Method used for the minors
        """
        DeterminantService.require_square(matrix, 'row expansion')
        MatrixValidator.validate_min_size(matrix, 2, 'row expansion')
        MatrixValidator.validate_index(i, matrix.m, 'row')
        MatrixValidator.validate_method(method)
        return DeterminantService._expand(matrix, i, method)

    @staticmethod
    def _expand(matrix: TropMatrix, i: int, method: str) -> TropScalar:
        terms = []
        for j, a_ij in enumerate(matrix.rows[i - 1], 1):
            if a_ij.is_neg_inf:
                continue
            sub = minor(matrix, i, j)
            # 'expand' recurses along the first row of every minor
            terms.append(a_ij * DeterminantService.det(sub, method))
        return tsum(terms)

    @staticmethod
    def det_fast(matrix: TropMatrix) -> TropScalar:
        """
        Determinant through the assignment problem on π(A)

        The optimum gives the magnitude. The value is ghost when a second
        optimal permutation exists (found by forbidding each matched cell in
        turn and re-solving) or when the optimal permutation crosses a ghost
        entry.
        """
        n = DeterminantService.require_square(matrix, 'determinant')
        if n == 1:
            return matrix.rows[0][0]

        weights, scale = DeterminantService.integer_weights(matrix)
        solver = MaxAssignment(weights)
        optimum = solver.solve()
        if optimum is None:
            return NEG_INF

        value, assignment = optimum
        magnitude = DeterminantService.unscale(value, scale)

        if any(matrix.rows[r][c].kind is Kind.GHOST for r, c in enumerate(assignment)):
            logger.debug("optimal permutation crosses a ghost entry")
            return TropScalar.ghost(magnitude)

        for r, c in enumerate(assignment):
            alternative = solver.solve_without(r, c)
            if alternative is not None and alternative[0] == value:
                logger.debug("second optimal permutation avoids cell (%d, %d)", r + 1, c + 1)
                return TropScalar.ghost(magnitude)
        return TropScalar.real(magnitude)

    @staticmethod
    def det_value(matrix: TropMatrix) -> TropScalar:
        """π(|A|) embedded back into T: one assignment solve, no tag decision"""
        n = DeterminantService.require_square(matrix, 'determinant')
        if n == 1:
            return strip(matrix.rows[0][0])
        weights, scale = DeterminantService.integer_weights(matrix)
        optimum = MaxAssignment(weights).solve()
        if optimum is None:
            return NEG_INF
        return TropScalar.real(DeterminantService.unscale(optimum[0], scale))

    @staticmethod
    def lex_least_permutation(matrix: TropMatrix, depth: Optional[int] = None) -> Optional[Tuple[int, ...]]:
        """
        Lexicographically least permutation attaining π(|A|)

        Pins σ(1), σ(2), ... in turn to the smallest column that keeps the
        optimum, re-solving the assignment problem each time. With `depth`
        only the leading `depth` positions are pinned; the tail is the one
        the last solve returned.

        Returns:
            The permutation, or None when |A| = -inf
        """
        n = DeterminantService.require_square(matrix, 'determinant')
        if n == 1:
            return None if matrix.rows[0][0].is_neg_inf else (1,)
        weights, _ = DeterminantService.integer_weights(matrix)
        optimum = MaxAssignment(weights).solve()
        if optimum is None:
            return None
        target, assignment = optimum
        for r in range(n if depth is None else min(depth, n)):
            for c in range(n):
                if weights[r][c] is None:
                    continue
                pinned = DeterminantService._pin(weights, r, c)
                found = MaxAssignment(pinned).solve()
                if found is not None and found[0] == target:
                    weights, assignment = pinned, found[1]
                    break
        return tuple(c + 1 for c in assignment)

    @staticmethod
    def _pin(weights: List[List[Optional[int]]], row: int, col: int) -> List[List[Optional[int]]]:
        """Forbid every other cell of row `row` and column `col`"""
        return [
            [w if (r == row) == (c == col) else None for c, w in enumerate(line)]
            for r, line in enumerate(weights)
        ]

    @staticmethod
    def achieving_permutations(matrix: TropMatrix) -> List[AchievingPermutation]:
        """
        All permutations whose product is ν-equal to the determinant

        Returns:
            Permutations in lexicographic order; empty when |A| = -inf
        """
        n = DeterminantService.require_square(matrix, 'achieving permutations')
        MatrixValidator.validate_size_guard(n, MatrixValidator.MAX_BRUTE_N, 'achieving permutations')

        products = [
            (sigma, DeterminantService.permutation_product(matrix, sigma))
            for sigma in DeterminantService.iter_permutations(n)
        ]
        finite = [w.magnitude for _, w in products if not w.is_neg_inf]
        if not finite:
            return []
        best = max(finite)
        return [
            AchievingPermutation(sigma, weight)
            for sigma, weight in products
            if not weight.is_neg_inf and weight.magnitude == best
        ]

    @staticmethod
    def is_singular(matrix: TropMatrix, method: str = 'auto') -> bool:
        """A is tropically singular when |A| lies in Ū"""
        return is_ghost(DeterminantService.det(matrix, method))

    @staticmethod
    def adjoint(matrix: TropMatrix, method: str = 'auto') -> TropMatrix:
        """
        Adjoint matrix: entry (i, j) is |A_{j,i}|

        With this placement the diagonal of A ⊙ Adj(A) is |A| by row
        expansion. A 1x1 matrix has adjoint [0].
        """
        n = DeterminantService.require_square(matrix, 'adjoint')
        if n == 1:
            return identity(1)
        cofactors = [
            [DeterminantService.det(minor(matrix, j, i), method) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
        return TropMatrix(tuple(tuple(row) for row in cofactors))

    @staticmethod
    def rank_defect_certificate(matrix: TropMatrix) -> Optional[RankDefectCertificate]:
        """
        Certificate that |A| = -inf

        Finds k rows whose finite entries all lie in at most k - 1 columns
        (a Hall violator of the finite-support bipartite graph), so the rows
        are -inf on n + 1 - k common columns.

        Returns:
            The certificate, or None when some permutation avoids -inf
        """
        n = DeterminantService.require_square(matrix, 'rank defect certificate')
        adjacency = [
            [j for j, x in enumerate(row) if not x.is_neg_inf] for row in matrix.rows
        ]
        violator = hall_violator(adjacency, n)
        if violator is None:
            return None

        rows, neighbours = violator
        k = len(rows)
        free_cols = [j for j in range(n) if j not in neighbours]
        colset = tuple(j + 1 for j in free_cols[:n + 1 - k])
        certificate = RankDefectCertificate(tuple(sorted(r + 1 for r in rows)), colset)
        logger.debug("rank defect %d: rows %s cols %s", k, certificate.rowset, certificate.colset)
        return certificate

    @staticmethod
    def check_certificate(matrix: TropMatrix, certificate: RankDefectCertificate) -> bool:
        """Verify a certificate against the matrix"""
        n = DeterminantService.require_square(matrix, 'certificate check')
        k = certificate.k
        if not 1 <= k <= n or len(certificate.colset) != n + 1 - k:
            return False
        try:
            MatrixValidator.validate_index_set(certificate.rowset, n, 'row')
            MatrixValidator.validate_index_set(certificate.colset, n, 'column')
        except TropicalAlgebraError:
            return False
        return all(
            matrix.rows[i - 1][j - 1].is_neg_inf
            for i in certificate.rowset for j in certificate.colset
        )

    @staticmethod
    def tag_of(value: TropScalar) -> str:
        """Name of the variant of a determinant value"""
        if value.is_neg_inf:
            return 'neg-inf'
        return 'ghost' if value.kind is Kind.GHOST else 'real'

    @staticmethod
    def diagonal_product(matrix: TropMatrix) -> TropScalar:
        """Product of the main diagonal"""
        n = DeterminantService.require_square(matrix, 'diagonal product')
        return DeterminantService.permutation_product(matrix, tuple(range(1, n + 1)))
