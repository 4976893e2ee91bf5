"""
Inverse service - Pseudo units and the canonical pseudo inverse
"""

import logging
from typing import Tuple

from exceptions import SingularMatrixError
from models import PseudoUnitReport
from semiring import ONE, format_scalar, is_ghost
from tensor import TropMatrix, mat_mul
from validators import MatrixValidator
from .base_service import BaseService
from .determinant_service import DeterminantService

logger = logging.getLogger(__name__)


class InverseService(BaseService):
    """Service for pseudo-invertibility"""

    @staticmethod
    def is_pseudo_unit(matrix: TropMatrix) -> PseudoUnitReport:
        """
        Check membership in the pseudo units: real 0 on the diagonal,
        ghost or -inf off the diagonal, and nonsingular

        Raises:
            NonSquareError: If the matrix is not square
        """
        n = InverseService.require_square(matrix, 'pseudo unit check')
        diagonal_ok = all(matrix.rows[i][i] == ONE for i in range(n))
        offdiag_ok = all(
            is_ghost(matrix.rows[i][j])
            for i in range(n) for j in range(n) if i != j
        )
        nonsingular_ok = not DeterminantService.is_singular(matrix)
        return PseudoUnitReport(matrix, diagonal_ok, offdiag_ok, nonsingular_ok)

    @staticmethod
    def pseudo_inverse(matrix: TropMatrix) -> TropMatrix:
        """
        Canonical pseudo inverse Adj(A) / |A|

        Raises:
            SingularMatrixError: If |A| lies in Ū
        """
        InverseService.require_square(matrix, 'pseudo inverse')
        determinant = DeterminantService.det(matrix)
        if is_ghost(determinant):
            raise SingularMatrixError(format_scalar(determinant))
        adjoint = DeterminantService.adjoint(matrix)
        logger.debug("pseudo inverse with |A| = %s", format_scalar(determinant))
        return TropMatrix(tuple(
            tuple(x / determinant for x in row) for row in adjoint.rows
        ))

    @staticmethod
    def product_reports(matrix: TropMatrix, candidate: TropMatrix) -> Tuple[PseudoUnitReport, PseudoUnitReport]:
        """Pseudo-unit reports for A ⊙ B and B ⊙ A"""
        InverseService.require_square(matrix, 'pseudo inverse check')
        InverseService.require_square(candidate, 'pseudo inverse check')
        MatrixValidator.validate_same_shape(matrix, candidate, 'pseudo inverse check')
        return (
            InverseService.is_pseudo_unit(mat_mul(matrix, candidate)),
            InverseService.is_pseudo_unit(mat_mul(candidate, matrix)),
        )

    @staticmethod
    def verify_pseudo_inverse(matrix: TropMatrix, candidate: TropMatrix) -> bool:
        """True iff both A ⊙ B and B ⊙ A are pseudo units"""
        right, left = InverseService.product_reports(matrix, candidate)
        return right.verdict and left.verdict
