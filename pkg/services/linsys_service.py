"""
Linear system service - Homogeneous tropical linear forms

Demonstrates:
- Form evaluation and zero-set membership (values in Ū)
- Pure-real solutions built from a column dependence witness
- A finite-grid search used as an independent consistency check
"""

import logging
from itertools import product
from typing import List, Optional, Sequence

from exceptions import ShapeMismatchError
from models import LinearSystem, SolutionReport
from semiring import TropScalar, tsum
from tensor import TropMatrix, TropVector, transpose
from validators import MatrixValidator
from .base_service import BaseService
from .determinant_service import DeterminantService
from .rank_service import RankService

logger = logging.getLogger(__name__)


class LinsysService(BaseService):
    """Service for homogeneous systems f_i(λ) = ⊕_j a_{i,j} λ_j"""

    @staticmethod
    def eval_form(row: TropVector, point: TropVector) -> TropScalar:
        """
        Evaluate ⊕_j a_j ⊙ x_j

        Raises:
            ShapeMismatchError: If the lengths differ
        """
        if len(row) != len(point):
            raise ShapeMismatchError('form evaluation', (1, len(row)), (1, len(point)))
        return tsum(a * x for a, x in zip(row, point))

    @staticmethod
    def is_solution(system: LinearSystem, point: TropVector) -> SolutionReport:
        """
        Evaluate every form at the point

        The point solves the system when every value lies in Ū.
        """
        if len(point) != system.unknowns:
            raise ShapeMismatchError('system evaluation', system.coefficients.shape, (1, len(point)))
        values = tuple(
            LinsysService.eval_form(row, point) for row in system.coefficients.row_vectors()
        )
        return SolutionReport(point, values)

    @staticmethod
    def find_pure_real_solution(system: LinearSystem) -> Optional[SolutionReport]:
        """
        Pure-real solution of a square system

        Takes a column dependence witness β of A_S; -inf coordinates are
        replaced by a real M low enough to stay dominated in every form
        whose value at β is finite.

        Returns:
            None when A_S is nonsingular. Otherwise a pure-real report, or
            the witness point itself with a diagnostic when some form is
            forced real at every repaired point.

        Raises:
            NonSquareError: If the system is not square
            SizeGuardError: If n exceeds 8
        """
        matrix = system.coefficients
        n = LinsysService.require_square(matrix, 'pure-real solution')
        MatrixValidator.validate_size_guard(n, MatrixValidator.MAX_SOLVE_N, 'pure-real solution')

        if not DeterminantService.is_singular(matrix):
            logger.debug("coefficient matrix is nonsingular, no pure-real solution")
            return None

        beta = RankService.square_witness(transpose(matrix)).coefficients
        witness_point = TropVector(beta)
        at_witness = LinsysService.is_solution(system, witness_point)

        if all(b.is_real for b in beta):
            return at_witness

        fill = LinsysService._repair_constant(matrix, beta, at_witness.values)
        repaired = TropVector(tuple(fill if b.is_neg_inf else b for b in beta))
        report = LinsysService.is_solution(system, repaired)
        if report.is_solution:
            return report

        forced = [i for i, v in enumerate(report.values, 1) if v.is_real]
        diagnostic = (
            f"forms {forced} are real at every pure-real point near the witness: "
            "their finite coefficients only meet unknowns with a -inf witness coefficient"
        )
        logger.warning("no pure-real solution constructed: %s", diagnostic)
        return SolutionReport(witness_point, at_witness.values, diagnostic)

    @staticmethod
    def _repair_constant(matrix: TropMatrix, beta: Sequence[TropScalar],
                         values: Sequence[TropScalar]) -> TropScalar:
        """
        Real M with M ⊙ a_{i,j} strictly below every finite form value

        M = (least finite form value) - (largest finite entry) - 1; when no
        form value is finite the least finite magnitude of A and β stands in.
        """
        entries = [x.magnitude for row in matrix.rows for x in row if not x.is_neg_inf]
        if not entries:
            return TropScalar.real(0)
        finite_values = [v.magnitude for v in values if not v.is_neg_inf]
        if finite_values:
            floor = min(finite_values)
        else:
            floor = min(entries + [b.magnitude for b in beta if not b.is_neg_inf])
        return TropScalar.real(floor - max(entries) - 1)

    @staticmethod
    def candidate_grid(matrix: TropMatrix) -> List[TropScalar]:
        """Sorted real differences of finite entry magnitudes (0 included)"""
        magnitudes = {x.magnitude for row in matrix.rows for x in row if not x.is_neg_inf}
        differences = {p - q for p in magnitudes for q in magnitudes}
        differences.add(0)
        return [TropScalar.real(d) for d in sorted(differences)]

    @staticmethod
    def grid_search_pure_real(system: LinearSystem) -> Optional[SolutionReport]:
        """
        Search pure-real points with λ_1 = 0 and the other coordinates on
        the candidate grid

        Returns:
            The first solving point in lexicographic grid order, or None

        Raises:
            SizeGuardError: If the grid has too many points
        """
        grid = LinsysService.candidate_grid(system.coefficients)
        free = system.unknowns - 1
        MatrixValidator.validate_size_guard(
            len(grid) ** free, MatrixValidator.MAX_GRID_POINTS, 'grid search'
        )
        origin = TropScalar.real(0)
        for tail in product(grid, repeat=free):
            report = LinsysService.is_solution(system, TropVector((origin,) + tail))
            if report.is_solution:
                return report
        return None
