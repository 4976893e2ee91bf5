"""
Check service - Seeded cross-validation corpus and benchmark

Every random choice comes from a `random.Random` derived from the seed
and the criterion name, so a run is reproducible criterion by criterion.
"""

import logging
import random
import time
from typing import Callable, Dict, List, Optional

from exceptions import SingularMatrixError, TropicalAlgebraError
from models import BenchRow, CheckResult, LinearSystem
from semiring import (
    NEG_INF,
    ONE,
    TropScalar,
    format_scalar,
    ghost,
    realize,
)
from tensor import TropMatrix, TropVector, combine, transpose
from validators import MatrixValidator
from .base_service import BaseService
from .determinant_service import DeterminantService
from .digraph_service import DigraphService, GHOST_ZERO
from .inverse_service import InverseService
from .linsys_service import LinsysService
from .rank_service import RankService

logger = logging.getLogger(__name__)

WORKED_MATRIX = ((1, 4, -1), (1, 0, 6), (-4, 1, 3))


class CheckService(BaseService):
    """Service running the cross-validation suite"""

    CORPUS_ORDERS = (2, 3, 4, 5)
    PSEUDO_INVERSE_MAX_N = 4
    GRID_MAX_N = 3
    BENCH_ORDERS = (2, 3, 4, 5, 6, 7, 8, 12, 16, 24, 32, 40, 50)
    BENCH_BRUTE_N = 8
    FAST_BUDGET_SECONDS = 1.0

    # ==================== GENERATORS ====================

    @staticmethod
    def rng_for(seed: int, name: str) -> random.Random:
        return random.Random(f"{seed}:{name}")

    @staticmethod
    def random_scalar(rng: random.Random, neg_inf_density: float = 0.2,
                      ghost_density: float = 0.2, low: int = -9, high: int = 9) -> TropScalar:
        """Real, ghost or -inf with integer magnitude in [low, high]"""
        roll = rng.random()
        if roll < neg_inf_density:
            return NEG_INF
        value = rng.randint(low, high)
        if roll < neg_inf_density + ghost_density:
            return TropScalar.ghost(value)
        return TropScalar.real(value)

    @staticmethod
    def random_matrix(rng: random.Random, m: int, n: int, **kwargs) -> TropMatrix:
        return TropMatrix(tuple(
            tuple(CheckService.random_scalar(rng, **kwargs) for _ in range(n))
            for _ in range(m)
        ))

    @staticmethod
    def corpus(seed: int, samples: int, max_n: int) -> List[TropMatrix]:
        """The mixed corpus: `samples` matrices per order 2..max_n"""
        rng = CheckService.rng_for(seed, 'corpus')
        return [
            CheckService.random_matrix(rng, n, n)
            for n in CheckService.CORPUS_ORDERS if n <= max_n
            for _ in range(samples)
        ]

    # ==================== DRIVER ====================

    @staticmethod
    def run(seed: int = 0, samples: int = 1000, max_n: int = 5) -> List[CheckResult]:
        """
        Run every criterion

        Args:
            seed: Corpus seed
            samples: Matrices per order in the main corpus (other corpora scale from it)
            max_n: Largest order in the main corpus

        Returns:
            One CheckResult per criterion, in a fixed order
        """
        MatrixValidator.validate_integer_range(samples, 'samples', min_value=1)
        MatrixValidator.validate_integer_range(max_n, 'max_n', min_value=2, max_value=MatrixValidator.MAX_RANK_N)
        corpus = CheckService.corpus(seed, samples, max_n)
        logger.debug("check corpus: %d matrices (seed %d)", len(corpus), seed)
        side = max(1, samples // 2)
        small = max(1, samples // 5)

        criteria: List[Callable[[], CheckResult]] = [
            CheckService.check_worked_example,
            CheckService.check_dependence_examples,
            lambda: CheckService.check_det_agreement(corpus),
            lambda: CheckService.check_rank_singularity(corpus),
            lambda: CheckService.check_witness_soundness(corpus),
            lambda: CheckService.check_pseudo_inverse(corpus),
            lambda: CheckService.check_certificates(seed, side),
            lambda: CheckService.check_duality(seed, side),
            lambda: CheckService.check_semiring_axioms(seed, samples * 10),
            lambda: CheckService.check_lemma_suite(seed, small),
            lambda: CheckService.check_multicycles(corpus),
            lambda: CheckService.check_pure_real(seed, small),
        ]
        results = []
        for criterion in criteria:
            result = criterion()
            logger.debug("%s: %d passed, %d failed", result.name, result.passed, result.failed)
            results.append(result)
        return results

    @staticmethod
    def _guarded(result: CheckResult, label: str, predicate: Callable[[], bool]) -> None:
        try:
            result.record(predicate(), label)
        except TropicalAlgebraError as e:
            result.record(False, f"{label}: {e.message}")

    # ==================== CRITERIA ====================

    @staticmethod
    def check_worked_example() -> CheckResult:
        result = CheckResult('worked-example')
        a = TropMatrix.of(WORKED_MATRIX)

        def witness_ok() -> bool:
            witness = RankService.square_witness(a)
            sums = combine(list(witness.coefficients), a.row_vectors())
            return witness.to_list() == ['7', '7', '10'] and sums.to_list() == ['8g', '11g', '13g']

        CheckService._guarded(result, 'det', lambda: format_scalar(DeterminantService.det(a)) == '8g')
        CheckService._guarded(result, 'witness', witness_ok)
        CheckService._guarded(result, 'rank', lambda: RankService.rank(a) == 2)
        return result

    @staticmethod
    def check_dependence_examples() -> CheckResult:
        result = CheckResult('dependence-examples')
        pair = [TropVector.of([0, 1]), TropVector.of([1, 2])]
        independent = [TropVector.of([0, 1]), TropVector.of([2, 0])]
        triple = [TropVector.of([1, 1, '-inf']), TropVector.of([1, '-inf', 1]), TropVector.of(['-inf', 1, 1])]

        CheckService._guarded(result, 'pair', lambda: RankService.is_dependent(pair) and RankService.validate_witness(
            pair, RankService.dependence_witness(pair).coefficients))
        CheckService._guarded(result, 'independent', lambda: not RankService.is_dependent(independent))
        CheckService._guarded(result, 'triple', lambda: RankService.dependence_witness(triple).to_list() == ['0', '0', '0'])
        return result

    @staticmethod
    def check_det_agreement(corpus: List[TropMatrix]) -> CheckResult:
        result = CheckResult('det-agreement')
        for index, a in enumerate(corpus):
            def agree(a=a) -> bool:
                brute = DeterminantService.det(a, 'brute')
                expansions = [DeterminantService.det_expand(a, i, 'brute') for i in range(1, a.n + 1)]
                return (
                    DeterminantService.det(a, 'fast') == brute
                    and DeterminantService.det(a, 'expand') == brute
                    and all(e == brute for e in expansions)
                )
            CheckService._guarded(result, f'corpus[{index}]', agree)
        return result

    @staticmethod
    def check_rank_singularity(corpus: List[TropMatrix]) -> CheckResult:
        result = CheckResult('rank-singularity')
        for index, a in enumerate(corpus):
            CheckService._guarded(
                result, f'corpus[{index}]',
                lambda a=a: DeterminantService.is_singular(a) == (RankService.rank(a) < a.n)
            )
        return result

    @staticmethod
    def check_witness_soundness(corpus: List[TropMatrix]) -> CheckResult:
        result = CheckResult('witness-soundness')
        for index, a in enumerate(corpus):
            if not DeterminantService.is_singular(a):
                continue
            CheckService._guarded(
                result, f'corpus[{index}]',
                lambda a=a: RankService.validate_witness(
                    a.row_vectors(), RankService.square_witness(a).coefficients)
            )
        return result

    @staticmethod
    def check_pseudo_inverse(corpus: List[TropMatrix]) -> CheckResult:
        result = CheckResult('pseudo-inverse')
        for index, a in enumerate(corpus):
            if a.n > CheckService.PSEUDO_INVERSE_MAX_N:
                continue
            label = f'corpus[{index}]'
            if DeterminantService.is_singular(a):
                try:
                    InverseService.pseudo_inverse(a)
                    result.record(False, f"{label}: singular matrix was inverted")
                except SingularMatrixError:
                    result.record(True)
            else:
                CheckService._guarded(
                    result, label,
                    lambda a=a: InverseService.verify_pseudo_inverse(a, InverseService.pseudo_inverse(a))
                )
        return result

    @staticmethod
    def check_certificates(seed: int, samples: int) -> CheckResult:
        result = CheckResult('neg-inf-certificates')
        rng = CheckService.rng_for(seed, 'certificates')
        for index in range(samples):
            a = CheckService.random_matrix(rng, *(2 * [rng.randint(2, 5)]), neg_inf_density=0.6)

            def consistent(a=a) -> bool:
                certificate = DeterminantService.rank_defect_certificate(a)
                if certificate is None:
                    return not DeterminantService.det(a, 'brute').is_neg_inf
                return (DeterminantService.det(a, 'brute').is_neg_inf
                        and DeterminantService.check_certificate(a, certificate))
            CheckService._guarded(result, f'sparse[{index}]', consistent)
        return result

    @staticmethod
    def check_duality(seed: int, samples: int) -> CheckResult:
        result = CheckResult('transpose-duality')
        rng = CheckService.rng_for(seed, 'duality')
        for index in range(samples):
            shape = (3, 5) if index % 2 == 0 else (5, 3)
            a = CheckService.random_matrix(rng, *shape)
            CheckService._guarded(
                result, f'rank[{index}]',
                lambda a=a: RankService.rank(a) == RankService.rank(transpose(a))
            )
        for index in range(samples):
            n = rng.randint(1, 4)
            rows = CheckService.random_matrix(rng, n + 1, n).row_vectors()
            CheckService._guarded(
                result, f'tall[{index}]',
                lambda rows=rows: RankService.is_dependent(rows) and RankService.validate_witness(
                    rows, RankService.dependence_witness(rows).coefficients)
            )
        return result

    @staticmethod
    def check_semiring_axioms(seed: int, samples: int) -> CheckResult:
        result = CheckResult('semiring-axioms')
        rng = CheckService.rng_for(seed, 'axioms')
        for index in range(samples):
            x, y, z = (CheckService.random_scalar(rng) for _ in range(3))
            holds = (
                (x + y) + z == x + (y + z)
                and (x * y) * z == x * (y * z)
                and x + y == y + x
                and x * y == y * x
                and x * (y + z) == x * y + x * z
                and x + x == ghost(x)
                and realize(x + y) == realize(x) + realize(y)
                and realize(x * y) == realize(x) * realize(y)
            )
            result.record(holds, f"triple[{index}] = ({x}, {y}, {z})")
        return result

    @staticmethod
    def _zero_bounded_matrix(rng: random.Random, n: int, column_rule: str) -> TropMatrix:
        """Entries ⪯ 0^ν; every column gets two real 0s or one 0^ν ('two-or-ghost') or a 0^ν ('ghost')"""
        cells = [
            [CheckService.random_scalar(rng, neg_inf_density=0.3, low=-9, high=0) for _ in range(n)]
            for _ in range(n)
        ]
        for j in range(n):
            if column_rule == 'ghost' or n < 2 or rng.random() < 0.5:
                cells[rng.randrange(n)][j] = GHOST_ZERO
            else:
                first, second = rng.sample(range(n), 2)
                cells[first][j] = ONE
                cells[second][j] = ONE
        return TropMatrix(tuple(tuple(row) for row in cells))

    @staticmethod
    def check_lemma_suite(seed: int, samples: int) -> CheckResult:
        result = CheckResult('zero-column-lemmas')
        rng = CheckService.rng_for(seed, 'lemmas')
        for rule in ('two-or-ghost', 'ghost'):
            produced = 0
            while produced < samples:
                a = CheckService._zero_bounded_matrix(rng, rng.randint(2, 5), rule)
                if DeterminantService.det(a, 'brute').is_neg_inf:
                    continue
                produced += 1
                CheckService._guarded(
                    result, f'{rule}[{produced}]', lambda a=a: DeterminantService.is_singular(a)
                )
                CheckService._guarded(
                    result, f'{rule}-zero-permutation[{produced}]',
                    lambda a=a: CheckService.has_zero_achieving_permutation(a)
                )
        return result

    @staticmethod
    def has_zero_achieving_permutation(matrix: TropMatrix) -> bool:
        """Some achieving permutation meets a 0 or 0^ν entry"""
        zeros = (ONE, GHOST_ZERO)
        return any(
            any(matrix.entry(i, j) in zeros for i, j in p.cells())
            for p in DeterminantService.achieving_permutations(matrix)
        )

    @staticmethod
    def check_multicycles(corpus: List[TropMatrix]) -> CheckResult:
        result = CheckResult('multicycle-weight')
        for index, a in enumerate(corpus):
            CheckService._guarded(
                result, f'corpus[{index}]',
                lambda a=a: DigraphService.max_multicycle_weight(a, a.n) == DeterminantService.det(a, 'brute')
            )
        return result

    @staticmethod
    def _singular_real_matrix(rng: random.Random, n: int) -> TropMatrix:
        """Finite real matrix with one row a real shift of another"""
        rows = [[TropScalar.real(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
        source, target = rng.sample(range(n), 2)
        shift = TropScalar.real(rng.randint(-3, 3))
        rows[target] = [shift * x for x in rows[source]]
        return TropMatrix(tuple(tuple(row) for row in rows))

    @staticmethod
    def check_pure_real(seed: int, samples: int) -> CheckResult:
        result = CheckResult('pure-real-solutions')
        rng = CheckService.rng_for(seed, 'pure-real')
        for index in range(samples):
            a = CheckService._singular_real_matrix(rng, rng.randint(2, 4))

            def constructed(a=a) -> bool:
                report = LinsysService.find_pure_real_solution(LinearSystem(a))
                return report is not None and report.is_solution and report.kind == 'pure-real'
            CheckService._guarded(result, f'singular[{index}]', constructed)

        produced = 0
        while produced < samples:
            a = CheckService.random_matrix(
                rng, *(2 * [rng.randint(2, CheckService.GRID_MAX_N)]), neg_inf_density=0.0, ghost_density=0.0
            )
            if DeterminantService.is_singular(a):
                continue
            produced += 1
            CheckService._guarded(
                result, f'nonsingular[{produced}]',
                lambda a=a: LinsysService.grid_search_pure_real(LinearSystem(a)) is None
            )
        return result

    # ==================== BENCHMARK ====================

    @staticmethod
    def bench(seed: int = 0, max_n: int = 50) -> List[BenchRow]:
        """
        Time brute force against the assignment method on random real
        matrices of growing order

        Brute force is skipped above BENCH_BRUTE_N. Every assignment
        timing is held to FAST_BUDGET_SECONDS (50x50 in under a second).
        """
        rng = CheckService.rng_for(seed, 'bench')
        rows = []
        for n in CheckService.BENCH_ORDERS:
            if n > max_n:
                break
            a = CheckService.random_matrix(rng, n, n, neg_inf_density=0.0, ghost_density=0.0)
            started = time.perf_counter()
            fast = DeterminantService.det(a, 'fast')
            fast_seconds = time.perf_counter() - started

            brute_seconds: Optional[float] = None
            agree: Optional[bool] = None
            if n <= CheckService.BENCH_BRUTE_N:
                started = time.perf_counter()
                brute = DeterminantService.det(a, 'brute')
                brute_seconds = time.perf_counter() - started
                agree = brute == fast
            within_budget = fast_seconds < CheckService.FAST_BUDGET_SECONDS
            rows.append(BenchRow(n, brute_seconds, fast_seconds, agree, within_budget))
            logger.debug("bench n=%d fast=%.6fs", n, fast_seconds)
            if not within_budget:
                logger.warning("assignment determinant at n=%d took %.3fs", n, fast_seconds)
        return rows

    @staticmethod
    def summary(results: List[CheckResult]) -> Dict[str, int]:
        return {
            'criteria': len(results),
            'passed': sum(r.passed for r in results),
            'failed': sum(r.failed for r in results),
        }

