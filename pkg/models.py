"""
Result and certificate models

Plain immutable records returned by the services. Each one knows how to
serialize itself with `to_dict()` for the JSON outputs of the CLI and
the HTTP API.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from semiring import TropScalar, format_scalar, is_ghost
from tensor import TropMatrix, TropVector


@dataclass(frozen=True)
class AchievingPermutation:
    """
    Permutation σ whose product weight attains the determinant's ν-value

    `sigma[i - 1]` is σ(i).
    """
    sigma: Tuple[int, ...]
    weight: TropScalar

    def cells(self) -> List[Tuple[int, int]]:
        return [(i, s) for i, s in enumerate(self.sigma, 1)]

    def to_dict(self):
        return {
            'sigma': list(self.sigma),
            'weight': format_scalar(self.weight)
        }

    def __repr__(self):
        return f'<AchievingPermutation {self.sigma} weight={format_scalar(self.weight)}>'


@dataclass(frozen=True)
class RankDefectCertificate:
    """k rows that are -inf on n+1-k common columns"""
    rowset: Tuple[int, ...]
    colset: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.rowset)

    def to_dict(self):
        return {
            'rows': list(self.rowset),
            'cols': list(self.colset),
            'k': self.k
        }


@dataclass(frozen=True)
class DependenceWitness:
    """
    Dependence coefficients α_1..α_m (real or -inf, not all -inf)

    `construction` names the path that produced the coefficients.
    """
    coefficients: Tuple[TropScalar, ...]
    construction: str = 'direct'

    def support(self) -> List[int]:
        """1-based indices of the finite coefficients"""
        return [i for i, a in enumerate(self.coefficients, 1) if not a.is_neg_inf]

    def to_list(self) -> List[str]:
        return [format_scalar(a) for a in self.coefficients]

    def to_dict(self):
        return {
            'coefficients': self.to_list(),
            'construction': self.construction
        }

    def __str__(self):
        return ' '.join(self.to_list())


@dataclass(frozen=True)
class MinorLocation:
    """Square submatrix address (1-based, ascending index sets)"""
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_dict(self):
        return {
            'rows': list(self.rows),
            'cols': list(self.cols),
            'size': self.size
        }


@dataclass(frozen=True)
class PseudoUnitReport:
    """Evidence for membership in the set of pseudo units"""
    subject: TropMatrix
    diagonal_ok: bool
    offdiag_ghost_ok: bool
    nonsingular_ok: bool

    @property
    def verdict(self) -> bool:
        return self.diagonal_ok and self.offdiag_ghost_ok and self.nonsingular_ok

    def failures(self) -> List[str]:
        """Names of the failed clauses"""
        failed = []
        if not self.diagonal_ok:
            failed.append('diagonal is not all real 0')
        if not self.offdiag_ghost_ok:
            failed.append('off-diagonal entry is real')
        if not self.nonsingular_ok:
            failed.append('matrix is singular')
        return failed

    def to_dict(self):
        return {
            'matrix': self.subject.to_lists(),
            'diagonal_ok': self.diagonal_ok,
            'offdiag_ghost_ok': self.offdiag_ghost_ok,
            'nonsingular_ok': self.nonsingular_ok,
            'verdict': self.verdict
        }


@dataclass(frozen=True)
class LinearSystem:
    """Homogeneous system: row i holds the coefficients of the form f_i"""
    coefficients: TropMatrix

    @property
    def forms(self) -> int:
        return self.coefficients.m

    @property
    def unknowns(self) -> int:
        return self.coefficients.n


@dataclass(frozen=True)
class SolutionReport:
    """
    A candidate point of a homogeneous system and how each form evaluates

    kind is 'pure-real' when every coordinate is real, 'ghost' when every
    coordinate lies in Ū, otherwise 'mixed'.
    """
    point: TropVector
    values: Tuple[TropScalar, ...]
    diagnostic: Optional[str] = None

    @property
    def kind(self) -> str:
        if all(x.is_real for x in self.point):
            return 'pure-real'
        if all(is_ghost(x) for x in self.point):
            return 'ghost'
        return 'mixed'

    @property
    def is_solution(self) -> bool:
        return all(is_ghost(v) for v in self.values)

    def to_dict(self):
        data = {
            'point': self.point.to_list(),
            'kind': self.kind,
            'values': [format_scalar(v) for v in self.values],
            'is_solution': self.is_solution
        }
        if self.diagnostic:
            data['diagnostic'] = self.diagnostic
        return data


@dataclass(frozen=True)
class Edge:
    """Directed edge i -> j carrying a_{i,j}; multiplicity 2 marks a duplicated 0^ν edge"""
    source: int
    target: int
    weight: TropScalar
    multiplicity: int = 1


@dataclass(frozen=True, eq=False)
class WeightedDigraph:
    """
    Weighted digraph on vertices 1..n

    Backed by a networkx MultiDiGraph whose edges carry a `weight`
    attribute; a 0^ν edge of the reduced 0-graph is stored twice.
    """
    n: int
    graph: nx.MultiDiGraph

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """One Edge per ordered pair, in insertion (row-major) order"""
        found = []
        for source, targets in self.graph.adjacency():
            for target, keyed in targets.items():
                weight = next(iter(keyed.values()))['weight']
                found.append(Edge(source, target, weight, len(keyed)))
        return tuple(found)

    def edge(self, source: int, target: int) -> Optional[Edge]:
        keyed = self.graph.get_edge_data(source, target)
        if not keyed:
            return None
        return Edge(source, target, next(iter(keyed.values()))['weight'], len(keyed))

    def __eq__(self, other):
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def to_dict(self):
        return {
            'n': self.n,
            'edges': [
                {'source': e.source, 'target': e.target,
                 'weight': format_scalar(e.weight), 'multiplicity': e.multiplicity}
                for e in self.edges
            ]
        }


@dataclass(frozen=True)
class Multicycle:
    """Vertex-disjoint simple cycles; `cycles` list vertices in traversal order"""
    cycles: Tuple[Tuple[int, ...], ...]
    weight: TropScalar

    @property
    def length(self) -> int:
        return sum(len(c) for c in self.cycles)

    def to_dict(self):
        return {
            'cycles': [list(c) for c in self.cycles],
            'length': self.length,
            'weight': format_scalar(self.weight)
        }


@dataclass(frozen=True)
class MatrixDocument:
    """Parsed matrix together with the format it came from"""
    matrix: TropMatrix
    source_format: str = 'plain'

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.shape


@dataclass
class RunReport:
    """Outcome of one CLI command"""
    command: str
    inputs_digest: Optional[str] = None
    payload: Dict = field(default_factory=dict)
    validation: Dict[str, bool] = field(default_factory=dict)
    wall_time: float = 0.0
    exit_code: int = 0
    error: Optional[str] = None

    def to_dict(self):
        return {
            'command': self.command,
            'inputs_digest': self.inputs_digest,
            'result': self.payload,
            'validation': self.validation,
            'wall_time': round(self.wall_time, 6),
            'exit_code': self.exit_code,
            'error': self.error
        }


@dataclass
class CheckResult:
    """Pass/fail tally of one cross-validation criterion"""
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, success: bool, detail: str = None) -> None:
        if success:
            self.passed += 1
            return
        self.failed += 1
        if self.first_failure is None:
            self.first_failure = detail

    def to_dict(self):
        return {
            'name': self.name,
            'passed': self.passed,
            'failed': self.failed,
            'first_failure': self.first_failure
        }


@dataclass(frozen=True)
class BenchRow:
    """Timings for one matrix order; brute_seconds is None above the guard"""
    n: int
    brute_seconds: Optional[float]
    fast_seconds: float
    agree: Optional[bool] = None
    within_budget: bool = True

    def to_dict(self):
        return {
            'n': self.n,
            'brute_s': None if self.brute_seconds is None else round(self.brute_seconds, 6),
            'fast_s': round(self.fast_seconds, 6),
            'agree': self.agree,
            'within_budget': self.within_budget
        }
