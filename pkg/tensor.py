"""
Vectors and rectangular matrices over the extended tropical semiring

All values are immutable and every index in the public interface is
1-based, matching the usual a_{i,j} notation.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from exceptions import ShapeMismatchError, ValidationError
from semiring import (
    NEG_INF,
    ONE,
    Kind,
    TropScalar,
    format_scalar,
    ghost,
    is_ghost,
    parse_scalar,
    strip,
    tsum,
)
from validators import MatrixValidator


def as_scalar(value) -> TropScalar:
    """Coerce an int, a text token or a TropScalar into a TropScalar"""
    if isinstance(value, TropScalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    return TropScalar.real(value)


@dataclass(frozen=True)
class TropVector:
    """Fixed-length tuple of tropical scalars"""
    entries: Tuple[TropScalar, ...]

    def __post_init__(self):
        if len(self.entries) < 1:
            raise ValidationError("A vector needs at least one entry", field="entries")

    @classmethod
    def of(cls, values: Iterable) -> 'TropVector':
        return cls(tuple(as_scalar(v) for v in values))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index: int) -> TropScalar:
        """1-based entry access"""
        MatrixValidator.validate_index(index, len(self.entries))
        return self.entries[index - 1]

    def to_list(self) -> List[str]:
        return [format_scalar(x) for x in self.entries]

    def __str__(self) -> str:
        return '(' + ', '.join(self.to_list()) + ')'


@dataclass(frozen=True)
class TropMatrix:
    """Dense m x n matrix over T, stored row-major"""
    rows: Tuple[Tuple[TropScalar, ...], ...]

    def __post_init__(self):
        if len(self.rows) < 1 or len(self.rows[0]) < 1:
            raise ValidationError("A matrix needs at least one row and one column", field="rows")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width:
                raise ShapeMismatchError('matrix construction', (len(self.rows), width), (1, len(row)))

    @classmethod
    def of(cls, values: Iterable[Iterable]) -> 'TropMatrix':
        """Build from nested ints, text tokens or scalars"""
        return cls(tuple(tuple(as_scalar(v) for v in row) for row in values))

    @classmethod
    def from_rows(cls, vectors: Sequence[TropVector]) -> 'TropMatrix':
        MatrixValidator.validate_lengths((len(v) for v in vectors), 'stacking vectors')
        return cls(tuple(v.entries for v in vectors))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.m, self.n)

    def entry(self, i: int, j: int) -> TropScalar:
        """Entry a_{i,j} (1-based)"""
        MatrixValidator.validate_index(i, self.m, 'row')
        MatrixValidator.validate_index(j, self.n, 'column')
        return self.rows[i - 1][j - 1]

    def row(self, i: int) -> TropVector:
        MatrixValidator.validate_index(i, self.m, 'row')
        return TropVector(self.rows[i - 1])

    def col(self, j: int) -> TropVector:
        MatrixValidator.validate_index(j, self.n, 'column')
        return TropVector(tuple(r[j - 1] for r in self.rows))

    def row_vectors(self) -> List[TropVector]:
        return [TropVector(r) for r in self.rows]

    def to_lists(self) -> List[List[str]]:
        return [[format_scalar(x) for x in row] for row in self.rows]

    def __add__(self, other: 'TropMatrix') -> 'TropMatrix':
        return mat_add(self, other)

    def __matmul__(self, other: 'TropMatrix') -> 'TropMatrix':
        return mat_mul(self, other)

    def __str__(self) -> str:
        return '\n'.join(' '.join(row) for row in self.to_lists())


# ==================== CONSTRUCTION ====================

def identity(n: int) -> TropMatrix:
    """Unit matrix I: 0 on the diagonal, -inf elsewhere"""
    MatrixValidator.validate_integer_range(n, 'n', min_value=1)
    return TropMatrix(tuple(
        tuple(ONE if i == j else NEG_INF for j in range(n)) for i in range(n)
    ))


def zero_matrix(m: int, n: int) -> TropMatrix:
    """Zero matrix Z: every entry -inf"""
    MatrixValidator.validate_integer_range(m, 'm', min_value=1)
    MatrixValidator.validate_integer_range(n, 'n', min_value=1)
    return TropMatrix(tuple(tuple(NEG_INF for _ in range(n)) for _ in range(m)))


def standard_base(n: int) -> List[TropVector]:
    """Standard base e_1, ..., e_n of T^(n)"""
    return identity(n).row_vectors()


# ==================== ARITHMETIC ====================

def mat_add(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Entrywise ⊕"""
    MatrixValidator.validate_same_shape(a, b, 'matrix sum')
    return TropMatrix(tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows)
    ))


def mat_mul(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Tropical product: entry (i,j) is ⊕_k a_{i,k} ⊙ b_{k,j}"""
    MatrixValidator.validate_product_shapes(a, b)
    columns = list(zip(*b.rows))
    return TropMatrix(tuple(
        tuple(tsum(x * y for x, y in zip(row, col)) for col in columns)
        for row in a.rows
    ))


def scale(x: TropScalar, a: TropMatrix) -> TropMatrix:
    """Scalar product x A (= A x, T is commutative)"""
    return TropMatrix(tuple(tuple(x * y for y in row) for row in a.rows))


def vec_mat(v: TropVector, a: TropMatrix) -> TropVector:
    """Row vector times matrix"""
    if len(v) != a.m:
        raise ShapeMismatchError('vector-matrix product', (1, len(v)), a.shape)
    return TropVector(tuple(
        tsum(c * a.rows[i][j] for i, c in enumerate(v.entries)) for j in range(a.n)
    ))


def combine(coefficients: Sequence[TropScalar], rows: Sequence[TropVector]) -> TropVector:
    """Linear combination ⊕_i α_i ⊙ r_i"""
    if len(coefficients) != len(rows):
        raise ShapeMismatchError('linear combination', (len(coefficients),), (len(rows),))
    return vec_mat(TropVector(tuple(coefficients)), TropMatrix.from_rows(rows))


# ==================== SHAPE TRANSFORMATIONS ====================

def transpose(a: TropMatrix) -> TropMatrix:
    return TropMatrix(tuple(zip(*a.rows)))


def minor(a: TropMatrix, i: int, j: int) -> TropMatrix:
    """Delete row i and column j"""
    MatrixValidator.validate_min_size(a, 2, 'minor')
    MatrixValidator.validate_index(i, a.m, 'row')
    MatrixValidator.validate_index(j, a.n, 'column')
    return TropMatrix(tuple(
        tuple(x for c, x in enumerate(row, 1) if c != j)
        for r, row in enumerate(a.rows, 1) if r != i
    ))


def submatrix(a: TropMatrix, rowset: Sequence[int], colset: Sequence[int]) -> TropMatrix:
    """Extract rows `rowset` and columns `colset`, in the given order"""
    MatrixValidator.validate_index_set(rowset, a.m, 'row')
    MatrixValidator.validate_index_set(colset, a.n, 'column')
    return TropMatrix(tuple(
        tuple(a.rows[i - 1][j - 1] for j in colset) for i in rowset
    ))


def permute_rows(a: TropMatrix, order: Sequence[int]) -> TropMatrix:
    """Row k of the result is row order[k] of `a`"""
    if sorted(order) != list(range(1, a.m + 1)):
        raise ValidationError("Row order must be a permutation of 1..m", field="order")
    return TropMatrix(tuple(a.rows[i - 1] for i in order))


def permute_cols(a: TropMatrix, order: Sequence[int]) -> TropMatrix:
    """Column k of the result is column order[k] of `a`"""
    if sorted(order) != list(range(1, a.n + 1)):
        raise ValidationError("Column order must be a permutation of 1..n", field="order")
    return TropMatrix(tuple(tuple(row[j - 1] for j in order) for row in a.rows))


def scale_row(a: TropMatrix, i: int, c: TropScalar) -> TropMatrix:
    MatrixValidator.validate_index(i, a.m, 'row')
    return TropMatrix(tuple(
        tuple(c * x for x in row) if r == i else row for r, row in enumerate(a.rows, 1)
    ))


def scale_col(a: TropMatrix, j: int, c: TropScalar) -> TropMatrix:
    MatrixValidator.validate_index(j, a.n, 'column')
    return TropMatrix(tuple(
        tuple(c * x if k == j else x for k, x in enumerate(row, 1)) for row in a.rows
    ))


def append_row(a: TropMatrix, v: TropVector) -> TropMatrix:
    if len(v) != a.n:
        raise ShapeMismatchError('append row', a.shape, (1, len(v)))
    return TropMatrix(a.rows + (v.entries,))


def duplicate_column(a: TropMatrix, j: int) -> TropMatrix:
    """Append a copy of column j as a new last column"""
    MatrixValidator.validate_index(j, a.n, 'column')
    return TropMatrix(tuple(row + (row[j - 1],) for row in a.rows))


# ==================== PREDICATES AND ENTRYWISE MAPS ====================

def is_ghost_vector(v: TropVector) -> bool:
    """Every entry ghost or -inf"""
    return all(is_ghost(x) for x in v.entries)


def is_real_matrix(a: TropMatrix) -> bool:
    """Every entry in R ∪ {-inf}"""
    return all(x.kind is not Kind.GHOST for row in a.rows for x in row)


def is_ghost_matrix(a: TropMatrix) -> bool:
    """Every entry in Ū"""
    return all(is_ghost(x) for row in a.rows for x in row)


def project_matrix(a: TropMatrix) -> TropMatrix:
    """Entrywise π, embedded back into T"""
    return TropMatrix(tuple(tuple(strip(x) for x in row) for row in a.rows))


def ghostify_matrix(a: TropMatrix) -> TropMatrix:
    """Entrywise ν"""
    return TropMatrix(tuple(tuple(ghost(x) for x in row) for row in a.rows))
