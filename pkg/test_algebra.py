"""
Unit tests for the scalar semiring, matrices and the matrix text formats

This demonstrates:
- Exact checks against the operation tables of ⊕, ⊙ and the order
- Property-based checks of the semiring axioms with hypothesis
- Parser errors carrying line and column
"""

import json
import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from exceptions import (
    IndexOutOfRangeError,
    MatrixParseError,
    MatrixShapeError,
    NegInfDivisionError,
    ShapeMismatchError,
    ValidationError,
)
from matrix_io import digest, format_matrix, parse_matrix, parse_vector, structured_to_matrix
from semiring import (
    NEG_INF,
    ONE,
    Kind,
    Ordering,
    TropScalar,
    compare,
    div,
    format_scalar,
    ghost,
    is_ghost,
    nu_equal,
    parse_scalar,
    power,
    realize,
    strip,
    tprod,
    tsum,
)
from tensor import (
    TropMatrix,
    TropVector,
    append_row,
    ghostify_matrix,
    identity,
    is_ghost_matrix,
    is_ghost_vector,
    is_real_matrix,
    mat_add,
    mat_mul,
    minor,
    project_matrix,
    scale,
    scale_col,
    scale_row,
    standard_base,
    submatrix,
    transpose,
    vec_mat,
    zero_matrix,
)

WORKED = [[1, 4, -1], [1, 0, 6], [-4, 1, 3]]


def real(value):
    return TropScalar.real(value)


def gh(value):
    return TropScalar.ghost(value)


magnitudes = st.one_of(
    st.integers(min_value=-9, max_value=9),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
)
scalars = st.one_of(
    st.just(NEG_INF),
    st.builds(TropScalar.real, magnitudes),
    st.builds(TropScalar.ghost, magnitudes),
)


def matrices(min_n=1, max_n=4):
    return st.integers(min_value=min_n, max_value=max_n).flatmap(
        lambda m: st.integers(min_value=min_n, max_value=max_n).flatmap(
            lambda n: st.lists(
                st.lists(scalars, min_size=n, max_size=n).map(tuple),
                min_size=m, max_size=m
            ).map(lambda rows: TropMatrix(tuple(rows)))
        )
    )


def sized_matrices(m, n):
    return st.lists(
        st.lists(scalars, min_size=n, max_size=n).map(tuple),
        min_size=m, max_size=m
    ).map(lambda rows: TropMatrix(tuple(rows)))


dims = st.integers(min_value=1, max_value=3)


class TestSemiring(unittest.TestCase):
    """Test suite for scalar arithmetic"""

    # ==================== ADDITION TESTS ====================

    def test_add_distinct_reals(self):
        """Test 1 ⊕ 2 is the larger value"""
        self.assertEqual(real(1) + real(2), real(2))

    def test_add_equal_reals_ghostifies(self):
        """Test 2 ⊕ 2 = 2^ν"""
        self.assertEqual(real(2) + real(2), gh(2))

    def test_add_real_and_its_ghost(self):
        """Test 2 ⊕ 2^ν = 2^ν"""
        self.assertEqual(real(2) + gh(2), gh(2))

    def test_add_neg_inf_is_identity(self):
        """Test -inf ⊕ 5^ν = 5^ν"""
        self.assertEqual(NEG_INF + gh(5), gh(5))
        self.assertEqual(tsum([]), NEG_INF)

    # ==================== MULTIPLICATION TESTS ====================

    def test_mul_reals(self):
        """Test 1 ⊙ 2 = 3"""
        self.assertEqual(real(1) * real(2), real(3))

    def test_mul_ghost_absorbs(self):
        """Test 1^ν ⊙ 2 = 3^ν"""
        self.assertEqual(gh(1) * real(2), gh(3))

    def test_mul_neg_inf_annihilates(self):
        """Test -inf ⊙ 7^ν = -inf"""
        self.assertEqual(NEG_INF * gh(7), NEG_INF)
        self.assertEqual(tprod([]), ONE)

    def test_div(self):
        """Test division subtracts magnitudes and keeps the ghost tag"""
        self.assertEqual(div(real(5), real(2)), real(3))
        self.assertEqual(gh(5) / real(2), gh(3))
        self.assertEqual(NEG_INF / real(2), NEG_INF)

    def test_div_by_neg_inf_raises(self):
        """Test dividing by -inf raises NegInfDivisionError"""
        with self.assertRaises(NegInfDivisionError):
            div(real(3), NEG_INF)

    def test_power(self):
        """Test ⊙-powers multiply the magnitude"""
        self.assertEqual(power(real(2), 3), real(6))
        self.assertEqual(power(gh(2), 0), ONE)
        with self.assertRaises(ValidationError):
            power(real(1), -1)

    # ==================== ORDER AND MAPS TESTS ====================

    def test_compare(self):
        """Test -inf ≺ 5 ≺ 5^ν ≺ 6"""
        self.assertEqual(compare(NEG_INF, real(5)), Ordering.LESS)
        self.assertEqual(compare(real(5), gh(5)), Ordering.LESS)
        self.assertEqual(compare(gh(5), real(6)), Ordering.LESS)
        self.assertEqual(compare(gh(5), gh(5)), Ordering.EQUAL)
        self.assertEqual(compare(real(6), gh(5)), Ordering.GREATER)

    def test_ghost_map(self):
        """Test ν on each variant"""
        self.assertEqual(ghost(real(3)), gh(3))
        self.assertEqual(ghost(gh(3)), gh(3))
        self.assertEqual(ghost(NEG_INF), NEG_INF)

    def test_realize_and_strip(self):
        """Test π drops the ghost tag"""
        self.assertEqual(realize(gh(3)).value, Fraction(3))
        self.assertEqual(realize(real(3)).value, Fraction(3))
        self.assertTrue(realize(NEG_INF).is_neg_inf)
        self.assertEqual(strip(gh(3)), real(3))

    def test_is_ghost(self):
        """Test membership in Ū"""
        self.assertTrue(is_ghost(gh(3)))
        self.assertTrue(is_ghost(NEG_INF))
        self.assertFalse(is_ghost(real(3)))

    def test_nu_equal(self):
        """Test ν-equality ignores the tag"""
        self.assertTrue(nu_equal(real(4), gh(4)))
        self.assertFalse(nu_equal(real(4), real(5)))

    def test_float_magnitude_rejected(self):
        """Test floats are refused as magnitudes"""
        with self.assertRaises(ValidationError):
            TropScalar.real(0.5)

    # ==================== TEXT FORM TESTS ====================

    def test_parse_scalar_grammar(self):
        """Test every token form"""
        self.assertEqual(parse_scalar('2g'), gh(2))
        self.assertEqual(parse_scalar('-inf'), NEG_INF)
        self.assertEqual(parse_scalar('3/2'), real(Fraction(3, 2)))
        self.assertEqual(parse_scalar('-7'), real(-7))
        self.assertEqual(parse_scalar('1.25'), real(Fraction(5, 4)))
        self.assertEqual(parse_scalar('-0.5g'), gh(Fraction(-1, 2)))

    def test_parse_scalar_invalid(self):
        """Test malformed tokens raise MatrixParseError"""
        for token in ('abc', '1/0', '2gg', 'inf', '', '1e3'):
            with self.assertRaises(MatrixParseError):
                parse_scalar(token)

    def test_format_scalar(self):
        """Test canonical rendering"""
        self.assertEqual(format_scalar(real(Fraction(6, 4))), '3/2')
        self.assertEqual(format_scalar(gh(5)), '5g')
        self.assertEqual(format_scalar(NEG_INF), '-inf')
        self.assertEqual(format_scalar(real(-2)), '-2')

    # ==================== PROPERTY TESTS ====================

    @settings(max_examples=300)
    @given(scalars, scalars, scalars)
    def test_semiring_axioms(self, x, y, z):
        """Test associativity, commutativity and distributivity"""
        self.assertEqual((x + y) + z, x + (y + z))
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x + y, y + x)
        self.assertEqual(x * y, y * x)
        self.assertEqual(x * (y + z), x * y + x * z)

    @given(scalars)
    def test_self_sum_is_ghost(self, x):
        """Test a ⊕ a = a^ν"""
        self.assertEqual(x + x, ghost(x))

    @given(scalars, scalars)
    def test_realize_is_homomorphism(self, x, y):
        """Test π(x ⊕ y) = π(x) ⊕ π(y) and π(x ⊙ y) = π(x) ⊙ π(y)"""
        self.assertEqual(realize(x + y), realize(x) + realize(y))
        self.assertEqual(realize(x * y), realize(x) * realize(y))

    @given(scalars)
    def test_format_parse_round_trip(self, x):
        """Test the canonical text form parses back exactly"""
        self.assertEqual(parse_scalar(format_scalar(x)), x)

    @settings(max_examples=300)
    @given(scalars, scalars, scalars)
    def test_compare_is_total_order(self, x, y, z):
        """Test ≺ is antisymmetric, transitive and total"""
        flipped = {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS,
                   Ordering.EQUAL: Ordering.EQUAL}
        self.assertEqual(compare(y, x), flipped[compare(x, y)])
        self.assertEqual(compare(x, y) is Ordering.EQUAL, x == y)
        if compare(x, y) is not Ordering.GREATER and compare(y, z) is not Ordering.GREATER:
            self.assertIsNot(compare(x, z), Ordering.GREATER)

    @given(scalars, st.builds(TropScalar.real, magnitudes))
    def test_div_undoes_mul(self, x, y):
        """Test (x ⊙ y) / y = x and (x / y) ⊙ y = x for real y"""
        self.assertEqual(div(x * y, y), x)
        self.assertEqual(div(x, y) * y, x)


class TestTensor(unittest.TestCase):
    """Test suite for vectors and matrices"""

    def setUp(self):
        """Set up test fixtures"""
        self.worked = TropMatrix.of(WORKED)

    # ==================== CONSTRUCTION TESTS ====================

    def test_identity(self):
        """Test the unit matrix"""
        self.assertEqual(identity(2), TropMatrix.of([[0, '-inf'], ['-inf', 0]]))

    def test_zero_matrix(self):
        """Test the zero matrix"""
        self.assertEqual(zero_matrix(1, 2), TropMatrix.of([['-inf', '-inf']]))

    def test_standard_base(self):
        """Test row i of the identity is e_i"""
        base = standard_base(3)
        self.assertEqual(base[1], identity(3).row(2))
        self.assertEqual(base[1].to_list(), ['-inf', '0', '-inf'])

    def test_ragged_rows_rejected(self):
        """Test rows of different length raise ShapeMismatchError"""
        with self.assertRaises(ShapeMismatchError):
            TropMatrix.of([[1, 2], [3]])

    def test_empty_vector_rejected(self):
        """Test an empty vector raises ValidationError"""
        with self.assertRaises(ValidationError):
            TropVector(())

    def test_index_is_one_based(self):
        """Test entry access and its range check"""
        self.assertEqual(self.worked.entry(2, 3), real(6))
        with self.assertRaises(IndexOutOfRangeError):
            self.worked.entry(0, 1)
        with self.assertRaises(IndexOutOfRangeError):
            self.worked.col(4)

    # ==================== ARITHMETIC TESTS ====================

    def test_mat_mul_identity(self):
        """Test I ⊙ A = A"""
        self.assertEqual(mat_mul(identity(3), self.worked), self.worked)

    def test_mat_mul_column(self):
        """Test a product computed by hand"""
        a = TropMatrix.of([[0, 1], [2, 0]])
        b = TropMatrix.of([[0], [0]])
        self.assertEqual(a @ b, TropMatrix.of([[1], [2]]))

    def test_mat_mul_shape_mismatch(self):
        """Test incompatible shapes raise ShapeMismatchError"""
        with self.assertRaises(ShapeMismatchError):
            mat_mul(self.worked, TropMatrix.of([[0, 1]]))

    def test_mat_add_ghostifies_ties(self):
        """Test entrywise ⊕"""
        result = mat_add(TropMatrix.of([[1, 2]]), TropMatrix.of([[1, 3]]))
        self.assertEqual(result, TropMatrix(((gh(1), real(3)),)))

    def test_scale(self):
        """Test 1 ⊙ (0, 1) = (1, 2)"""
        self.assertEqual(scale(real(1), TropMatrix.of([[0, 1]])), TropMatrix.of([[1, 2]]))

    def test_scale_row_and_col(self):
        """Test scaling one line leaves the others alone"""
        a = TropMatrix.of([[0, 1], [2, '-inf']])
        self.assertEqual(scale_row(a, 2, real(1)), TropMatrix.of([[0, 1], [3, '-inf']]))
        self.assertEqual(scale_col(a, 1, gh(1)), TropMatrix(((gh(1), real(1)), (gh(3), NEG_INF))))
        with self.assertRaises(IndexOutOfRangeError):
            scale_row(a, 3, real(1))

    def test_append_row(self):
        """Test the new row goes last and its length is checked"""
        a = TropMatrix.of([[0, 1]])
        self.assertEqual(append_row(a, TropVector.of(['2g', '-inf'])),
                         TropMatrix(((real(0), real(1)), (gh(2), NEG_INF))))
        with self.assertRaises(ShapeMismatchError):
            append_row(a, TropVector.of([0]))

    # ==================== ALGEBRA PROPERTY TESTS ====================

    @settings(max_examples=100)
    @given(dims, dims, dims, dims, st.data())
    def test_mat_mul_associative(self, m, k, p, n, data):
        """Test (AB)C = A(BC)"""
        a = data.draw(sized_matrices(m, k))
        b = data.draw(sized_matrices(k, p))
        c = data.draw(sized_matrices(p, n))
        self.assertEqual(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)))

    @given(dims, dims, dims, st.data())
    def test_mat_mul_distributes_over_mat_add(self, m, k, n, data):
        """Test A(B ⊕ C) = AB ⊕ AC and (B ⊕ C)D = BD ⊕ CD"""
        a = data.draw(sized_matrices(m, k))
        b = data.draw(sized_matrices(k, n))
        c = data.draw(sized_matrices(k, n))
        d = data.draw(sized_matrices(n, m))
        self.assertEqual(mat_mul(a, mat_add(b, c)), mat_add(mat_mul(a, b), mat_mul(a, c)))
        self.assertEqual(mat_mul(mat_add(b, c), d), mat_add(mat_mul(b, d), mat_mul(c, d)))

    @given(matrices())
    def test_identity_and_zero_matrix(self, a):
        """Test I is a two-sided unit; Z is neutral for ⊕ and absorbing for ⊙"""
        m, n = a.shape
        self.assertEqual(mat_mul(identity(m), a), a)
        self.assertEqual(mat_mul(a, identity(n)), a)
        self.assertEqual(mat_add(zero_matrix(m, n), a), a)
        self.assertEqual(mat_mul(zero_matrix(2, m), a), zero_matrix(2, n))
        self.assertEqual(mat_mul(a, zero_matrix(n, 2)), zero_matrix(m, 2))

    @given(dims, dims, dims, st.data())
    def test_project_matrix_respects_operations(self, m, k, n, data):
        """Test π(AB) = π(π(A)π(B)) and π(A ⊕ B) = π(π(A) ⊕ π(B))"""
        a = data.draw(sized_matrices(m, k))
        b = data.draw(sized_matrices(k, n))
        other = data.draw(sized_matrices(m, k))
        self.assertEqual(project_matrix(mat_mul(a, b)),
                         project_matrix(mat_mul(project_matrix(a), project_matrix(b))))
        self.assertEqual(project_matrix(mat_add(a, other)),
                         project_matrix(mat_add(project_matrix(a), project_matrix(other))))

    @given(dims, dims, dims, scalars, st.data())
    def test_scaling_commutes_with_products(self, m, k, n, c, data):
        """Test scaling row i of A or column j of B scales that line of AB"""
        a = data.draw(sized_matrices(m, k))
        b = data.draw(sized_matrices(k, n))
        i = data.draw(st.integers(min_value=1, max_value=m))
        j = data.draw(st.integers(min_value=1, max_value=n))
        product = mat_mul(a, b)
        self.assertEqual(mat_mul(scale_row(a, i, c), b), scale_row(product, i, c))
        self.assertEqual(mat_mul(a, scale_col(b, j, c)), scale_col(product, j, c))

    @given(dims, dims, dims, st.data())
    def test_append_row_extends_product(self, m, k, n, data):
        """Test appending v to A appends vB to AB"""
        a = data.draw(sized_matrices(m, k))
        b = data.draw(sized_matrices(k, n))
        v = TropVector(tuple(data.draw(st.lists(scalars, min_size=k, max_size=k))))
        extended = append_row(a, v)
        self.assertEqual(extended.row(m + 1), v)
        self.assertEqual(mat_mul(extended, b), append_row(mat_mul(a, b), vec_mat(v, b)))

    # ==================== SHAPE TESTS ====================

    def test_minor(self):
        """Test deleting row 1 and column 1 of the worked example"""
        self.assertEqual(minor(self.worked, 1, 1), TropMatrix.of([[0, 6], [1, 3]]))

    def test_submatrix(self):
        """Test extraction of rows {1,2} and columns {1,2}"""
        self.assertEqual(submatrix(self.worked, (1, 2), (1, 2)), TropMatrix.of([[1, 4], [1, 0]]))

    def test_submatrix_duplicate_index(self):
        """Test duplicate indices raise ValidationError"""
        with self.assertRaises(ValidationError):
            submatrix(self.worked, (1, 1), (1, 2))

    @given(matrices())
    def test_transpose_involution(self, a):
        """Test transposing twice gives the matrix back"""
        self.assertEqual(transpose(transpose(a)), a)

    # ==================== PREDICATE TESTS ====================

    def test_is_ghost_vector(self):
        """Test ghost vectors"""
        self.assertTrue(is_ghost_vector(TropVector((gh(2), NEG_INF))))
        self.assertFalse(is_ghost_vector(TropVector((gh(2), real(0)))))

    def test_project_matrix(self):
        """Test entrywise π"""
        projected = project_matrix(TropMatrix(((gh(8),),)))
        self.assertEqual(projected, TropMatrix.of([[8]]))
        self.assertTrue(is_real_matrix(projected))

    def test_is_ghost_matrix(self):
        """Test ghost matrices admit only ghost and -inf entries"""
        self.assertTrue(is_ghost_matrix(TropMatrix(((gh(1), NEG_INF),))))
        self.assertFalse(is_ghost_matrix(self.worked))
        self.assertTrue(is_ghost_matrix(ghostify_matrix(self.worked)))

    @given(matrices())
    def test_ghostify_matrix(self, a):
        """Test ν(A) = A ⊕ A is ghost, idempotent and keeps the projection"""
        ghosted = ghostify_matrix(a)
        self.assertTrue(is_ghost_matrix(ghosted))
        self.assertEqual(ghosted, mat_add(a, a))
        self.assertEqual(ghostify_matrix(ghosted), ghosted)
        self.assertEqual(project_matrix(ghosted), project_matrix(a))
        self.assertEqual(is_ghost_matrix(a), ghosted == a)


class TestMatrixIO(unittest.TestCase):
    """Test suite for the plain and structured matrix formats"""

    def test_parse_plain(self):
        """Test a 2x2 plain document"""
        document = parse_matrix("2 2\n0 1\n2 0\n")
        self.assertEqual(document.matrix, TropMatrix.of([[0, 1], [2, 0]]))
        self.assertEqual(document.source_format, 'plain')
        self.assertEqual(document.shape, (2, 2))

    def test_parse_worked_example(self):
        """Test the 3x3 worked example"""
        document = parse_matrix("3 3\n1 4 -1\n1 0 6\n-4 1 3\n")
        self.assertEqual(document.matrix, TropMatrix.of(WORKED))

    def test_parse_skips_comments_and_blanks(self):
        """Test '#' lines and blank lines are ignored"""
        text = "# header comment\n1 3\n\n2g -inf 3/2\n"
        matrix = parse_matrix(text).matrix
        self.assertEqual(matrix.rows[0], (gh(2), NEG_INF, real(Fraction(3, 2))))

    def test_parse_row_length_mismatch(self):
        """Test a short row raises MatrixShapeError with its line"""
        with self.assertRaises(MatrixShapeError) as caught:
            parse_matrix("2 2\n0 1\n2\n")
        self.assertEqual(caught.exception.line, 3)
        self.assertEqual(caught.exception.expected, 2)
        self.assertEqual(caught.exception.got, 1)

    def test_parse_bad_token_location(self):
        """Test a bad token reports line and column"""
        with self.assertRaises(MatrixParseError) as caught:
            parse_matrix("2 2\n0  x\n1 2\n")
        self.assertEqual(caught.exception.line, 2)
        self.assertEqual(caught.exception.column, 4)
        self.assertIn('line 2, column 4', caught.exception.message)

    def test_parse_bad_header(self):
        """Test a malformed header raises MatrixParseError"""
        for text in ("a b\n1\n", "0 2\n", "2\n1 2\n", ""):
            with self.assertRaises(MatrixParseError):
                parse_matrix(text)

    def test_parse_row_count_mismatch(self):
        """Test a missing row raises MatrixParseError"""
        with self.assertRaises(MatrixParseError):
            parse_matrix("3 2\n0 1\n2 0\n")

    def test_parse_structured(self):
        """Test the structured format with ghost and -inf cells"""
        text = json.dumps({'rows': [
            [{'v': '3/2', 'g': True}, {'neginf': True}],
            [{'v': '0', 'g': False}, '4g'],
        ]})
        document = parse_matrix(text)
        self.assertEqual(document.source_format, 'json')
        self.assertEqual(document.matrix.rows[0], (gh(Fraction(3, 2)), NEG_INF))
        self.assertEqual(document.matrix.rows[1], (ONE, gh(4)))

    def test_parse_structured_errors(self):
        """Test malformed structured documents"""
        with self.assertRaises(MatrixParseError) as caught:
            parse_matrix('{"rows": [[1, 2],')
        self.assertIsNotNone(caught.exception.line)
        with self.assertRaises(MatrixShapeError):
            structured_to_matrix({'rows': [[1, 2], [3]]})
        with self.assertRaises(MatrixParseError):
            structured_to_matrix({'rows': [[{'g': True}]]})
        with self.assertRaises(MatrixParseError):
            structured_to_matrix({'rows': [[1, 2]], 'shape': [2, 2]})
        with self.assertRaises(MatrixParseError):
            structured_to_matrix({'rows': []})

    def test_structured_cell_kind(self):
        """Test the structured form keeps the kind"""
        matrix = structured_to_matrix({'rows': [[{'v': '2', 'g': True}, 5]]})
        self.assertEqual(matrix.rows[0][0].kind, Kind.GHOST)
        self.assertEqual(matrix.rows[0][1], real(5))

    def test_format_plain_is_canonical(self):
        """Test format -> parse -> format is byte-identical"""
        text = "2 3\n1/2 -inf 3g\n0 -7 2\n"
        self.assertEqual(format_matrix(parse_matrix(text).matrix), text)

    @settings(max_examples=50)
    @given(matrices())
    def test_both_formats_parse_back(self, a):
        """Test plain and structured renderings decode to the same matrix"""
        self.assertEqual(parse_matrix(format_matrix(a, 'plain')).matrix, a)
        self.assertEqual(parse_matrix(format_matrix(a, 'json')).matrix, a)

    def test_parse_vector(self):
        """Test spaces and commas both separate tokens"""
        self.assertEqual(parse_vector("0, -1").to_list(), ['0', '-1'])
        self.assertEqual(parse_vector("2g -inf").to_list(), ['2g', '-inf'])
        with self.assertRaises(MatrixParseError):
            parse_vector("  ")

    def test_digest_is_stable(self):
        """Test equal matrices share a digest"""
        a = parse_matrix("1 2\n1 2\n").matrix
        b = parse_matrix('{"rows": [["1", "2"]]}').matrix
        self.assertEqual(digest(a), digest(b))
        self.assertEqual(len(digest(a)), 64)


if __name__ == '__main__':
    unittest.main()
