"""
HTTP tests for the API blueprints

Runs every endpoint through Flask's test client; smoke_api.py does the
same against a live server.
"""

import unittest

from app import create_app

WORKED = {'rows': [['1', '4', '-1'], ['1', '0', '6'], ['-4', '1', '3']]}
INVERTIBLE = {'rows': [['0', '1'], ['2', '0']]}
SPARSE = {'rows': [['0', '-inf'], ['0', '-inf']]}


class BaseTestCase(unittest.TestCase):
    """Base test case with an application and test client"""

    def setUp(self):
        """Create the application and client"""
        self.app = create_app()
        self.app.config['TESTING'] = True
        self.client = self.app.test_client()

    def post(self, path, body):
        """Helper method to POST a JSON body"""
        return self.client.post(path, json=body)

    def assertSuccess(self, response, status=200):
        self.assertEqual(response.status_code, status, response.get_json())
        payload = response.get_json()
        self.assertTrue(payload['success'])
        return payload.get('data')

    def assertFailure(self, response, status):
        self.assertEqual(response.status_code, status, response.get_json())
        payload = response.get_json()
        self.assertFalse(payload['success'])
        return payload['error']


class TestInfoRoutes(BaseTestCase):
    """Test suite for the info blueprint"""

    def test_home(self):
        """Test the endpoint listing"""
        response = self.client.get('/')
        self.assertEqual(response.status_code, 200)
        self.assertIn('POST /matrices/det', response.get_json()['endpoints']['matrices'])

    def test_health(self):
        """Test the health check"""
        response = self.client.get('/health')
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.get_json()['status'], 'healthy')
        self.assertEqual(response.get_json()['unit_det'], '0')

    def test_not_found(self):
        """Test unknown paths return 404"""
        self.assertFailure(self.client.get('/nowhere'), 404)

    def test_method_not_allowed(self):
        """Test GET on a POST endpoint returns 405"""
        self.assertFailure(self.client.get('/matrices/det'), 405)


class TestMatrixRoutes(BaseTestCase):
    """Test suite for the matrices blueprint"""

    # ==================== DETERMINANT TESTS ====================

    def test_det_worked_example(self):
        """Test the worked 3x3 example is 8g"""
        data = self.assertSuccess(self.post('/matrices/det', {'matrix': WORKED}))
        self.assertEqual(data['determinant'], '8g')
        self.assertEqual(data['tag'], 'ghost')
        self.assertTrue(data['singular'])
        self.assertEqual([p['sigma'] for p in data['achieving_permutations']], [[1, 3, 2], [2, 1, 3]])

    def test_det_methods_agree(self):
        """Test every method over HTTP"""
        for method in ('brute', 'expand', 'fast', 'auto'):
            data = self.assertSuccess(self.post('/matrices/det', {'matrix': WORKED, 'method': method}))
            self.assertEqual(data['determinant'], '8g')
            self.assertEqual(data['method'], method)

    def test_det_structured_cells(self):
        """Test object cells with ghost and -inf markers"""
        matrix = {'rows': [[{'v': '0', 'g': False}, {'neginf': True}],
                           [{'v': '1', 'g': True}, {'v': '2', 'g': False}]]}
        data = self.assertSuccess(self.post('/matrices/det', {'matrix': matrix}))
        self.assertEqual(data['determinant'], '2')
        self.assertEqual(data['tag'], 'real')

    def test_det_missing_matrix(self):
        """Test a body without a matrix returns 400"""
        error = self.assertFailure(self.post('/matrices/det', {}), 400)
        self.assertIn('matrix', error)

    def test_det_bad_token(self):
        """Test an unparsable cell returns 400"""
        matrix = {'rows': [['0', 'x'], ['1', '2']]}
        self.assertFailure(self.post('/matrices/det', {'matrix': matrix}), 400)

    def test_det_unknown_method(self):
        """Test an unknown method returns 400"""
        body = {'matrix': WORKED, 'method': 'gauss'}
        self.assertFailure(self.post('/matrices/det', body), 400)

    def test_det_non_square(self):
        """Test a 2x3 matrix returns 400"""
        matrix = {'rows': [['0', '1', '2'], ['1', '2', '3']]}
        self.assertFailure(self.post('/matrices/det', {'matrix': matrix}), 400)

    def test_det_brute_size_guard(self):
        """Test brute force above its order cap returns 413"""
        matrix = {'rows': [['0'] * 11 for _ in range(11)]}
        self.assertFailure(self.post('/matrices/det', {'matrix': matrix, 'method': 'brute'}), 413)

    def test_adjoint(self):
        """Test the adjoint of the worked example"""
        data = self.assertSuccess(self.post('/matrices/adjoint', {'matrix': WORKED}))
        self.assertEqual(data['adjoint'], [['7', '7', '10'], ['4', '4', '7'], ['2', '2', '5']])

    # ==================== INVERSE AND RANK TESTS ====================

    def test_pinv(self):
        """Test the pseudo inverse and both product reports"""
        data = self.assertSuccess(self.post('/matrices/pinv', {'matrix': INVERTIBLE}))
        self.assertEqual(data['pseudo_inverse'], [['-3', '-2'], ['-1', '-3']])
        self.assertTrue(data['right_product']['verdict'])
        self.assertTrue(data['left_product']['verdict'])
        self.assertEqual(data['right_product']['failures'], [])

    def test_pinv_singular(self):
        """Test a singular matrix returns 422"""
        error = self.assertFailure(self.post('/matrices/pinv', {'matrix': WORKED}), 422)
        self.assertIn('tropically singular', error)

    def test_rank(self):
        """Test the worked example has rank 2"""
        data = self.assertSuccess(self.post('/matrices/rank', {'matrix': WORKED}))
        self.assertEqual(data['rank'], 2)
        self.assertEqual(data['minor']['size'], 2)

    def test_certificate(self):
        """Test a -inf determinant carries a certificate"""
        data = self.assertSuccess(self.post('/matrices/certificate', {'matrix': SPARSE}))
        found = data['certificate']
        self.assertIsNotNone(found)
        self.assertEqual(len(found['rows']) + len(found['cols']), 3)
        self.assertIn(2, found['cols'])

    def test_certificate_absent(self):
        """Test a finite determinant has no certificate"""
        data = self.assertSuccess(self.post('/matrices/certificate', {'matrix': WORKED}))
        self.assertIsNone(data['certificate'])

    def test_digraph(self):
        """Test the edge list and reduced 0-graph"""
        data = self.assertSuccess(self.post('/matrices/digraph', {'matrix': SPARSE}))
        self.assertEqual(data['edge_list'], "1 1 0\n2 1 0\n")
        reduced = self.assertSuccess(self.post('/matrices/digraph', {'matrix': INVERTIBLE, 'zero': True}))
        self.assertEqual(reduced['edge_list'], "1 1 0\n2 2 0\n")


class TestVectorRoutes(BaseTestCase):
    """Test suite for the vectors blueprint"""

    def test_depend(self):
        """Test a dependent pair returns a witness"""
        data = self.assertSuccess(self.post('/vectors/depend', {'vectors': [['0', '1'], ['1', '2']]}))
        self.assertTrue(data['dependent'])
        self.assertEqual(data['witness']['coefficients'], ['1', '0'])

    def test_independent(self):
        """Test an independent pair"""
        data = self.assertSuccess(self.post('/vectors/depend', {'vectors': INVERTIBLE['rows']}))
        self.assertFalse(data['dependent'])
        self.assertIsNone(data['witness'])

    def test_witness(self):
        """Test the raw square witness of the worked example"""
        data = self.assertSuccess(self.post('/vectors/witness', {'vectors': WORKED['rows']}))
        self.assertEqual(data['witness']['coefficients'], ['7', '7', '10'])
        self.assertTrue(data['valid'])

    def test_witness_independent(self):
        """Test a nonsingular family returns 422"""
        self.assertFailure(self.post('/vectors/witness', {'vectors': INVERTIBLE['rows']}), 422)

    def test_missing_vectors(self):
        """Test a body without vectors returns 400"""
        self.assertFailure(self.post('/vectors/depend', {'rows': []}), 400)


class TestSystemRoutes(BaseTestCase):
    """Test suite for the systems blueprint"""

    def test_solve(self):
        """Test a pure-real solution of [[0,1],[-1,0]]"""
        body = {'matrix': {'rows': [['0', '1'], ['-1', '0']]}}
        data = self.assertSuccess(self.post('/systems/solve', body))
        solution = data['solution']
        self.assertEqual(solution['point'], ['0', '-1'])
        self.assertEqual(solution['kind'], 'pure-real')
        self.assertTrue(solution['is_solution'])

    def test_solve_point(self):
        """Test evaluating a given point"""
        body = {'matrix': INVERTIBLE, 'point': ['0', '0']}
        data = self.assertSuccess(self.post('/systems/solve', body))
        self.assertFalse(data['solution']['is_solution'])
        self.assertEqual(data['solution']['values'], ['1', '2'])

    def test_solve_nonsingular(self):
        """Test a nonsingular system returns no solution"""
        response = self.post('/systems/solve', {'matrix': INVERTIBLE})
        data = self.assertSuccess(response)
        self.assertIsNone(data['solution'])
        self.assertIn('nonsingular', response.get_json()['message'])

    def test_solve_diagnostic(self):
        """Test an isolated column reports a diagnostic"""
        data = self.assertSuccess(self.post('/systems/solve', {'matrix': SPARSE}))
        self.assertEqual(data['solution']['kind'], 'mixed')
        self.assertIn('diagnostic', data['solution'])


if __name__ == '__main__':
    unittest.main()
