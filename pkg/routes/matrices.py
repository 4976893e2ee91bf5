"""
Matrix routes - Blueprint for determinant, inverse, rank and graph endpoints
"""

from flask import Blueprint, request

from config import Config
from exceptions import TropicalAlgebraError
from semiring import format_scalar
from services import DeterminantService, DigraphService, InverseService, RankService
from utils import create_error_response, create_success_response, load_matrix, status_for
from validators import MatrixValidator

matrices_bp = Blueprint('matrices', __name__, url_prefix='/matrices')


@matrices_bp.route('/det', methods=['POST'])
def determinant():
    """
    Tropical determinant

    Required fields:
    - matrix: Structured matrix ({"rows": [[{"v": "1", "g": false}, ...], ...]})

    Optional fields:
    - method: brute | expand | fast | auto
    """
    try:
        data = request.get_json(silent=True)
        matrix = load_matrix(data)
        method = data.get('method', Config.DEFAULT_METHOD)
        value = DeterminantService.det(matrix, method)

        result = {
            'determinant': format_scalar(value),
            'tag': DeterminantService.tag_of(value),
            'singular': DeterminantService.is_singular(matrix, method),
            'method': method
        }
        if matrix.m == matrix.n and matrix.n <= MatrixValidator.AUTO_BRUTE_N:
            result['achieving_permutations'] = [
                p.to_dict() for p in DeterminantService.achieving_permutations(matrix)
            ]
        return create_success_response(data=result)
    except TropicalAlgebraError as e:
        return create_error_response(e.message, status_for(e))


@matrices_bp.route('/adjoint', methods=['POST'])
def adjoint():
    """Adjoint matrix (entry (i, j) is the determinant of minor (j, i))"""
    try:
        matrix = load_matrix(request.get_json(silent=True))
        result = DeterminantService.adjoint(matrix)
        return create_success_response(data={'adjoint': result.to_lists()})
    except TropicalAlgebraError as e:
        return create_error_response(e.message, status_for(e))


@matrices_bp.route('/pinv', methods=['POST'])
def pseudo_inverse():
    """Canonical pseudo inverse with the pseudo-unit reports of both products"""
    try:
        matrix = load_matrix(request.get_json(silent=True))
        inverse = InverseService.pseudo_inverse(matrix)
        right, left = InverseService.product_reports(matrix, inverse)
        return create_success_response(data={
            'pseudo_inverse': inverse.to_lists(),
            'right_product': dict(right.to_dict(), failures=right.failures()),
            'left_product': dict(left.to_dict(), failures=left.failures())
        })
    except TropicalAlgebraError as e:
        return create_error_response(e.message, status_for(e))


@matrices_bp.route('/rank', methods=['POST'])
def rank():
    """Tropical rank and a maximal nonsingular minor"""
    try:
        matrix = load_matrix(request.get_json(silent=True))
        location = RankService.max_nonsingular_minor(matrix)
        return create_success_response(data={
            'rank': location.size if location else 0,
            'minor': location.to_dict() if location else None
        })
    except TropicalAlgebraError as e:
        return create_error_response(e.message, status_for(e))


@matrices_bp.route('/certificate', methods=['POST'])
def certificate():
    """Rank-defect certificate for a -inf determinant (null otherwise)"""
    try:
        matrix = load_matrix(request.get_json(silent=True))
        found = DeterminantService.rank_defect_certificate(matrix)
        return create_success_response(data={'certificate': found.to_dict() if found else None})
    except TropicalAlgebraError as e:
        return create_error_response(e.message, status_for(e))


@matrices_bp.route('/digraph', methods=['POST'])
def digraph():
    """
    Weighted digraph of the matrix

    Optional fields:
    - zero: true to keep only the edges of weight 0 and 0g
    """
    try:
        data = request.get_json(silent=True)
        matrix = load_matrix(data)
        graph = DigraphService.digraph_of(matrix)
        if data.get('zero'):
            graph = DigraphService.reduced_zero_graph(graph)
        cycle = DigraphService.find_simple_cycle(graph)

        result = graph.to_dict()
        result['edge_list'] = DigraphService.format_edge_list(graph)
        result['sources'] = DigraphService.sources(graph)
        result['sinks'] = DigraphService.sinks(graph)
        result['simple_cycle'] = cycle.to_dict() if cycle else None
        return create_success_response(data=result)
    except TropicalAlgebraError as e:
        return create_error_response(e.message, status_for(e))
