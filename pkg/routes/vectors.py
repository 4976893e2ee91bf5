"""
Vector routes - Blueprint for dependence endpoints
"""

from flask import Blueprint, request

from exceptions import TropicalAlgebraError
from matrix_io import structured_to_matrix
from services import RankService
from utils import create_error_response, create_success_response, status_for
from validators import PayloadValidator

vectors_bp = Blueprint('vectors', __name__, url_prefix='/vectors')


def _load_vectors():
    data = request.get_json(silent=True)
    PayloadValidator.validate_vectors_payload(data)
    return structured_to_matrix({'rows': data['vectors']})


@vectors_bp.route('/depend', methods=['POST'])
def depend():
    """
    Decide tropical dependence

    Required fields:
    - vectors: Array of equal-length arrays of cells
    """
    try:
        matrix = _load_vectors()
        rows = matrix.row_vectors()
        if not RankService.is_dependent(rows):
            return create_success_response(data={'dependent': False, 'witness': None})
        witness = RankService.dependence_witness(rows)
        return create_success_response(data={'dependent': True, 'witness': witness.to_dict()})
    except TropicalAlgebraError as e:
        return create_error_response(e.message, status_for(e))


@vectors_bp.route('/witness', methods=['POST'])
def witness():
    """
    Validated dependence coefficients

    A square family returns the raw minor construction; other shapes
    return coefficients normalized so the last finite one is 0.
    """
    try:
        matrix = _load_vectors()
        rows = matrix.row_vectors()
        if matrix.m == matrix.n:
            result = RankService.square_witness(matrix)
        else:
            result = RankService.dependence_witness(rows)
        return create_success_response(data={
            'witness': result.to_dict(),
            'valid': RankService.validate_witness(rows, result.coefficients)
        })
    except TropicalAlgebraError as e:
        return create_error_response(e.message, status_for(e))
