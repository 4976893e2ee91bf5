"""
System routes - Blueprint for homogeneous linear systems
"""

from flask import Blueprint, request

from exceptions import TropicalAlgebraError
from matrix_io import structured_to_matrix
from models import LinearSystem
from services import LinsysService
from utils import create_error_response, create_success_response, load_matrix, status_for
from validators import PayloadValidator

systems_bp = Blueprint('systems', __name__, url_prefix='/systems')


@systems_bp.route('/solve', methods=['POST'])
def solve():
    """
    Evaluate a point or construct a pure-real solution

    Required fields:
    - matrix: Structured coefficient matrix

    Optional fields:
    - point: Array of cells; when present the point is evaluated instead
    """
    try:
        data = request.get_json(silent=True)
        system = LinearSystem(load_matrix(data))

        if data.get('point') is not None:
            PayloadValidator.validate_point(data['point'])
            point = structured_to_matrix({'rows': [data['point']]}).row(1)
            report = LinsysService.is_solution(system, point)
        else:
            report = LinsysService.find_pure_real_solution(system)

        if report is None:
            return create_success_response(
                data={'solution': None},
                message='Coefficient matrix is nonsingular: no pure-real solution'
            )
        return create_success_response(data={'solution': report.to_dict()})
    except TropicalAlgebraError as e:
        return create_error_response(e.message, status_for(e))
