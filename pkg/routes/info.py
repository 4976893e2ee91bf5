"""
Info routes - Blueprint for informational endpoints (home, health check)
"""

from flask import Blueprint, jsonify

from semiring import ONE, format_scalar
from services import DeterminantService
from tensor import identity

info_bp = Blueprint('info', __name__)


@info_bp.route('/', methods=['GET'])
def home():
    """API information endpoint"""
    return jsonify({
        'message': 'Supertropical Matrix Algebra API',
        'version': '1.0',
        'scalars': "integers, decimals or p/q rationals; suffix 'g' for ghosts; '-inf'",
        'matrix_format': {'rows': [[{'v': '1', 'g': False}, {'neginf': True}]]},
        'endpoints': {
            'matrices': {
                'POST /matrices/det': 'Determinant (method: brute, expand, fast, auto)',
                'POST /matrices/adjoint': 'Adjoint matrix',
                'POST /matrices/pinv': 'Canonical pseudo inverse',
                'POST /matrices/rank': 'Rank and maximal nonsingular minor',
                'POST /matrices/certificate': 'Rank-defect certificate for a -inf determinant',
                'POST /matrices/digraph': 'Weighted digraph edge list'
            },
            'vectors': {
                'POST /vectors/depend': 'Dependence decision with witness',
                'POST /vectors/witness': 'Validated dependence coefficients'
            },
            'systems': {
                'POST /systems/solve': 'Evaluate a point or find a pure-real solution'
            }
        }
    }), 200


@info_bp.route('/health', methods=['GET'])
def health_check():
    """Health check endpoint"""
    try:
        # |I_2| = 0 exercises the assignment path end to end
        unit_det = DeterminantService.det(identity(2), 'fast')
        healthy = unit_det == ONE
        return jsonify({
            'status': 'healthy' if healthy else 'unhealthy',
            'unit_det': format_scalar(unit_det)
        }), 200 if healthy else 500
    except Exception as e:
        return jsonify({
            'status': 'unhealthy',
            'error': str(e)
        }), 500
