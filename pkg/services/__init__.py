"""
Services package - Contains all tropical algebra services

This modular structure separates concerns and makes the codebase
more maintainable and testable.
"""

from .base_service import BaseService
from .determinant_service import DeterminantService
from .digraph_service import DigraphService
from .rank_service import RankService
from .inverse_service import InverseService
from .linsys_service import LinsysService
from .check_service import CheckService

__all__ = [
    'BaseService',
    'DeterminantService',
    'DigraphService',
    'RankService',
    'InverseService',
    'LinsysService',
    'CheckService'
]
