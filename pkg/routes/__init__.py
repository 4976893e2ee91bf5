"""
Routes package - Contains all API blueprints
"""

from .matrices import matrices_bp
from .vectors import vectors_bp
from .systems import systems_bp
from .info import info_bp

__all__ = ['matrices_bp', 'vectors_bp', 'systems_bp', 'info_bp']
