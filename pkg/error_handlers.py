"""
Error handlers for the Flask application

Centralized error handling for HTTP errors and library errors that
escape a route.
"""

import logging

from exceptions import TropicalAlgebraError
from utils import create_error_response, status_for

logger = logging.getLogger(__name__)


def register_error_handlers(app):
    """
    Register error handlers with the Flask application

    Args:
        app: Flask application instance
    """

    @app.errorhandler(TropicalAlgebraError)
    def tropical_error(error):
        """Handle library errors not caught by a route"""
        status = status_for(error)
        if status == 500:
            logger.error("internal validation failure: %s", error.message)
        return create_error_response(error.message, status)

    @app.errorhandler(400)
    def bad_request(error):
        """Handle 400 errors (malformed JSON bodies)"""
        return create_error_response("Request body must be valid JSON", 400)

    @app.errorhandler(404)
    def not_found(error):
        """Handle 404 errors"""
        return create_error_response("Resource not found", 404)

    @app.errorhandler(405)
    def method_not_allowed(error):
        """Handle 405 errors"""
        return create_error_response("Method not allowed for this endpoint", 405)

    @app.errorhandler(500)
    def internal_error(error):
        """Handle 500 errors"""
        return create_error_response("Internal server error", 500)
