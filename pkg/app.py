"""
Supertropical Matrix Algebra API

Modular architecture using Flask Blueprints:
- routes/ - API endpoints grouped by resource (matrices, vectors, systems)
- services/ - Determinant, rank, inverse, linear-system and check logic
- validators/ - Shape, size-guard and payload validation
- utils.py - Response helpers
- error_handlers.py - Centralized error handling
- exceptions.py - Custom exceptions
"""

from flask import Flask
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

from config import Config, configure_logging

# Import blueprints
from routes import matrices_bp, vectors_bp, systems_bp, info_bp

# Import error handlers
from error_handlers import register_error_handlers


def create_app():
    """
    Application factory pattern

    Creates and configures the Flask application with all blueprints
    and error handlers registered.

    Returns:
        Configured Flask application instance
    """
    Config.reload()
    configure_logging()

    app = Flask(__name__)
    app.config['JSON_SORT_KEYS'] = False
    app.config['DEFAULT_METHOD'] = Config.DEFAULT_METHOD

    # Register blueprints
    app.register_blueprint(info_bp)        # Root routes (/, /health)
    app.register_blueprint(matrices_bp)    # /matrices/*
    app.register_blueprint(vectors_bp)     # /vectors/*
    app.register_blueprint(systems_bp)     # /systems/*

    # Register error handlers
    register_error_handlers(app)

    app.logger.debug("default determinant method: %s", Config.DEFAULT_METHOD)
    return app


def print_startup_info(app):
    """Print startup information"""
    print("\n" + "="*70)
    print("🚀 Supertropical Matrix Algebra API")
    print("="*70)
    print(f"🌐 Server: http://localhost:{Config.PORT}")
    print(f"🔧 Debug Mode: {Config.DEBUG}")
    print(f"🧮 Default determinant method: {app.config['DEFAULT_METHOD']}")
    print("\n📁 Modular Structure:")
    print("  • routes/matrices.py - Determinant, adjoint, pseudo inverse, rank, digraph")
    print("  • routes/vectors.py - Dependence and witnesses")
    print("  • routes/systems.py - Homogeneous linear systems")
    print("  • routes/info.py - Info endpoints")
    print("  • error_handlers.py - Error handling")
    print("\n✨ Features:")
    print("  • Exact rational arithmetic with ghost tags")
    print("  • Assignment-problem determinant with uniqueness detection")
    print("  • Validated dependence witnesses")
    print("  • Pseudo inverses and pure-real solutions")
    print("="*70 + "\n")


if __name__ == '__main__':
    # Create application
    app = create_app()

    # Print startup information
    print_startup_info(app)

    # Run application
    app.run(host='0.0.0.0', port=Config.PORT, debug=Config.DEBUG)
