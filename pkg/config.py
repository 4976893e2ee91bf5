"""
Runtime configuration read from the environment

Entry points call `load_dotenv()` before importing this module's values.
"""

import logging
import os


class Config:
    """Settings shared by the CLI and the API"""

    DEFAULT_METHOD = os.environ.get('TROPICAL_DEFAULT_METHOD', 'auto')
    LOG_LEVEL = os.environ.get('TROPICAL_LOG_LEVEL', 'WARNING').upper()
    PORT = int(os.environ.get('PORT', 5000))
    DEBUG = os.environ.get('DEBUG', 'False') == 'True'
    BENCH_MAX_N = int(os.environ.get('TROPICAL_BENCH_MAX_N', 50))

    @classmethod
    def reload(cls) -> None:
        """Re-read the environment (after load_dotenv)"""
        cls.DEFAULT_METHOD = os.environ.get('TROPICAL_DEFAULT_METHOD', 'auto')
        cls.LOG_LEVEL = os.environ.get('TROPICAL_LOG_LEVEL', 'WARNING').upper()
        cls.PORT = int(os.environ.get('PORT', 5000))
        cls.DEBUG = os.environ.get('DEBUG', 'False') == 'True'
        cls.BENCH_MAX_N = int(os.environ.get('TROPICAL_BENCH_MAX_N', 50))


def configure_logging() -> None:
    """Configure the root logger at Config.LOG_LEVEL"""
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL, logging.WARNING),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s'
    )
