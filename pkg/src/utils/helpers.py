import logging
import os
import sys

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def load_environment():
    """Load environment variables from a .env file, if present"""
    load_dotenv()


def setup_logging(level=None):
    """Send log records to standard error; standard output is kept for reports"""
    level = (level or os.getenv("LOG_LEVEL", "INFO")).upper()
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT, force=True)


def check_environment():
    """Check that every HOMCX_* override parses; log the first problem found"""
    from ..config import get_max_cells, get_route, get_seed, get_workers
    from ..core.errors import InvalidInput

    try:
        get_max_cells()
        get_route()
        get_seed()
        get_workers()
    except InvalidInput as e:
        logger.error("Invalid environment: %s", e)
        logger.error("See env_example.txt for the accepted values")
        return False
    return True


def log_separator(title=""):
    """Log a formatted separator line"""
    logger.info("=" * 50)
    if title:
        logger.info(" %s", title)
        logger.info("=" * 50)


def format_betti(betti):
    return "(" + ", ".join(str(b) for b in betti) + ")"
