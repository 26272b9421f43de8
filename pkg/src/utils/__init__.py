"""
Utility functions for the Hom complex toolkit
"""

from .helpers import load_environment, setup_logging, check_environment, log_separator, format_betti

__all__ = [
    'load_environment',
    'setup_logging',
    'check_environment',
    'log_separator',
    'format_betti'
]
