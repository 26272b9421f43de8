"""
Command-line interface for the Hom complex toolkit
"""

from .commands import main, run, parse_command, build_parser

__all__ = [
    'main',
    'run',
    'parse_command',
    'build_parser'
]
