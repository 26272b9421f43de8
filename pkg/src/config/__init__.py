"""
Configuration package for the Hom complex toolkit
"""

from .settings import (
    PIPELINE_CONFIG, ROUTES, get_max_cells, get_route, get_seed,
    get_workers, get_log_level
)

__all__ = [
    'PIPELINE_CONFIG',
    'ROUTES',
    'get_max_cells',
    'get_route',
    'get_seed',
    'get_workers',
    'get_log_level'
]
