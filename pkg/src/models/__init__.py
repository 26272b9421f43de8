"""
Data models and JSON formats for the Hom complex toolkit
"""

from .domain import GraphSpec, ComplexSpec, MultiHomSpec, HomPosetSpec
from .requests import Command, VERBS
from .responses import (
    BettiResponse, DismantleResponse, HomResponse, BuildResponse, NerveResponse,
    UniversalityReport, ConjectureResponse, LemmaCheck, LemmaReport, ErrorResponse
)

__all__ = [
    'GraphSpec',
    'ComplexSpec',
    'MultiHomSpec',
    'HomPosetSpec',
    'Command',
    'VERBS',
    'BettiResponse',
    'DismantleResponse',
    'HomResponse',
    'BuildResponse',
    'NerveResponse',
    'UniversalityReport',
    'ConjectureResponse',
    'LemmaCheck',
    'LemmaReport',
    'ErrorResponse'
]
