"""
Services for the Hom complex toolkit: input handling and the lemma suite
"""

from .io_service import InputService, ParsedInputs, get_input_service
from .lemma_service import LemmaService

__all__ = [
    'InputService',
    'ParsedInputs',
    'get_input_service',
    'LemmaService'
]
