"""
Core logic for the Hom complex toolkit: graphs, complexes, homology,
Hom complexes and the universality construction
"""

from .errors import HomcxError, InvalidInput, CellCapExceeded, DEFAULT_MAX_CELLS
from .graph import Graph, VertexMap, FoldSequence, DismantleResult, dismantle
from .simplicial import SimplicialComplex, Poset, FaceName
from .homology import BettiVector, betti_z2
from .hom import MultiHom, HomPoset, hom_poset
from .universality import ConstructionParams, BallCover, choose_k, build_g_kx
from .workflows import UniversalityWorkflow, verify_universality, conjecture_experiment

__all__ = [
    'HomcxError',
    'InvalidInput',
    'CellCapExceeded',
    'DEFAULT_MAX_CELLS',
    'Graph',
    'VertexMap',
    'FoldSequence',
    'DismantleResult',
    'dismantle',
    'SimplicialComplex',
    'Poset',
    'FaceName',
    'BettiVector',
    'betti_z2',
    'MultiHom',
    'HomPoset',
    'hom_poset',
    'ConstructionParams',
    'BallCover',
    'choose_k',
    'build_g_kx',
    'UniversalityWorkflow',
    'verify_universality',
    'conjecture_experiment'
]
