"""
Response models for the Hom complex toolkit; every report is one JSON line
"""

from pydantic import BaseModel, Field
from typing import Dict, List, Optional

from .domain import GraphSpec


class BettiResponse(BaseModel):
    """Z/2 Betti numbers of a complex"""
    betti: List[int]
    euler: int


class DismantleResponse(BaseModel):
    """Greedy folding outcome"""
    dismantlable: bool
    message: str
    folds: List[List[str]] = Field(default=[], description="Fold steps [v, w], v removed onto w")
    residual: GraphSpec


class HomResponse(BaseModel):
    """Size and Betti numbers of Hom(T, G)"""
    route: str
    homs: int = Field(..., description="Number of graph maps T -> G")
    f_vector: List[int]
    betti: List[int]
    euler: int


class BuildResponse(BaseModel):
    """G_{k,X} as built"""
    k: int
    vertices: int
    edges: int
    loops: int
    out: Optional[str] = None


class NerveResponse(BaseModel):
    """Nerve of the ball cover of G_{k,X}"""
    k: int
    nerve: List[List[str]]
    matches: bool


class GraphSize(BaseModel):
    vertices: int
    edges: int
    loops: int


class ComplexSize(BaseModel):
    f_vector: List[int]


class UniversalityReport(BaseModel):
    """End-to-end universality check"""
    k: int
    g_size: GraphSize
    complex_size: ComplexSize
    betti_x: List[int]
    betti_hom: List[int]
    match: bool
    balls_dismantlable: Dict[str, bool]
    intersections_dismantlable: Dict[str, bool]
    non_faces_empty: Dict[str, bool]
    layer_folds: Dict[str, bool] = {}
    cover_holds: bool
    nerve_matches: bool
    route: str

    def all_checks_pass(self) -> bool:
        return (
            self.match
            and self.cover_holds
            and self.nerve_matches
            and all(self.balls_dismantlable.values())
            and all(self.intersections_dismantlable.values())
            and all(self.non_faces_empty.values())
            and all(self.layer_folds.values())
        )


class ConjectureRow(BaseModel):
    name: str
    betti_x: List[int]
    betti_hom: List[int]
    match: bool


class ConjectureResponse(BaseModel):
    """Betti comparison at k = 1; reported, never asserted"""
    k: int
    t_vertices: int
    results: List[ConjectureRow]


class LemmaCheck(BaseModel):
    name: str
    samples: int
    passed: bool
    failures: List[str] = []


class LemmaReport(BaseModel):
    """Outcome of the seeded lemma suite"""
    seed: int
    passed: bool
    checks: List[LemmaCheck]


class ErrorDetail(BaseModel):
    type: str
    message: str
    stage: Optional[str] = None


class ErrorResponse(BaseModel):
    error: ErrorDetail
