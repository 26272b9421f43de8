"""
JSON formats for graphs, complexes, multihomomorphisms and Hom posets
"""

from pydantic import BaseModel, Field, validator
from typing import Dict, List, Optional

from ..core.graph import Graph
from ..core.hom import HomPoset, MultiHom
from ..core.simplicial import SimplicialComplex, complex_from_facets, from_facets, label_text


class GraphSpec(BaseModel):
    """Graph JSON: edges listed once per unordered pair, loops as [v, v]"""
    vertices: List[str] = Field(..., description="Vertex tokens in order")
    edges: List[List[str]] = Field(default=[], description="Unordered adjacencies; [v, v] is a loop")

    @validator("vertices")
    def vertices_distinct(cls, v):
        seen = set()
        for token in v:
            if token in seen:
                raise ValueError(f"duplicate vertex {token!r}")
            seen.add(token)
        return v

    @validator("edges")
    def edges_valid(cls, v, values):
        declared = set(values.get("vertices") or ())
        seen = set()
        for edge in v:
            if len(edge) != 2:
                raise ValueError(f"edge {edge} must have exactly two endpoints")
            for end in edge:
                if end not in declared:
                    raise ValueError(f"edge {edge} references undeclared vertex {end!r}")
            key = frozenset(edge)
            if key in seen:
                raise ValueError(f"duplicate edge entry {edge}")
            seen.add(key)
        return v

    def to_graph(self) -> Graph:
        return Graph(self.vertices, [tuple(e) for e in self.edges])

    @classmethod
    def from_graph(cls, G: Graph) -> "GraphSpec":
        return cls(
            vertices=[label_text(v) for v in G.vertices],
            edges=[[label_text(u), label_text(v)] for u, v in G.edges()],
        )


class ComplexSpec(BaseModel):
    """Complex JSON: facets, with the vertex set inferred unless declared"""
    facets: List[List[str]] = Field(..., description="Faces; non-maximal ones are absorbed")
    vertices: Optional[List[str]] = Field(None, description="Optional vertex order, may add isolated vertices")

    @validator("facets")
    def facets_valid(cls, v):
        for facet in v:
            if not facet:
                raise ValueError("facets must be nonempty")
            if len(set(facet)) != len(facet):
                raise ValueError(f"facet {facet} repeats a vertex")
        return v

    def to_complex(self) -> SimplicialComplex:
        if self.vertices is None:
            return complex_from_facets(self.facets)
        return from_facets(self.vertices, self.facets)

    @classmethod
    def from_complex(cls, X: SimplicialComplex) -> "ComplexSpec":
        return cls(
            facets=[[label_text(v) for v in X.ordered(f)] for f in X.facets],
            vertices=[label_text(v) for v in X.vertices],
        )


class MultiHomSpec(BaseModel):
    """MultiHom JSON: {"eta": {"t0": ["a", "b"], ...}}"""
    eta: Dict[str, List[str]] = Field(..., description="Vertex set of G assigned to each vertex of T")

    @validator("eta")
    def sets_nonempty(cls, v):
        for t, s in v.items():
            if not s:
                raise ValueError(f"eta({t}) must be nonempty")
        return v

    def to_multihom(self, T: Graph) -> MultiHom:
        return MultiHom.from_mapping(T, self.eta)

    @classmethod
    def from_multihom(cls, eta: MultiHom) -> "MultiHomSpec":
        return cls(eta={
            label_text(t): sorted(label_text(g) for g in s)
            for t, s in zip(eta.domain, eta.sets)
        })


class HomPosetSpec(BaseModel):
    """Hom poset export: element list plus cover pairs as element indices"""
    elements: List[MultiHomSpec]
    covers: List[List[int]] = Field(default=[], description="Pairs [i, j] with element i covered by element j")

    @classmethod
    def from_hom_poset(cls, P: HomPoset) -> "HomPosetSpec":
        exported = P.export()
        return cls(
            elements=[MultiHomSpec.from_multihom(e) for e in P.elements],
            covers=exported["covers"],
        )
