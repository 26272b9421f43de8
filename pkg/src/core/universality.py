"""
The graph G_{k,X}: the looped 1-skeleton of bd^k(X), its ball cover by
original vertices, the nerve of that cover and the vertex types used to fold
each ball down
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

from .errors import DEFAULT_MAX_CELLS, InvalidInput
from .hom import MultiHom
from .graph import (
    FoldSequence, Graph, Vertex, bfs_distances, diameter, induced_subgraph,
    is_connected, is_looped_point,
)
from .simplicial import (
    FaceName, SimplicialComplex, barycentric_subdivision, clique_complex,
    complexes_equal_under, iterated_subdivision, looped_one_skeleton, nerve,
    support,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstructionParams:
    k: int
    d: int
    special_case_point: bool = False

    def __post_init__(self):
        if self.special_case_point:
            if self.k != 1:
                raise InvalidInput("T = 1 uses k = 1")
        elif self.k < 2 or 2 ** (self.k - 1) - 1 < self.d:
            raise InvalidInput(f"k={self.k} violates k >= 2 and 2^(k-1) - 1 >= {self.d}")

    @property
    def radius(self) -> int:
        return ball_radius(self.k)


@dataclass(frozen=True)
class TypedVertex:
    vertex: Hashable
    i: int
    j: int

    @property
    def type(self) -> Tuple[int, int]:
        return self.i, self.j


def ball_radius(k: int) -> int:
    return 2 ** k - 1


def choose_k(T: Graph) -> ConstructionParams:
    """Minimal admissible k for T"""
    if is_looped_point(T):
        return ConstructionParams(k=1, d=0, special_case_point=True)
    if not is_connected(T):
        raise InvalidInput("T must be connected")
    if T.edge_count() == 0:
        raise InvalidInput("T must have an edge or be the single looped vertex")
    d = diameter(T)
    k = 2
    while 2 ** (k - 1) - 1 < d:
        k += 1
    return ConstructionParams(k=k, d=d)


def params_for(T: Graph, k: Optional[int] = None) -> ConstructionParams:
    """choose_k(T), or a forced k that is never below the minimal one"""
    minimal = choose_k(T)
    if k is None or k == minimal.k:
        return minimal
    if k < minimal.k:
        raise InvalidInput(f"k={k} is below the minimal admissible k={minimal.k} for T")
    return ConstructionParams(k=k, d=minimal.d)


def build_g_kx(X: SimplicialComplex, k: int, max_cells: int = DEFAULT_MAX_CELLS) -> Graph:
    """G_{k,X}: looped 1-skeleton of the k-th barycentric subdivision of X"""
    if k < 1:
        raise InvalidInput("k must be a positive integer")
    if not X.vertices:
        raise InvalidInput("X must be nonempty")
    return looped_one_skeleton(iterated_subdivision(X, k, max_cells))


def _is_original(v) -> bool:
    return not isinstance(v, FaceName)


class BallCover:
    """Balls of radius 2^k - 1 around the original vertices of X in G_{k,X}.

    One BFS table per center; balls and intersections are read off them.
    """

    def __init__(self, Gkx: Graph, centers: Iterable[Vertex], k: int):
        self.graph = Gkx
        self.k = k
        self.radius = ball_radius(k)
        self.centers: Tuple[Vertex, ...] = tuple(centers)
        for x in self.centers:
            _check_original(Gkx, x)
        self.distances: Dict[Vertex, Dict[Vertex, Optional[int]]] = {
            x: bfs_distances(Gkx, x) for x in self.centers
        }
        self._balls = {
            x: frozenset(v for v, d in dist.items() if d is not None and d <= self.radius)
            for x, dist in self.distances.items()
        }

    def ball(self, x: Vertex) -> FrozenSet[Vertex]:
        try:
            return self._balls[x]
        except KeyError:
            raise InvalidInput(f"{x!r} is not an original vertex of X")

    def intersection(self, I: Iterable[Vertex]) -> FrozenSet[Vertex]:
        members = list(I)
        if not members:
            raise InvalidInput("intersection needs at least one original vertex")
        return frozenset.intersection(*(self.ball(x) for x in members))

    def ball_subgraph(self, x: Vertex) -> Graph:
        return induced_subgraph(self.graph, self.ball(x))

    def intersection_subgraph(self, I: Iterable[Vertex]) -> Graph:
        return induced_subgraph(self.graph, self.intersection(I))

    def outer_layer(self, x: Vertex) -> FrozenSet[Vertex]:
        self.ball(x)
        return frozenset(v for v, d in self.distances[x].items() if d == self.radius)

    def as_cover(self) -> Dict[Vertex, FrozenSet[Vertex]]:
        return {x: self._balls[x] for x in self.centers}

    def covering_center(self, vertices: Iterable[Vertex]) -> Optional[Vertex]:
        """First center whose ball contains every given vertex"""
        s = frozenset(vertices)
        return next((x for x in self.centers if s <= self._balls[x]), None)


def _check_original(Gkx: Graph, x: Vertex) -> None:
    if x not in Gkx or not _is_original(x):
        raise InvalidInput(f"{x!r} is not an original vertex of X")


def ball_subgraph(Gkx: Graph, x: Vertex, k: int) -> Graph:
    """G^x_{k,X}: vertices within 2^k - 1 of x"""
    return BallCover(Gkx, [x], k).ball_subgraph(x)


def intersection_subgraph(Gkx: Graph, I: Iterable[Vertex], k: int) -> Graph:
    """Vertices within 2^k - 1 of every x in I; may be empty"""
    members = list(dict.fromkeys(I))
    return BallCover(Gkx, members, k).intersection_subgraph(members)


def minimal_non_faces(X: SimplicialComplex) -> List[FrozenSet[Vertex]]:
    """Vertex sets that are not faces while all their proper subsets are"""
    found = set()
    for d in range(X.dimension + 1):
        for face in X.faces_of_dim(d):
            top = max(X.index(v) for v in face)
            for v in X.vertices[top + 1:]:
                candidate = face | {v}
                if X.has_face(candidate):
                    continue
                if all(X.has_face(candidate - {u}) for u in candidate):
                    found.add(candidate)
    return sorted(found, key=X.face_key)


def vertex_type(X: SimplicialComplex, k: int, v) -> Tuple[int, int]:
    """(i, j): i is the dimension of the face of X carrying v, j that of the
    face of X^{k-1} whose barycenter v is"""
    if k < 1:
        raise InvalidInput("k must be a positive integer")
    if v not in iterated_subdivision(X, k):
        raise InvalidInput(f"{v!r} is not a vertex of bd^{k}(X)")
    i = len(support(v)) - 1
    # vertices of X^{k-1} are their own barycenters, whatever their label looks like
    if v in iterated_subdivision(X, k - 1):
        return i, 0
    return i, len(v.members) - 1


def vertex_types(X: SimplicialComplex, k: int) -> List[TypedVertex]:
    Xk = iterated_subdivision(X, k)
    return [TypedVertex(v, *vertex_type(X, k, v)) for v in Xk.vertices]


def cover_nerve(X: SimplicialComplex, k: int, max_cells: int = DEFAULT_MAX_CELLS,
                cover: Optional[BallCover] = None) -> Tuple[SimplicialComplex, bool]:
    """Nerve of the ball cover and whether it equals X under the identity on labels"""
    if cover is None:
        cover = BallCover(build_g_kx(X, k, max_cells), X.vertices, k)
    N = nerve(cover.as_cover())
    return N, complexes_equal_under(N, X, {x: x for x in X.vertices})


def _map_images(f):
    """Vertices of G used by a vertex of the Hom complex: an image tuple or a multihomomorphism"""
    return f.image() if isinstance(f, MultiHom) else f


def cover_holds(hom_complex: SimplicialComplex, cover: BallCover) -> bool:
    """Every facet of Δ((G_{k,X})^T) is supported inside a single ball"""
    for facet in hom_complex.facets:
        images = {w for f in facet for w in _map_images(f)}
        if cover.covering_center(images) is None:
            return False
    return True


@dataclass(frozen=True)
class LayerFold:
    """Outcome of folding away the vertices at distance exactly 2^k - 1 from x"""

    center: Vertex
    steps: FoldSequence
    certified: bool
    residual_matches: bool

    @property
    def holds(self) -> bool:
        return self.certified and self.residual_matches


def _dominating(residual: Graph, v: Vertex) -> Optional[Vertex]:
    nv = residual.neighbors(v)
    return next((w for w in residual.vertices if w != v and nv <= residual.neighbors(w)), None)


def fold_outer_layer(X: SimplicialComplex, k: int, x: Vertex,
                     max_cells: int = DEFAULT_MAX_CELLS) -> LayerFold:
    """Fold the outer layer of the ball at x in lexicographic order of vertex type.

    What remains should be the looped 1-skeleton of bd(Δ(G^x_{k-1,X})), whose
    labels agree with those of X^k because X^{k-1} is flag.
    """
    if k < 2:
        raise InvalidInput("outer layer folding needs k >= 2")
    cover = BallCover(build_g_kx(X, k, max_cells), [x], k)
    residual = cover.ball_subgraph(x)
    layer = sorted(
        cover.outer_layer(x),
        key=lambda v: (vertex_type(X, k, v), residual.index(v)),
    )

    steps = []
    certified = True
    for v in layer:
        w = _dominating(residual, v)
        if w is None:
            certified = False
            break
        steps.append((v, w))
        residual = induced_subgraph(residual, (u for u in residual.vertices if u != v))

    residual_matches = False
    if certified:
        inner = ball_subgraph(build_g_kx(X, k - 1, max_cells), x, k - 1)
        expected = looped_one_skeleton(barycentric_subdivision(clique_complex(inner)))
        residual_matches = residual == expected
    logger.debug("[BUILD] outer layer of %s: %d folds, certified=%s", x, len(steps), certified)
    return LayerFold(x, FoldSequence(tuple(steps)), certified, residual_matches)
