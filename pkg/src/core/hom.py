"""
Hom complexes Hom(T, G): graph maps, multihomomorphisms and their poset,
the order-complex and exponential-graph routes, and the cellular route to
Betti numbers
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx

from .errors import DEFAULT_MAX_CELLS, InvalidInput, check_cap
from .graph import (
    Graph, Vertex, VertexMap, as_vertex_map, induced_subgraph, looped_vertices,
    map_adjacency, oriented_edges,
)
from .homology import BettiVector, Z2Matrix, betti_from_boundaries
from .simplicial import Poset, SimplicialComplex, clique_complex, order_complex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiHom:
    """η: a nonempty vertex set of G for every vertex of T, aligned with T's vertex order"""

    domain: Tuple[Vertex, ...]
    sets: Tuple[FrozenSet[Vertex], ...]

    def __post_init__(self):
        if len(self.domain) != len(self.sets):
            raise InvalidInput("multihomomorphism must assign a set to every vertex of T")
        for t, s in zip(self.domain, self.sets):
            if not s:
                raise InvalidInput(f"multihomomorphism assigns the empty set to {t!r}")

    @classmethod
    def from_mapping(cls, T: Graph, eta: Mapping[Vertex, Iterable[Vertex]]) -> "MultiHom":
        missing = [t for t in T.vertices if t not in eta]
        if missing:
            raise InvalidInput(f"multihomomorphism is not total: {missing[0]!r} has no set")
        return cls(T.vertices, tuple(frozenset(eta[t]) for t in T.vertices))

    @property
    def eta(self) -> Dict[Vertex, FrozenSet[Vertex]]:
        return dict(zip(self.domain, self.sets))

    def is_atom(self) -> bool:
        return all(len(s) == 1 for s in self.sets)

    @property
    def dimension(self) -> int:
        """Dimension of the cell Π Δ^{η(x)}"""
        return sum(len(s) - 1 for s in self.sets)

    def leq(self, other: "MultiHom") -> bool:
        return all(a <= b for a, b in zip(self.sets, other.sets))

    def image(self) -> FrozenSet[Vertex]:
        return frozenset().union(*self.sets)

    def replace(self, position: int, new_set: FrozenSet[Vertex]) -> "MultiHom":
        sets = list(self.sets)
        sets[position] = new_set
        return MultiHom(self.domain, tuple(sets))


def is_multihom(T: Graph, G: Graph, eta: MultiHom) -> bool:
    """Every cross pair along an edge of T (loops included) is an edge of G"""
    if eta.domain != T.vertices:
        return False
    sets = eta.eta
    for s in eta.sets:
        if any(g not in G for g in s):
            return False
    return all(
        G.has_edge(a, b)
        for x, y in T.edges() for a in sets[x] for b in sets[y]
    )


def _search_order(T: Graph) -> List[Vertex]:
    """T's vertices in BFS order, one root per component taken in vertex order"""
    g = T.to_networkx()
    order: List[Vertex] = []
    seen: Set[Vertex] = set()
    for root in T.vertices:
        if root in seen:
            continue
        component = [root] + [v for _, v in nx.bfs_edges(g, root)]
        seen.update(component)
        order.extend(component)
    return order


def _earlier_neighbors(T: Graph, order: Sequence[Vertex]) -> List[List[Vertex]]:
    position = {t: i for i, t in enumerate(order)}
    return [
        [s for s in T.neighbors(t) if s != t and position[s] < i]
        for i, t in enumerate(order)
    ]


def _common_neighbors(G: Graph, anchors: Iterable[Vertex]) -> Optional[Set[Vertex]]:
    common = None
    for a in anchors:
        common = set(G.neighbors(a)) if common is None else common & G.neighbors(a)
    return common


def enumerate_homs(T: Graph, G: Graph, max_cells: int = DEFAULT_MAX_CELLS) -> List[VertexMap]:
    """All graph maps T -> G, sorted lexicographically by their images"""
    order = _search_order(T)
    earlier = _earlier_neighbors(T, order)
    looped = set(looped_vertices(G))
    assignment: Dict[Vertex, Vertex] = {}
    found: List[Tuple[Vertex, ...]] = []
    explored = 0

    def extend(pos: int) -> None:
        nonlocal explored
        explored += 1
        check_cap("enumerate_homs", explored, max_cells)
        if pos == len(order):
            found.append(tuple(assignment[t] for t in T.vertices))
            return
        t = order[pos]
        common = _common_neighbors(G, (assignment[s] for s in earlier[pos]))
        pool = G.vertices if common is None else G.ordered(common)
        needs_loop = T.is_looped(t)
        for g in pool:
            if needs_loop and g not in looped:
                continue
            assignment[t] = g
            extend(pos + 1)
        assignment.pop(t, None)

    extend(0)
    found.sort(key=lambda images: tuple(G.index(w) for w in images))
    return [VertexMap(T, G, images) for images in found]


def _set_choices(G: Graph, pool: Sequence[Vertex], needs_loop: bool,
                 needs_partner: bool) -> Iterator[FrozenSet[Vertex]]:
    """Candidate values of η(t), grown one vertex at a time in pool order.

    A looped t takes looped cliques only. When t still has an unplaced
    neighbor, the chosen set must keep a common neighbor; growing a set only
    shrinks that neighborhood, so the search stops there.
    """
    if needs_loop:
        pool = [g for g in pool if G.is_looped(g)]
    chosen: List[Vertex] = []

    def grow(start: int, common: Optional[FrozenSet[Vertex]]) -> Iterator[FrozenSet[Vertex]]:
        for i in range(start, len(pool)):
            g = pool[i]
            if needs_loop and not all(G.has_edge(g, c) for c in chosen):
                continue
            narrowed = G.neighbors(g) if common is None else common & G.neighbors(g)
            if needs_partner and not narrowed:
                continue
            chosen.append(g)
            yield frozenset(chosen)
            yield from grow(i + 1, narrowed)
            chosen.pop()

    yield from grow(0, None)


def _element_key(G: Graph, eta: MultiHom) -> Tuple:
    return (
        sum(len(s) for s in eta.sets),
        tuple(tuple(sorted(G.index(g) for g in s)) for s in eta.sets),
    )


class HomPoset:
    """Multihomomorphisms T -> G ordered by pointwise containment.

    Intervals of this order are boxes, so η' covers η exactly when it adds
    one vertex of G to one set η(x).
    """

    def __init__(self, T: Graph, G: Graph, elements: Iterable[MultiHom]):
        self.source = T
        self.target = G
        self.elements: Tuple[MultiHom, ...] = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise InvalidInput("Hom poset elements must be distinct")
        self.poset = Poset(self.elements, self._covers(), _reduced=True)

    def _covers(self) -> List[Tuple[MultiHom, MultiHom]]:
        covers = []
        for eta in self.elements:
            for pos, s in enumerate(eta.sets):
                for g in self.target.vertices:
                    if g in s:
                        continue
                    bigger = eta.replace(pos, s | {g})
                    if bigger in self._index:
                        covers.append((eta, bigger))
        return covers

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, eta: MultiHom) -> int:
        try:
            return self._index[eta]
        except KeyError:
            raise InvalidInput("not an element of this Hom poset")

    @property
    def covers(self) -> List[Tuple[MultiHom, MultiHom]]:
        return self.poset.covers

    def atoms(self) -> List[MultiHom]:
        return [e for e in self.elements if e.is_atom()]

    def leq(self, a: MultiHom, b: MultiHom) -> bool:
        return a.leq(b)

    def export(self) -> Dict[str, list]:
        """Element list plus cover pairs as element indices"""
        return {
            "elements": [e.eta for e in self.elements],
            "covers": [[self._index[a], self._index[b]] for a, b in self.covers],
        }


def hom_poset(T: Graph, G: Graph, max_cells: int = DEFAULT_MAX_CELLS) -> HomPoset:
    """Every multihomomorphism T -> G exactly once, found by backtracking in BFS order.

    The candidates for η(t) are the common neighbors of every vertex already
    placed on an earlier neighbor of t.
    """
    order = _search_order(T)
    earlier = _earlier_neighbors(T, order)
    has_later = [
        any(s != t and s not in order[:i + 1] for s in T.neighbors(t))
        for i, t in enumerate(order)
    ]
    eta: Dict[Vertex, FrozenSet[Vertex]] = {}
    found: List[MultiHom] = []
    explored = 0

    def extend(pos: int) -> None:
        nonlocal explored
        explored += 1
        check_cap("hom_poset", explored, max_cells)
        if pos == len(order):
            found.append(MultiHom(T.vertices, tuple(eta[t] for t in T.vertices)))
            return
        t = order[pos]
        common = _common_neighbors(G, (g for s in earlier[pos] for g in eta[s]))
        pool = G.vertices if common is None else G.ordered(common)
        for choice in _set_choices(G, pool, T.is_looped(t), has_later[pos]):
            eta[t] = choice
            extend(pos + 1)
        eta.pop(t, None)

    extend(0)
    found.sort(key=lambda e: _element_key(G, e))
    logger.debug("[HOM] %d multihomomorphisms", len(found))
    return HomPoset(T, G, found)


def hom_complex_order(T: Graph, G: Graph, max_cells: int = DEFAULT_MAX_CELLS) -> SimplicialComplex:
    return order_complex(hom_poset(T, G, max_cells).poset, max_cells)


def looped_exponential_graph(G: Graph, T: Graph, max_cells: int = DEFAULT_MAX_CELLS) -> Graph:
    """The looped part of G^T: graph maps T -> G as image tuples, with their mutual adjacency"""
    maps = [f.images for f in enumerate_homs(T, G, max_cells)]
    pairs = map_adjacency(maps, G, T, max_cells, "hom_exponential")
    return Graph(maps, ((maps[a], maps[b]) for a, b in pairs))


def hom_complex_exponential(T: Graph, G: Graph, max_cells: int = DEFAULT_MAX_CELLS) -> SimplicialComplex:
    """Δ(G^T), built from the looped vertices of G^T only"""
    return clique_complex(looped_exponential_graph(G, T, max_cells), max_cells)


def hom_cellular_betti(T: Graph, G: Graph, max_cells: int = DEFAULT_MAX_CELLS) -> BettiVector:
    """Betti numbers of Hom(T, G) from its cells Π Δ^{η(x)}.

    The mod 2 boundary of a cell drops one vertex from one η(x) that has at
    least two; no chains are enumerated.
    """
    P = hom_poset(T, G, max_cells)
    by_dim: List[List[MultiHom]] = []
    for eta in P.elements:
        d = eta.dimension
        while len(by_dim) <= d:
            by_dim.append([])
        by_dim[d].append(eta)
    index = [{eta: i for i, eta in enumerate(cells)} for cells in by_dim]

    matrices = []
    for d in range(1, len(by_dim)):
        columns = []
        for eta in by_dim[d]:
            rows = [
                index[d - 1][eta.replace(pos, s - {g})]
                for pos, s in enumerate(eta.sets) if len(s) > 1
                for g in s
            ]
            columns.append(rows)
        matrices.append(Z2Matrix(len(by_dim[d - 1]), columns))
    return betti_from_boundaries([len(cells) for cells in by_dim], matrices)


def _as_images(T: Graph, G: Graph, f) -> Tuple[Vertex, ...]:
    if isinstance(f, VertexMap):
        if f.source != T:
            raise InvalidInput("map in alpha is not defined on T")
        f = f.images
    images = tuple(f)
    if len(images) != len(T):
        raise InvalidInput("map in alpha is not defined on every vertex of T")
    return as_vertex_map(T, G, images).images


def support_subgraph(T: Graph, G: Graph, alpha: Iterable) -> Graph:
    """G_α: the subgraph of G induced by every image of every map in alpha"""
    maps = [_as_images(T, G, f) for f in alpha]
    if not maps:
        raise InvalidInput("alpha must contain at least one map")
    arrows = oriented_edges(T)
    for f, g in itertools.combinations_with_replacement(maps, 2):
        if not all(G.has_edge(f[i], g[j]) for i, j in arrows):
            raise InvalidInput("alpha is not a clique of looped vertices of G^T")
    return induced_subgraph(G, {w for f in maps for w in f})


def sample_clique(L: Graph, rng: random.Random, grow_probability: float = 0.75) -> Tuple[Vertex, ...]:
    """Random clique among looped vertices, grown one common neighbor at a time"""
    looped = looped_vertices(L)
    if not looped:
        raise InvalidInput("cannot sample a clique from a graph without looped vertices")
    start = rng.choice(looped)
    clique = [start]
    candidates = {v for v in L.neighbors(start) if v != start and L.is_looped(v)}
    while candidates and rng.random() < grow_probability:
        w = rng.choice(L.ordered(candidates))
        clique.append(w)
        candidates &= L.neighbors(w)
        candidates.discard(w)
    return L.ordered(clique)
