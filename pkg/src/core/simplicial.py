"""
Abstract simplicial complexes: barycentric subdivision, clique complexes,
order complexes of posets and nerves of covers
"""

import functools
import itertools
import threading
from math import comb
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .errors import DEFAULT_MAX_CELLS, InvalidInput, check_cap
from .graph import Graph, looped_vertices, induced_subgraph

Label = Hashable
Face = FrozenSet[Label]


def label_text(v: Label) -> str:
    """Canonical textual form of a vertex label"""
    return v.text if isinstance(v, FaceName) else str(v)


def _structure(v: Label) -> Tuple:
    """Nested sort key that tells apart labels whose texts coincide"""
    if isinstance(v, FaceName):
        return 1, tuple(sorted(_structure(m) for m in v.members))
    return 0, label_text(v)


@functools.total_ordering
class FaceName:
    """Barycenter label: the set of labels spanning a face of at least two vertices.

    Serializes as "{a|{a|b}}" with members sorted by their own text, so the
    name does not depend on the order the members were given in. Identity is
    the member set; tokens containing braces or pipes may share a text.
    """

    __slots__ = ("members", "text")

    def __init__(self, members: Iterable[Label]):
        ms = frozenset(members)
        if len(ms) < 2:
            raise InvalidInput("a barycenter label names a face with at least two vertices")
        self.members = ms
        self.text = "{" + "|".join(sorted(label_text(m) for m in ms)) + "}"

    def __eq__(self, other) -> bool:
        return isinstance(other, FaceName) and self.members == other.members

    def __lt__(self, other) -> bool:
        if not isinstance(other, FaceName):
            return NotImplemented
        return (self.text, _structure(self)) < (other.text, _structure(other))

    def __hash__(self) -> int:
        return hash(("FaceName", self.members))

    def __repr__(self) -> str:
        return self.text

    __str__ = __repr__


def barycenter(face: Iterable[Label]) -> Label:
    """Vertex of bd(X) standing for a face; a vertex is its own barycenter"""
    members = frozenset(face)
    if len(members) == 1:
        return next(iter(members))
    return FaceName(members)


def support(v: Label) -> FrozenSet[Label]:
    """Original vertices reached by unfolding every barycenter label"""
    if isinstance(v, FaceName):
        return frozenset().union(*(support(m) for m in v.members))
    return frozenset([v])


def _fubini(n: int) -> int:
    """Chains of nonempty subsets ending at a fixed n-set (ordered set partitions)"""
    table = [1]
    for m in range(1, n + 1):
        table.append(sum(comb(m, j) * table[m - j] for j in range(1, m + 1)))
    return table[n]


class SimplicialComplex:
    """Finite abstract simplicial complex given by its facets.

    The face family is derived by downward closure on first use, excludes the
    empty face and is shared by every later reader.
    """

    __slots__ = ("_vertices", "_index", "_facets", "_faces", "_lock", "_hash")

    def __init__(self, vertices: Iterable[Label], facets: Iterable[Iterable[Label]], _maximal: bool = False):
        verts = tuple(vertices)
        index: Dict[Label, int] = {}
        for i, v in enumerate(verts):
            if v in index:
                raise InvalidInput(f"duplicate vertex {v!r}")
            index[v] = i
        self._vertices = verts
        self._index = index

        faces = []
        covered = set()
        for facet in facets:
            s = frozenset(facet)
            if not s:
                raise InvalidInput("facets must be nonempty")
            for v in s:
                if v not in index:
                    raise InvalidInput(f"facet references unknown vertex {v!r}")
            covered |= s
            faces.append(s)
        faces.extend(frozenset([v]) for v in verts if v not in covered)
        if not _maximal:
            faces = _maximal_faces(faces)

        self._facets = tuple(sorted(set(faces), key=self.face_key))
        self._faces: Optional[List[List[Face]]] = None
        self._lock = threading.Lock()
        self._hash = None

    @property
    def vertices(self) -> Tuple[Label, ...]:
        return self._vertices

    @property
    def facets(self) -> Tuple[Face, ...]:
        return self._facets

    def index(self, v: Label) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise InvalidInput(f"unknown vertex {v!r}")

    def __contains__(self, v) -> bool:
        return v in self._index

    def face_key(self, face: Iterable[Label]) -> Tuple[int, ...]:
        return tuple(sorted(self._index[v] for v in face))

    def ordered(self, face: Iterable[Label]) -> Tuple[Label, ...]:
        return tuple(sorted(face, key=self._index.__getitem__))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self._facets), default=0) - 1

    @property
    def faces(self) -> List[List[Face]]:
        """Faces grouped by dimension, each group in vertex order"""
        if self._faces is None:
            with self._lock:
                if self._faces is None:
                    self._faces = self._close_downward()
        return self._faces

    def _close_downward(self) -> List[List[Face]]:
        by_dim: List[set] = [set() for _ in range(self.dimension + 1)]
        for facet in self._facets:
            members = self.ordered(facet)
            for r in range(1, len(members) + 1):
                by_dim[r - 1].update(frozenset(c) for c in itertools.combinations(members, r))
        return [sorted(group, key=self.face_key) for group in by_dim]

    def faces_of_dim(self, d: int) -> List[Face]:
        if d < 0 or d > self.dimension:
            return []
        return self.faces[d]

    def all_faces(self) -> List[Face]:
        return [f for group in self.faces for f in group]

    def has_face(self, face: Iterable[Label]) -> bool:
        s = frozenset(face)
        return bool(s) and any(s <= f for f in self._facets)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self._vertices) == set(other._vertices) and set(self._facets) == set(other._facets)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._vertices), frozenset(self._facets)))
        return self._hash

    def __repr__(self) -> str:
        return f"SimplicialComplex(f_vector={f_vector(self)})"


def _maximal_faces(faces: Sequence[Face]) -> List[Face]:
    kept: List[Face] = []
    by_vertex: Dict[Label, List[Face]] = {}
    for s in sorted(set(faces), key=len, reverse=True):
        pivot = next(iter(s))
        if any(s <= t for t in by_vertex.get(pivot, ())):
            continue
        kept.append(s)
        for v in s:
            by_vertex.setdefault(v, []).append(s)
    return kept


def from_facets(vertices: Iterable[Label], facets: Iterable[Iterable[Label]]) -> SimplicialComplex:
    """Complex on the declared vertices; non-maximal input faces are absorbed"""
    return SimplicialComplex(vertices, facets)


def complex_from_facets(facets: Iterable[Iterable[Label]]) -> SimplicialComplex:
    """Complex whose vertex set is inferred from the facets, in first-seen order"""
    facets = [list(f) for f in facets]
    vertices = list(dict.fromkeys(v for f in facets for v in f))
    return SimplicialComplex(vertices, facets)


def f_vector(X: SimplicialComplex) -> List[int]:
    return [len(group) for group in X.faces]


def skeleton(X: SimplicialComplex, d: int) -> SimplicialComplex:
    if d < 0:
        raise InvalidInput("skeleton dimension must be non-negative")
    facets = []
    for facet in X.facets:
        if len(facet) <= d + 1:
            facets.append(facet)
        else:
            facets.extend(itertools.combinations(X.ordered(facet), d + 1))
    return SimplicialComplex(X.vertices, facets)


def subdivision_face_count(X: SimplicialComplex) -> int:
    """Number of faces bd(X) will have: chains of faces, counted by their top face"""
    return sum(len(group) * _fubini(d + 1) for d, group in enumerate(X.faces))


def barycentric_subdivision(X: SimplicialComplex) -> SimplicialComplex:
    """bd(X): vertices are barycenters of faces, faces are chains under strict inclusion"""
    vertices = [barycenter(f) for f in X.all_faces()]
    facets = []
    for facet in X.facets:
        for perm in itertools.permutations(X.ordered(facet)):
            facets.append([barycenter(perm[:i]) for i in range(1, len(perm) + 1)])
    return SimplicialComplex(vertices, facets, _maximal=True)


@functools.lru_cache(maxsize=32)
def iterated_subdivision(X: SimplicialComplex, k: int, max_cells: int = DEFAULT_MAX_CELLS) -> SimplicialComplex:
    """bd^k(X), refusing any level whose face count exceeds the cap"""
    if k < 0:
        raise InvalidInput("subdivision depth must be non-negative")
    result = X
    for _ in range(k):
        check_cap("subdivision", subdivision_face_count(result), max_cells)
        result = barycentric_subdivision(result)
    return result


def clique_complex(G: Graph, max_cells: int = DEFAULT_MAX_CELLS) -> SimplicialComplex:
    """Δ(G): cliques among the looped vertices of G"""
    looped = looped_vertices(G)
    h = nx.Graph(induced_subgraph(G, looped).to_networkx())
    h.remove_edges_from(list(nx.selfloop_edges(h)))
    facets = []
    for clique in nx.find_cliques(h):
        facets.append(clique)
        check_cap("clique_complex", len(facets), max_cells)
    return SimplicialComplex(looped, facets, _maximal=True)


def looped_one_skeleton(X: SimplicialComplex) -> Graph:
    """1-skeleton of X with a loop at every vertex"""
    edges = [tuple(e) for e in X.faces_of_dim(1)]
    edges.extend((v, v) for v in X.vertices)
    return Graph(X.vertices, edges)


def is_flag(X: SimplicialComplex) -> bool:
    return clique_complex(looped_one_skeleton(X)) == X


class Poset:
    """Finite poset stored as its cover relation (transitive reduction).

    Any strict order pairs are accepted and reduced to covers; callers that
    already hold exactly the covers pass _reduced=True.
    """

    def __init__(self, elements: Iterable[Hashable], less_than: Iterable[Tuple[Hashable, Hashable]],
                 _reduced: bool = False):
        self._elements = tuple(elements)
        self._index = {}
        for i, e in enumerate(self._elements):
            if e in self._index:
                raise InvalidInput(f"duplicate poset element {e!r}")
            self._index[e] = i
        hasse = nx.DiGraph()
        hasse.add_nodes_from(self._elements)
        for a, b in less_than:
            if a not in self._index or b not in self._index:
                raise InvalidInput(f"order pair ({a!r}, {b!r}) references an unknown element")
            if a == b:
                raise InvalidInput(f"order must be irreflexive, got ({a!r}, {a!r})")
            hasse.add_edge(a, b)
        if not nx.is_directed_acyclic_graph(hasse):
            raise InvalidInput("order relation has a cycle")
        self._hasse = hasse if _reduced else nx.transitive_reduction(hasse)

    @classmethod
    def from_relation(cls, elements: Iterable[Hashable], less_than: Iterable[Tuple[Hashable, Hashable]]) -> "Poset":
        """Build from any strict order pairs; keeps only the covers"""
        return cls(elements, less_than)

    @property
    def elements(self) -> Tuple[Hashable, ...]:
        return self._elements

    def __len__(self) -> int:
        return len(self._elements)

    @property
    def covers(self) -> List[Tuple[Hashable, Hashable]]:
        return sorted(self._hasse.edges, key=lambda ab: (self._index[ab[0]], self._index[ab[1]]))

    def upper_covers(self, a: Hashable) -> List[Hashable]:
        return sorted(self._hasse.successors(a), key=self._index.__getitem__)

    def leq(self, a: Hashable, b: Hashable) -> bool:
        return a == b or nx.has_path(self._hasse, a, b)

    def minimal_elements(self) -> List[Hashable]:
        return [e for e in self._elements if self._hasse.in_degree(e) == 0]

    def maximal_chains(self, max_cells: int = DEFAULT_MAX_CELLS) -> List[Tuple[Hashable, ...]]:
        """Saturated chains from a minimal to a maximal element, by depth-first extension"""
        chains = []
        stack = [(m,) for m in reversed(self.minimal_elements())]
        while stack:
            chain = stack.pop()
            ups = self.upper_covers(chain[-1])
            if not ups:
                chains.append(chain)
                check_cap("order_complex", len(chains), max_cells)
                continue
            stack.extend(chain + (u,) for u in reversed(ups))
        return chains


def order_complex(P: Poset, max_cells: int = DEFAULT_MAX_CELLS) -> SimplicialComplex:
    """Faces are the chains of P; facets are its maximal chains"""
    return SimplicialComplex(P.elements, P.maximal_chains(max_cells), _maximal=True)


def nerve(cover: Mapping[Hashable, Iterable[Hashable]]) -> SimplicialComplex:
    """Complex on cover member names; names form a face iff their sets meet"""
    members = {name: frozenset(points) for name, points in cover.items()}
    for name, points in members.items():
        if not points:
            raise InvalidInput(f"cover member {name!r} is empty")
    stars: Dict[Hashable, set] = {}
    for name, points in members.items():
        for p in points:
            stars.setdefault(p, set()).add(name)
    return SimplicialComplex(list(members), stars.values())


def complexes_equal_under(X: SimplicialComplex, Y: SimplicialComplex, bijection: Mapping[Label, Label]) -> bool:
    """True iff the bijection carries the face family of X onto that of Y"""
    if set(bijection) != set(X.vertices):
        raise InvalidInput("mapping must be defined exactly on the vertices of X")
    images = list(bijection.values())
    if len(set(images)) != len(images) or set(images) != set(Y.vertices):
        raise InvalidInput("mapping is not a bijection onto the vertices of Y")
    mapped = {frozenset(bijection[v] for v in facet) for facet in X.facets}
    return mapped == set(Y.facets)
