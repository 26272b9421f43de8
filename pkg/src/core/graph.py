"""
Finite graphs with loops: graph maps, distances, categorical product and
exponential, folds and dismantlability
"""

import itertools
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx

from .errors import DEFAULT_MAX_CELLS, InvalidInput, check_cap

Vertex = Hashable
Edge = Tuple[Vertex, Vertex]


class Graph:
    """Finite undirected graph in which loops are ordinary adjacency entries (v, v).

    Vertices are opaque hashable tokens kept in declaration order; every
    set-valued answer is listed in that order. Instances never change after
    construction.
    """

    __slots__ = ("_vertices", "_index", "_nbrs", "_hash", "_nx")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Edge] = ()):
        verts = tuple(vertices)
        index: Dict[Vertex, int] = {}
        for i, v in enumerate(verts):
            if v in index:
                raise InvalidInput(f"duplicate vertex {v!r}")
            index[v] = i

        nbrs: Dict[Vertex, Set[Vertex]] = {v: set() for v in verts}
        for u, v in edges:
            for end in (u, v):
                if end not in index:
                    raise InvalidInput(f"edge ({u!r}, {v!r}) references undeclared vertex {end!r}")
            nbrs[u].add(v)
            nbrs[v].add(u)

        self._vertices = verts
        self._index = index
        self._nbrs = {v: frozenset(s) for v, s in nbrs.items()}
        self._hash = None
        self._nx = None

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __contains__(self, v) -> bool:
        try:
            return v in self._index
        except TypeError:
            return False

    def index(self, v: Vertex) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise InvalidInput(f"unknown vertex {v!r}")

    def neighbors(self, v: Vertex) -> FrozenSet[Vertex]:
        try:
            return self._nbrs[v]
        except KeyError:
            raise InvalidInput(f"unknown vertex {v!r}")

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        nbrs = self._nbrs.get(u)
        return nbrs is not None and v in nbrs

    def is_looped(self, v: Vertex) -> bool:
        return v in self.neighbors(v)

    def ordered(self, vertices: Iterable[Vertex]) -> Tuple[Vertex, ...]:
        """Sort a vertex collection into declaration order"""
        return tuple(sorted(vertices, key=self.index))

    def edges(self) -> List[Edge]:
        """Each unordered adjacency once, loops included, in vertex order"""
        result = []
        for u in self._vertices:
            i = self._index[u]
            for v in self.ordered(self._nbrs[u]):
                if self._index[v] >= i:
                    result.append((u, v))
        return result

    def edge_count(self) -> int:
        """Number of non-loop edges"""
        return sum(1 for u, v in self.edges() if u != v)

    def loop_count(self) -> int:
        return sum(1 for v in self._vertices if v in self._nbrs[v])

    def to_networkx(self) -> nx.Graph:
        if self._nx is None:
            g = nx.Graph()
            g.add_nodes_from(self._vertices)
            g.add_edges_from(self.edges())
            self._nx = nx.freeze(g)
        return self._nx

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nbrs == other._nbrs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._nbrs.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertices={len(self)}, edges={self.edge_count()}, loops={self.loop_count()})"


def graph_from_networkx(g: nx.Graph) -> Graph:
    return Graph(g.nodes, g.edges)


def looped_point(label: Vertex = 0) -> Graph:
    """The graph 1: a single vertex carrying a loop"""
    return Graph([label], [(label, label)])


def _maybe_looped(g: nx.Graph, looped: bool) -> Graph:
    if looped:
        g.add_edges_from((v, v) for v in list(g.nodes))
    return graph_from_networkx(g)


def complete_graph(n: int, looped: bool = False) -> Graph:
    return _maybe_looped(nx.complete_graph(n), looped)


def cycle_graph(n: int, looped: bool = False) -> Graph:
    return _maybe_looped(nx.cycle_graph(n), looped)


def path_graph(n: int, looped: bool = False) -> Graph:
    return _maybe_looped(nx.path_graph(n), looped)


def with_loops(G: Graph) -> Graph:
    """Reflexive closure: G with a loop at every vertex"""
    return Graph(G.vertices, itertools.chain(G.edges(), ((v, v) for v in G.vertices)))


def is_reflexive(G: Graph) -> bool:
    return all(G.is_looped(v) for v in G.vertices)


def neighborhood(G: Graph, v: Vertex) -> Tuple[Vertex, ...]:
    """N(v); contains v exactly when v carries a loop"""
    return G.ordered(G.neighbors(v))


def looped_vertices(G: Graph) -> Tuple[Vertex, ...]:
    return tuple(v for v in G.vertices if G.is_looped(v))


def bfs_distances(G: Graph, v: Vertex) -> Dict[Vertex, Optional[int]]:
    """Shortest-path distances from v; unreachable vertices map to None"""
    G.index(v)
    lengths = nx.single_source_shortest_path_length(G.to_networkx(), v)
    return {u: lengths.get(u) for u in G.vertices}


def is_connected(G: Graph) -> bool:
    return len(G) > 0 and nx.is_connected(G.to_networkx())


def diameter(G: Graph) -> int:
    if len(G) == 0:
        raise InvalidInput("diameter of the empty graph is undefined")
    if not is_connected(G):
        raise InvalidInput("diameter requires a connected graph")
    return nx.diameter(G.to_networkx())


def induced_subgraph(G: Graph, S: Iterable[Vertex]) -> Graph:
    keep = set(S)
    outside = [v for v in keep if v not in G]
    if outside:
        raise InvalidInput(f"S is not a subset of V(G): {outside[0]!r} is not a vertex")
    verts = [v for v in G.vertices if v in keep]
    return Graph(verts, ((u, w) for u, w in G.edges() if u in keep and w in keep))


def without(G: Graph, v: Vertex) -> Graph:
    G.index(v)
    return induced_subgraph(G, (u for u in G.vertices if u != v))


@dataclass(frozen=True)
class VertexMap:
    """Total vertex map V(source) -> V(target), images listed in source vertex order"""

    source: Graph
    target: Graph
    images: Tuple[Vertex, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source):
            raise InvalidInput("assignment must be defined on every source vertex")
        for w in self.images:
            if w not in self.target:
                raise InvalidInput(f"image {w!r} is not a target vertex")

    @classmethod
    def from_assignment(cls, source: Graph, target: Graph, assignment: Mapping[Vertex, Vertex]) -> "VertexMap":
        missing = [v for v in source.vertices if v not in assignment]
        if missing:
            raise InvalidInput(f"assignment is not total: {missing[0]!r} has no image")
        return cls(source, target, tuple(assignment[v] for v in source.vertices))

    def __call__(self, v: Vertex) -> Vertex:
        return self.images[self.source.index(v)]

    @property
    def assignment(self) -> Dict[Vertex, Vertex]:
        return dict(zip(self.source.vertices, self.images))

    def image(self) -> Tuple[Vertex, ...]:
        return self.target.ordered(set(self.images))


def is_graph_map(f: VertexMap) -> bool:
    """True iff f preserves adjacency; a loop at v forces a loop at f(v)"""
    return all(f.target.has_edge(f(u), f(v)) for u, v in f.source.edges())


def product(G: Graph, H: Graph) -> Graph:
    """Categorical product: (g,h) ~ (g',h') iff g ~ g' and h ~ h'"""
    verts = [(g, h) for g in G.vertices for h in H.vertices]
    edges = (
        ((g, h), (g2, h2))
        for g in G.vertices for g2 in G.neighbors(g)
        for h in H.vertices for h2 in H.neighbors(h)
    )
    return Graph(verts, edges)


def oriented_edges(G: Graph) -> List[Tuple[int, int]]:
    """Every ordered adjacency (u, v) as a pair of vertex indices"""
    return [
        (G.index(u), G.index(v))
        for u in G.vertices for v in G.ordered(G.neighbors(u))
    ]


def map_adjacency(maps: Sequence[Tuple[Vertex, ...]], base: Graph, exponent: Graph,
                  max_cells: int, stage: str) -> List[Tuple[int, int]]:
    """Adjacency among vertices of base^exponent, given as image tuples.

    f ~ f' iff f(v) ~ f'(v') for every edge (v, v') of the exponent. Candidate
    partners are drawn from an image index instead of testing all pairs.
    Returns index pairs (a, b) with a <= b; (a, a) marks a loop.
    """
    arrows = oriented_edges(exponent)
    n = len(maps)
    if not arrows:
        check_cap(stage, n + n * (n + 1) // 2, max_cells)
        return [(a, b) for a in range(n) for b in range(a, n)]

    by_image: Dict[Tuple[int, Vertex], List[int]] = {}
    for b, f in enumerate(maps):
        for j, w in enumerate(f):
            by_image.setdefault((j, w), []).append(b)

    i0, j0 = arrows[0]
    pairs: List[Tuple[int, int]] = []
    for a, f in enumerate(maps):
        candidates = sorted({
            b for w in base.neighbors(f[i0]) for b in by_image.get((j0, w), ())
            if b >= a
        })
        for b in candidates:
            g = maps[b]
            if all(base.has_edge(f[i], g[j]) for i, j in arrows):
                pairs.append((a, b))
        check_cap(stage, n + len(pairs), max_cells)
    return pairs


def exponential_graph(H: Graph, G: Graph, max_cells: int = DEFAULT_MAX_CELLS) -> Graph:
    """H^G: all vertex maps V(G) -> V(H), vertices written as image tuples in G's order.

    A vertex is looped exactly when it is a graph map G -> H.
    """
    check_cap("exponential_graph", len(H) ** len(G), max_cells)
    maps = list(itertools.product(H.vertices, repeat=len(G)))
    pairs = map_adjacency(maps, H, G, max_cells, "exponential_graph")
    return Graph(maps, ((maps[a], maps[b]) for a, b in pairs))


def as_vertex_map(G: Graph, H: Graph, f: Tuple[Vertex, ...]) -> VertexMap:
    """Read a vertex of H^G as the map G -> H it names"""
    return VertexMap(G, H, tuple(f))


def _dominated_pair(order: Sequence[Vertex], rank: Mapping[Vertex, int],
                    nbrs: Mapping[Vertex, Set[Vertex]]) -> Optional[Tuple[Vertex, Vertex]]:
    for v in order:
        nv = nbrs[v]
        if nv:
            # any w with N(v) ⊆ N(w) is adjacent to every member of N(v)
            u0 = min(nv, key=rank.__getitem__)
            candidates = sorted(nbrs[u0], key=rank.__getitem__)
        else:
            candidates = order
        for w in candidates:
            if w != v and nv <= nbrs[w]:
                return v, w
    return None


def find_dominated(G: Graph) -> Optional[Tuple[Vertex, Vertex]]:
    """Least pair (v, w) in vertex order with v != w and N(v) ⊆ N(w)"""
    nbrs = {v: set(G.neighbors(v)) for v in G.vertices}
    rank = {v: i for i, v in enumerate(G.vertices)}
    return _dominated_pair(G.vertices, rank, nbrs)


@dataclass(frozen=True)
class FoldSequence:
    """Fold steps (v, w): v is removed, having N(v) ⊆ N(w) at that moment"""

    steps: Tuple[Tuple[Vertex, Vertex], ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def replay(self, G: Graph) -> Graph:
        residual = G
        for v, w in self.steps:
            if v not in residual or w not in residual:
                raise InvalidInput(f"fold ({v!r}, {w!r}) refers to a vertex no longer present")
            if v == w or not residual.neighbors(v) <= residual.neighbors(w):
                raise InvalidInput(f"fold ({v!r}, {w!r}) is not a domination N(v) ⊆ N(w)")
            residual = without(residual, v)
        return residual


@dataclass(frozen=True)
class DismantleResult:
    is_dismantlable: bool
    witness: FoldSequence
    residual: Graph


def is_looped_point(G: Graph) -> bool:
    return len(G) == 1 and G.is_looped(G.vertices[0])


def dismantle(G: Graph) -> DismantleResult:
    """Greedy folding with lexicographic tie-break until no vertex is dominated.

    The residual of exhaustive folding is unique up to isomorphism, so the
    greedy order decides dismantlability.
    """
    if len(G) == 0:
        raise InvalidInput("cannot dismantle the empty graph")
    nbrs = {v: set(G.neighbors(v)) for v in G.vertices}
    rank = {v: i for i, v in enumerate(G.vertices)}
    order = list(G.vertices)
    steps = []
    while True:
        pair = _dominated_pair(order, rank, nbrs)
        if pair is None:
            break
        v, w = pair
        steps.append(pair)
        for u in nbrs.pop(v):
            if u != v:
                nbrs[u].discard(v)
        order.remove(v)

    residual = induced_subgraph(G, order)
    return DismantleResult(is_looped_point(residual), FoldSequence(tuple(steps)), residual)


def random_dismantlable_graph(n: int, rng: random.Random, attach_probability: float = 0.35) -> Graph:
    """Reflexive dismantlable graph on n vertices built by reverse folding.

    Vertex v joins next to an earlier vertex w and a random part of N(w), so
    N(v) ⊆ N(w) holds when v is added and v folds back onto w.
    """
    if n < 1:
        raise InvalidInput("a dismantlable graph needs at least one vertex")
    nbrs: Dict[int, Set[int]] = {0: {0}}
    for v in range(1, n):
        w = rng.randrange(v)
        attach = {w} | {u for u in sorted(nbrs[w]) if u != w and rng.random() < attach_probability}
        nbrs[v] = attach | {v}
        for u in attach:
            nbrs[u].add(v)
    return Graph(range(n), ((u, v) for u in nbrs for v in nbrs[u]))
