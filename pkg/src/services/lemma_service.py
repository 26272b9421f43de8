"""
Seeded property checks for the lemmas behind the universality construction
"""

import itertools
import logging
import random
import time
from typing import Any, Dict, Iterator, List, Optional, Tuple

from ..config import PIPELINE_CONFIG
from ..core.errors import CellCapExceeded, DEFAULT_MAX_CELLS, InvalidInput
from ..core.graph import (
    Graph, complete_graph, cycle_graph, diameter, dismantle, exponential_graph,
    looped_point, path_graph, product, random_dismantlable_graph,
)
from ..core.hom import (
    enumerate_homs, hom_cellular_betti, hom_complex_order, looped_exponential_graph,
    sample_clique, support_subgraph,
)
from ..core.homology import betti_z2
from ..core.simplicial import (
    SimplicialComplex, barycentric_subdivision, clique_complex, complex_from_facets,
    from_facets, looped_one_skeleton,
)
from ..core.universality import build_g_kx, choose_k
from ..models.responses import LemmaCheck, LemmaReport
from ..utils.helpers import log_separator

logger = logging.getLogger(__name__)

# Resampling budget when a random instance is over the Hom cell cap
MAX_RESAMPLES = 50


def standard_complexes() -> Dict[str, SimplicialComplex]:
    return {
        "boundary_delta2": complex_from_facets([["a", "b"], ["b", "c"], ["a", "c"]]),
        "delta2": complex_from_facets([["a", "b", "c"]]),
        "two_points": from_facets(["a", "b"], [["a"], ["b"]]),
        "edge": complex_from_facets([["a", "b"]]),
    }


def adjunction_pool() -> Dict[str, Graph]:
    """Graphs on at most three vertices"""
    return {
        "point": looped_point(),
        "k2": complete_graph(2),
        "reflexive_edge": complete_graph(2, looped=True),
        "half_looped_edge": Graph([0, 1], [(0, 0), (0, 1)]),
        "path3": path_graph(3),
        "k3": complete_graph(3),
    }


def four_vertex_pool() -> Dict[str, Graph]:
    return {
        "c4": cycle_graph(4),
        "reflexive_c4": cycle_graph(4, looped=True),
        "end_looped_path4": Graph([0, 1, 2, 3], [(0, 0), (0, 1), (1, 2), (2, 3), (3, 3)]),
    }


def adjunction_triples() -> Iterator[Tuple[str, Graph, Graph, Graph, bool]]:
    """(name, A, B, C, compare_betti): every triple over the small pool, then
    every triple with one four-vertex graph, whose maps are only counted"""
    small = list(adjunction_pool().items())
    for (a, A), (b, B), (c, C) in itertools.product(small, repeat=3):
        yield f"({a}, {b}, {c})", A, B, C, True
    for pos in range(3):
        for big in four_vertex_pool().items():
            for rest in itertools.product(small, repeat=2):
                named = list(rest)
                named.insert(pos, big)
                (a, A), (b, B), (c, C) = named
                yield f"({a}, {b}, {c})", A, B, C, False


def curry(A: Graph, B: Graph, images: Tuple) -> Tuple:
    """A map A×B -> C, as images in product order, read as a map A -> C^B"""
    n = len(B)
    return tuple(tuple(images[i * n:(i + 1) * n]) for i in range(len(A)))


class LemmaService:
    """Runs every lemma check with one seeded random source"""

    def __init__(self, seed: int = 0, max_cells: int = DEFAULT_MAX_CELLS,
                 config: Optional[Dict[str, Any]] = None):
        self.seed = seed
        self.max_cells = max_cells
        self.config = dict(PIPELINE_CONFIG["lemmas"], **(config or {}))
        self.rng = random.Random(seed)

    @property
    def hom_cells(self) -> int:
        return min(self.config["hom_cells"], self.max_cells)

    def random_dismantlable(self) -> Graph:
        n = self.rng.randint(1, self.config["max_random_vertices"])
        return random_dismantlable_graph(n, self.rng, self.config["attach_probability"])

    def check_diameter_bound(self) -> LemmaCheck:
        """diam(G_α) ≤ max(2, diam T) for random cliques α of Δ((G_{k,X})^T)"""
        pairs = []
        for t_name, T in (("k2", complete_graph(2)), ("path3", path_graph(3))):
            params = choose_k(T)
            for x_name, X in standard_complexes().items():
                G = build_g_kx(X, params.k, self.max_cells)
                L = looped_exponential_graph(G, T, self.max_cells)
                pairs.append((f"{t_name}/{x_name}", T, G, L, max(2, params.d)))

        failures = []
        samples = self.config["diameter_samples"]
        for i in range(samples):
            name, T, G, L, bound = pairs[i % len(pairs)]
            alpha = sample_clique(L, self.rng)
            try:
                d = diameter(support_subgraph(T, G, alpha))
            except InvalidInput as e:
                failures.append(f"{name}: {e}")
                continue
            if d > bound:
                failures.append(f"{name}: diameter {d} > {bound}")
        return LemmaCheck(name="diameter_bound", samples=samples, passed=not failures, failures=failures)

    def check_subdivision(self) -> LemmaCheck:
        """The looped 1-skeleton of bd(Δ(G)) is dismantlable when G is"""
        failures = []
        samples = self.config["subdivision_graphs"]
        for i in range(samples):
            G = self.random_dismantlable()
            if not dismantle(G).is_dismantlable:
                failures.append(f"graph {i}: generator produced a non-dismantlable graph")
                continue
            H = looped_one_skeleton(barycentric_subdivision(clique_complex(G)))
            if not dismantle(H).is_dismantlable:
                failures.append(f"graph {i} on {len(G)} vertices: subdivision does not dismantle")
        return LemmaCheck(name="subdivision", samples=samples, passed=not failures, failures=failures)

    def _hom_betti(self, S: Graph, G: Graph):
        """Order-complex Betti numbers, or the cellular ones when the chains are over the cap"""
        try:
            return betti_z2(hom_complex_order(S, G, self.hom_cells), self.hom_cells)
        except CellCapExceeded:
            return hom_cellular_betti(S, G, self.hom_cells)

    def check_contractibility(self) -> LemmaCheck:
        """Hom(S, G) has the Betti numbers of a point when G is dismantlable"""
        sources = {"k2": complete_graph(2), "point": looped_point(), "path3": path_graph(3)}
        failures = []
        samples = self.config["contractibility_graphs"]
        for i in range(samples):
            for name, S in sources.items():
                for _ in range(MAX_RESAMPLES):
                    G = self.random_dismantlable()
                    try:
                        betti = self._hom_betti(S, G)
                        break
                    except CellCapExceeded:
                        continue
                else:
                    failures.append(f"graph {i}, S={name}: no instance under the cap")
                    continue
                if not betti.matches([1]):
                    failures.append(f"graph {i}, S={name}: Betti {list(betti)}")
        return LemmaCheck(name="contractibility", samples=samples, passed=not failures, failures=failures)

    def check_adjunction(self) -> LemmaCheck:
        """maps(A×B -> C) and maps(A -> C^B) correspond by currying, with equal Hom Betti numbers"""
        failures = []
        skipped = 0
        samples = 0
        for name, A, B, C, compare_betti in adjunction_triples():
            samples += 1
            AB = product(A, B)
            try:
                CB = exponential_graph(C, B, self.max_cells)
                curried = {curry(A, B, f.images) for f in enumerate_homs(AB, C, self.hom_cells)}
                direct = {f.images for f in enumerate_homs(A, CB, self.hom_cells)}
            except CellCapExceeded:
                skipped += 1
                continue
            if curried != direct:
                failures.append(f"{name}: {len(curried)} maps A×B -> C vs {len(direct)} maps A -> C^B")
                continue
            if not compare_betti:
                continue
            try:
                left = hom_cellular_betti(AB, C, self.hom_cells)
                right = hom_cellular_betti(A, CB, self.hom_cells)
            except CellCapExceeded:
                skipped += 1
                continue
            if not left.matches(right):
                failures.append(f"{name}: Betti {list(left)} vs {list(right)}")
        logger.info("[LEMMAS] adjunction: %d triples, %d over the cap", samples, skipped)
        return LemmaCheck(name="adjunction", samples=samples, passed=not failures, failures=failures)

    def run(self) -> LemmaReport:
        log_separator("LEMMA SUITE")
        checks: List[LemmaCheck] = []
        for check in (self.check_diameter_bound, self.check_subdivision,
                      self.check_contractibility, self.check_adjunction):
            start = time.time()
            result = check()
            logger.info("[LEMMAS] %s: %s in %.2fs", result.name,
                        "holds" if result.passed else "FAILS", time.time() - start)
            checks.append(result)
        return LemmaReport(seed=self.seed, passed=all(c.passed for c in checks), checks=checks)
