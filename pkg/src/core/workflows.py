"""
Core verification workflows
"""

import asyncio
import logging
import time
from typing import Any, Dict, List, Mapping, Optional

from .errors import DEFAULT_MAX_CELLS, InvalidInput
from .graph import Graph, complete_graph, dismantle
from .hom import hom_complex_exponential, hom_complex_order
from .homology import betti_z2
from .simplicial import SimplicialComplex, barycenter, f_vector, label_text
from .universality import (
    BallCover, build_g_kx, cover_holds, cover_nerve, fold_outer_layer,
    minimal_non_faces, params_for,
)
from ..utils.helpers import format_betti, log_separator

logger = logging.getLogger(__name__)

ROUTES = ("exp", "poset")


def face_label(face) -> str:
    """Report key of a face of X: the vertex itself, or its canonical barycenter text"""
    return label_text(barycenter(face))


class UniversalityWorkflow:
    """Builds G_{k,X} and checks that Δ((G_{k,X})^T) has the Z/2 Betti numbers of X,
    together with the ball, intersection, layer and nerve checks behind it"""

    def __init__(self, max_cells: int = DEFAULT_MAX_CELLS, route: str = "exp", workers: int = 4):
        if route not in ROUTES:
            raise InvalidInput(f"route must be one of {ROUTES}, got {route!r}")
        self.max_cells = max_cells
        self.route = route
        self.workers = max(1, workers)

    def hom_complex(self, T: Graph, G: Graph) -> SimplicialComplex:
        if self.route == "poset":
            return hom_complex_order(T, G, self.max_cells)
        return hom_complex_exponential(T, G, self.max_cells)

    async def _run_checks(self, jobs: Mapping[str, Any], func) -> Dict[str, Any]:
        """Run func on each job in worker threads; results keep the job order"""
        gate = asyncio.Semaphore(self.workers)

        async def run_one(job):
            async with gate:
                return await asyncio.to_thread(func, job)

        results = await asyncio.gather(*[run_one(job) for job in jobs.values()])
        return dict(zip(jobs.keys(), results))

    async def verify(self, T: Graph, X: SimplicialComplex, k: Optional[int] = None) -> Dict[str, Any]:
        log_separator("VERIFYING UNIVERSALITY")
        workflow_start = time.time()

        params = params_for(T, k)
        logger.info("[VERIFY] k=%d (diam T=%d, route=%s)", params.k, params.d, self.route)

        stage_start = time.time()
        Gkx = build_g_kx(X, params.k, self.max_cells)
        cover = BallCover(Gkx, X.vertices, params.k)
        logger.info("[BUILD] G_{k,X}: %d vertices, %d edges in %.2fs",
                    len(Gkx), Gkx.edge_count(), time.time() - stage_start)

        stage_start = time.time()
        hom = self.hom_complex(T, Gkx)
        betti_hom = betti_z2(hom, self.max_cells)
        betti_x = betti_z2(X, self.max_cells)
        logger.info("[HOM] f-vector %s, Betti %s vs X %s in %.2fs",
                    f_vector(hom), format_betti(betti_hom), format_betti(betti_x),
                    time.time() - stage_start)

        stage_start = time.time()
        balls = await self._run_checks(
            {label_text(x): cover.ball_subgraph(x) for x in X.vertices},
            lambda g: dismantle(g).is_dismantlable,
        )
        faces = [f for f in X.all_faces() if len(f) > 1]
        intersections = await self._run_checks(
            {face_label(f): cover.intersection_subgraph(f) for f in faces},
            lambda g: len(g) > 0 and dismantle(g).is_dismantlable,
        )
        non_faces_empty = {
            face_label(s): not cover.intersection(s) for s in minimal_non_faces(X)
        }
        layer_folds: Dict[str, bool] = {}
        if params.k >= 2:
            layer_folds = await self._run_checks(
                {label_text(x): x for x in X.vertices},
                lambda x: fold_outer_layer(X, params.k, x, self.max_cells).holds,
            )
        logger.info("[VERIFY] ball, intersection and layer checks in %.2fs", time.time() - stage_start)

        _, nerve_matches = cover_nerve(X, params.k, self.max_cells, cover=cover)
        supported = cover_holds(hom, cover)

        report = {
            "k": params.k,
            "g_size": {"vertices": len(Gkx), "edges": Gkx.edge_count(), "loops": Gkx.loop_count()},
            "complex_size": {"f_vector": f_vector(hom)},
            "betti_x": list(betti_x),
            "betti_hom": list(betti_hom),
            "match": betti_x.matches(betti_hom),
            "balls_dismantlable": balls,
            "intersections_dismantlable": intersections,
            "non_faces_empty": non_faces_empty,
            "layer_folds": layer_folds,
            "cover_holds": supported,
            "nerve_matches": nerve_matches,
            "route": self.route,
        }
        logger.info("[VERIFY] match=%s nerve=%s completed in %.2f seconds",
                    report["match"], nerve_matches, time.time() - workflow_start)
        return report


def verify_universality(T: Graph, X: SimplicialComplex, k: Optional[int] = None,
                        max_cells: int = DEFAULT_MAX_CELLS, route: str = "exp",
                        workers: int = 4) -> Dict[str, Any]:
    return asyncio.run(UniversalityWorkflow(max_cells, route, workers).verify(T, X, k))


def conjecture_experiment(complexes: Mapping[str, SimplicialComplex], T: Optional[Graph] = None,
                          max_cells: int = DEFAULT_MAX_CELLS) -> Dict[str, Any]:
    """Compare Betti(X) with Betti(Δ((G_{1,X})^T)) below the k >= 2 floor; nothing is asserted"""
    T = T if T is not None else complete_graph(2)
    log_separator("CONJECTURE EXPERIMENT (k = 1)")
    rows: List[Dict[str, Any]] = []
    for name, X in complexes.items():
        G1 = build_g_kx(X, 1, max_cells)
        betti_x = betti_z2(X, max_cells)
        betti_hom = betti_z2(hom_complex_exponential(T, G1, max_cells), max_cells)
        rows.append({
            "name": name,
            "betti_x": list(betti_x),
            "betti_hom": list(betti_hom),
            "match": betti_x.matches(betti_hom),
        })
        logger.info("[VERIFY] %s: X %s, Hom %s", name, format_betti(betti_x), format_betti(betti_hom))
    return {"k": 1, "t_vertices": len(T), "results": rows}
