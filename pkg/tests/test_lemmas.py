import pytest

from src.core.graph import complete_graph, exponential_graph, path_graph, product
from src.core.hom import enumerate_homs
from src.services.lemma_service import (
    LemmaService, adjunction_pool, adjunction_triples, curry, four_vertex_pool,
)

FAST = {
    "diameter_samples": 40,
    "subdivision_graphs": 6,
    "contractibility_graphs": 3,
    "max_random_vertices": 6,
}


@pytest.fixture
def service():
    return LemmaService(seed=0, config=FAST)


def test_config_overrides_defaults(service):
    assert service.config["diameter_samples"] == 40
    assert service.config["hom_cells"] == 20_000
    assert LemmaService(max_cells=500).hom_cells == 500


def test_diameter_bound(service):
    check = service.check_diameter_bound()
    assert check.samples == 40
    assert check.passed, check.failures


def test_subdivision_keeps_dismantlability(service):
    check = service.check_subdivision()
    assert check.passed, check.failures


def test_contractibility(service):
    check = service.check_contractibility()
    assert check.passed, check.failures


def test_adjunction(service):
    check = service.check_adjunction()
    assert check.samples == len(adjunction_pool()) ** 3 + 3 * len(four_vertex_pool()) * len(adjunction_pool()) ** 2
    assert check.passed, check.failures


def test_curry_matches_exponential_maps():
    A, B, C = path_graph(3), complete_graph(2), complete_graph(3)
    curried = {curry(A, B, f.images) for f in enumerate_homs(product(A, B), C)}
    direct = {f.images for f in enumerate_homs(A, exponential_graph(C, B))}
    assert curried == direct
    assert len(direct) > 0


def test_same_seed_same_report():
    first = LemmaService(seed=3, config=FAST).check_subdivision()
    second = LemmaService(seed=3, config=FAST).check_subdivision()
    assert first == second


def test_run_reports_every_check():
    report = LemmaService(seed=1, config=dict(FAST, diameter_samples=10)).run()
    assert report.seed == 1
    assert [c.name for c in report.checks] == ["diameter_bound", "subdivision", "contractibility", "adjunction"]
    assert report.passed


def test_adjunction_triples_reach_four_vertices():
    counted = [(A, B, C) for _, A, B, C, compare_betti in adjunction_triples() if not compare_betti]
    assert counted
    assert all(max(len(A), len(B), len(C)) == 4 for A, B, C in counted)


@pytest.mark.parametrize("a, b, c", [
    ("c4", "k2", "k3"),
    ("k2", "reflexive_c4", "end_looped_path4"),
    ("path3", "end_looped_path4", "k2"),
])
def test_curry_on_four_vertex_graphs(a, b, c):
    pool = dict(adjunction_pool(), **four_vertex_pool())
    A, B, C = pool[a], pool[b], pool[c]
    curried = {curry(A, B, f.images) for f in enumerate_homs(product(A, B), C)}
    direct = {f.images for f in enumerate_homs(A, exponential_graph(C, B))}
    assert curried == direct
    assert len(direct) > 0
