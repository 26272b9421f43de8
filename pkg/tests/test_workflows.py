import pytest

from src.core.errors import InvalidInput
from src.core.homology import BettiVector
from src.core.graph import complete_graph, path_graph
from src.core.workflows import UniversalityWorkflow, conjecture_experiment, verify_universality


def checks_pass(report):
    return (
        report["match"]
        and report["cover_holds"]
        and report["nerve_matches"]
        and all(report["balls_dismantlable"].values())
        and all(report["intersections_dismantlable"].values())
        and all(report["non_faces_empty"].values())
        and all(report["layer_folds"].values())
    )


def test_verify_triangle_boundary(k2, boundary_delta2):
    report = verify_universality(k2, boundary_delta2)
    assert report["k"] == 2
    assert report["g_size"] == {"vertices": 12, "edges": 12, "loops": 12}
    assert report["betti_x"] == [1, 1]
    assert BettiVector(report["betti_hom"]).matches([1, 1])
    assert sorted(report["balls_dismantlable"]) == ["a", "b", "c"]
    assert set(report["intersections_dismantlable"]) == {"{a|b}", "{a|c}", "{b|c}"}
    assert report["non_faces_empty"] == {"{a|b|c}": True}
    assert report["route"] == "exp"
    assert checks_pass(report)


@pytest.mark.parametrize("name", ["delta2", "two_points", "edge", "vertex"])
def test_verify_small_complexes(k2, suite, name):
    report = verify_universality(k2, suite[name])
    assert checks_pass(report), report


def test_verify_sphere(k2, boundary_delta3):
    report = verify_universality(k2, boundary_delta3)
    assert BettiVector(report["betti_hom"]).matches([1, 0, 1])
    assert checks_pass(report)


def test_verify_through_hom_poset(k2, boundary_delta2):
    report = verify_universality(k2, boundary_delta2, route="poset")
    assert report["route"] == "poset"
    assert report["match"] and report["cover_holds"]


def test_verify_with_looped_point(point, boundary_delta2):
    report = verify_universality(point, boundary_delta2)
    assert report["k"] == 1
    assert report["layer_folds"] == {}
    assert checks_pass(report)


def test_verify_with_forced_larger_k(k2, two_points):
    report = verify_universality(k2, two_points, k=3)
    assert report["k"] == 3
    assert checks_pass(report)


def test_verify_rejects_k_below_minimum(two_points):
    with pytest.raises(InvalidInput):
        verify_universality(path_graph(3), two_points, k=2)


def test_workflow_rejects_unknown_route():
    with pytest.raises(InvalidInput, match="route"):
        UniversalityWorkflow(route="bogus")


def test_conjecture_experiment(suite):
    complexes = {name: suite[name] for name in ("boundary_delta2", "delta2", "two_points")}
    result = conjecture_experiment(complexes)
    assert result["k"] == 1
    assert result["t_vertices"] == 2
    assert [row["name"] for row in result["results"]] == list(complexes)
    rows = {row["name"]: row for row in result["results"]}
    assert rows["delta2"]["betti_x"] == [1, 0, 0]
    assert rows["two_points"]["match"]


def test_conjecture_experiment_with_custom_target(suite):
    result = conjecture_experiment({"edge": suite["edge"]}, T=complete_graph(2, looped=True))
    assert result["t_vertices"] == 2
    assert result["results"][0]["match"]
