import pytest

from src.core.errors import InvalidInput
from src.core.graph import Graph, dismantle, is_connected, is_reflexive, path_graph
from src.core.hom import hom_complex_exponential
from src.core.homology import betti_z2
from src.core.simplicial import FaceName, clique_complex
from src.core.universality import (
    BallCover, ConstructionParams, ball_radius, ball_subgraph, build_g_kx,
    choose_k, cover_holds, cover_nerve, fold_outer_layer, intersection_subgraph,
    minimal_non_faces, params_for, vertex_type, vertex_types,
)


def test_choose_k(k2, path3, point):
    assert choose_k(k2) == ConstructionParams(k=2, d=1)
    assert choose_k(path3) == ConstructionParams(k=3, d=2)
    assert choose_k(point) == ConstructionParams(k=1, d=0, special_case_point=True)
    assert choose_k(path_graph(4)).k == 3
    assert choose_k(path_graph(5)).k == 4


def test_choose_k_rejects_unusable_targets():
    with pytest.raises(InvalidInput, match="connected"):
        choose_k(Graph(["a", "b"]))
    with pytest.raises(InvalidInput):
        choose_k(Graph(["a"]))


def test_construction_params_validation():
    with pytest.raises(InvalidInput):
        ConstructionParams(k=1, d=1)
    with pytest.raises(InvalidInput):
        ConstructionParams(k=2, d=2)
    assert ConstructionParams(k=3, d=2).radius == 7
    assert ball_radius(2) == 3


def test_params_for(k2):
    assert params_for(k2).k == 2
    assert params_for(k2, 3) == ConstructionParams(k=3, d=1)
    with pytest.raises(InvalidInput, match="below the minimal"):
        params_for(k2, 1)


def test_g_kx_of_triangle_boundary_is_reflexive_12_cycle(boundary_delta2):
    G = build_g_kx(boundary_delta2, 2)
    assert len(G) == 12 and G.edge_count() == 12 and G.loop_count() == 12
    assert is_connected(G)
    assert all(len(G.neighbors(v)) == 3 for v in G.vertices)


def test_g_kx_of_point_and_edge(vertex_complex, edge_complex):
    G = build_g_kx(vertex_complex, 3)
    assert len(G) == 1 and is_reflexive(G)

    G = build_g_kx(edge_complex, 1)
    mid = FaceName(["a", "b"])
    assert G.vertices == ("a", "b", mid)
    assert G.has_edge("a", mid) and G.has_edge("b", mid)
    assert not G.has_edge("a", "b")
    assert is_reflexive(G)


def test_g_kx_rejects_bad_depth(boundary_delta2):
    with pytest.raises(InvalidInput):
        build_g_kx(boundary_delta2, 0)


def test_balls_of_triangle_boundary(boundary_delta2):
    G = build_g_kx(boundary_delta2, 2)
    for x in "abc":
        ball = ball_subgraph(G, x, 2)
        assert len(ball) == 7
        assert ball.edge_count() == 6
        assert dismantle(ball).is_dismantlable


def test_ball_at_depth_one(edge_complex):
    G = build_g_kx(edge_complex, 1)
    assert set(ball_subgraph(G, "a", 1).vertices) == {"a", FaceName(["a", "b"])}


def test_ball_center_must_be_original(boundary_delta2):
    G = build_g_kx(boundary_delta2, 2)
    with pytest.raises(InvalidInput, match="original vertex"):
        ball_subgraph(G, FaceName(["a", "b"]), 2)
    with pytest.raises(InvalidInput, match="original vertex"):
        ball_subgraph(G, "z", 2)


def test_intersections_of_triangle_boundary(boundary_delta2):
    G = build_g_kx(boundary_delta2, 2)
    edge = intersection_subgraph(G, ["a", "b"], 2)
    assert len(edge) == 3
    assert dismantle(edge).is_dismantlable
    assert len(intersection_subgraph(G, ["a", "b", "c"], 2)) == 0


def test_minimal_non_faces(boundary_delta2, two_points, delta2, boundary_delta3):
    assert minimal_non_faces(boundary_delta2) == [frozenset("abc")]
    assert minimal_non_faces(two_points) == [frozenset("ab")]
    assert minimal_non_faces(delta2) == []
    assert minimal_non_faces(boundary_delta3) == [frozenset("abcd")]


def test_cover_checks_on_suite(suite):
    for name, X in suite.items():
        G = build_g_kx(X, 2)
        cover = BallCover(G, X.vertices, 2)
        for x in X.vertices:
            assert dismantle(cover.ball_subgraph(x)).is_dismantlable, name
        for face in X.all_faces():
            if len(face) > 1:
                assert dismantle(cover.intersection_subgraph(face)).is_dismantlable, name
        for s in minimal_non_faces(X):
            assert not cover.intersection(s), name


def test_vertex_types(delta2):
    ab = FaceName(["a", "b"])
    abc = FaceName(["a", "b", "c"])
    assert vertex_type(delta2, 2, "a") == (0, 0)
    assert vertex_type(delta2, 2, ab) == (1, 0)
    assert vertex_type(delta2, 2, abc) == (2, 0)
    assert vertex_type(delta2, 2, FaceName(["a", ab])) == (1, 1)
    assert vertex_type(delta2, 2, FaceName(["a", abc])) == (2, 1)
    assert vertex_type(delta2, 2, FaceName(["a", ab, abc])) == (2, 2)
    with pytest.raises(InvalidInput):
        vertex_type(delta2, 2, "z")


def test_vertex_types_cover_subdivision(boundary_delta2):
    typed = vertex_types(boundary_delta2, 2)
    assert len(typed) == 12
    assert sorted(t.type for t in typed).count((0, 0)) == 3


def test_cover_nerve_recovers_complex(suite):
    for name, X in suite.items():
        N, matches = cover_nerve(X, 2)
        assert matches, name
        assert set(N.vertices) == set(X.vertices)


def test_hom_complex_is_covered_by_balls(k2, boundary_delta2):
    G = build_g_kx(boundary_delta2, 2)
    hom = hom_complex_exponential(k2, G)
    assert cover_holds(hom, BallCover(G, boundary_delta2.vertices, 2))


def test_point_target_uses_clique_complex(point, suite):
    for X in suite.values():
        params = choose_k(point)
        G = build_g_kx(X, params.k)
        assert betti_z2(clique_complex(G)).matches(betti_z2(X))
        assert betti_z2(hom_complex_exponential(point, G)).matches(betti_z2(X))


def test_outer_layer_folds(boundary_delta2, delta2):
    for X in (boundary_delta2, delta2):
        for x in X.vertices:
            fold = fold_outer_layer(X, 2, x)
            assert fold.certified and fold.residual_matches
            assert fold.holds


def test_outer_layer_of_triangle_boundary(boundary_delta2):
    fold = fold_outer_layer(boundary_delta2, 2, "a")
    assert len(fold.steps) == 2


def test_outer_layer_needs_depth_two(boundary_delta2):
    with pytest.raises(InvalidInput):
        fold_outer_layer(boundary_delta2, 1, "a")
