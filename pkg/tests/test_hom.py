import random

import pytest

from src.core.errors import CellCapExceeded, InvalidInput
from src.core.graph import (
    Graph, complete_graph, cycle_graph, diameter, looped_point, path_graph,
    random_dismantlable_graph,
)
from src.core.hom import (
    MultiHom, enumerate_homs, hom_cellular_betti, hom_complex_exponential,
    hom_complex_order, hom_poset, is_multihom, looped_exponential_graph,
    sample_clique, support_subgraph,
)
from src.core.homology import betti_z2
from src.core.simplicial import f_vector
from src.core.universality import build_g_kx


def test_enumerate_homs_counts(k2, k3, point):
    assert len(enumerate_homs(k2, k3)) == 6
    assert len(enumerate_homs(k2, cycle_graph(12, looped=True))) == 36
    assert len(enumerate_homs(k3, point)) == 1
    assert enumerate_homs(k2, complete_graph(1)) == []


def test_enumerate_homs_order(k2, k3):
    images = [f.images for f in enumerate_homs(k2, k3)]
    assert images == [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]


def test_enumerate_homs_respects_cap(k2, k3):
    with pytest.raises(CellCapExceeded) as info:
        enumerate_homs(k2, k3, max_cells=3)
    assert info.value.stage == "enumerate_homs"


def test_looped_source_needs_looped_targets(point, k3):
    assert enumerate_homs(point, k3) == []
    assert len(enumerate_homs(point, complete_graph(3, looped=True))) == 3


def test_multihom_validation(k2, k3):
    with pytest.raises(InvalidInput, match="empty set"):
        MultiHom.from_mapping(k2, {0: {0}, 1: set()})
    with pytest.raises(InvalidInput, match="not total"):
        MultiHom.from_mapping(k2, {0: {0}})
    assert is_multihom(k2, k3, MultiHom.from_mapping(k2, {0: {0, 1}, 1: {2}}))
    assert not is_multihom(k2, k3, MultiHom.from_mapping(k2, {0: {0, 1}, 1: {1}}))


def test_hom_poset_k2_k3(k2, k3):
    P = hom_poset(k2, k3)
    assert len(P) == 12
    assert len(P.atoms()) == 6
    assert len(P.covers) == 12
    assert all(is_multihom(k2, k3, eta) for eta in P.elements)
    exported = P.export()
    assert len(exported["elements"]) == 12 and len(exported["covers"]) == 12


def test_hom_poset_atoms_are_graph_maps(k2, k3, path3):
    for T, G in ((k2, k3), (path3, k3), (k2, cycle_graph(6, looped=True))):
        atoms = {tuple(next(iter(s)) for s in eta.sets) for eta in hom_poset(T, G).atoms()}
        assert atoms == {f.images for f in enumerate_homs(T, G)}


def test_hom_poset_covers_add_one_vertex(k2, k3):
    for a, b in hom_poset(k2, k3).covers:
        assert a.leq(b)
        assert b.dimension == a.dimension + 1


def test_hom_complex_order_k2_k3(k2, k3):
    X = hom_complex_order(k2, k3)
    assert f_vector(X) == [12, 12]
    assert betti_z2(X) == (1, 1)


def test_hom_complex_of_two_maps(k2):
    assert betti_z2(hom_complex_order(k2, k2)) == (2,)
    assert betti_z2(hom_complex_exponential(k2, k2)) == (2,)


def test_hom_from_looped_point_is_clique_complex(point):
    X = hom_complex_order(point, complete_graph(3, looped=True))
    assert f_vector(X) == [7, 12, 6]
    assert betti_z2(X) == (1, 0, 0)


def test_hom_poset_respects_cap(k2, k3):
    with pytest.raises(CellCapExceeded) as info:
        hom_poset(k2, k3, max_cells=4)
    assert info.value.stage == "hom_poset"


def test_hom_complex_exponential(k2, k3, point):
    X = hom_complex_exponential(k2, k3)
    assert len(X.vertices) == 6
    assert betti_z2(X) == (1, 1)
    Y = hom_complex_exponential(k2, cycle_graph(12, looped=True))
    assert len(Y.vertices) == 36
    assert betti_z2(Y).matches([1, 1])
    assert f_vector(hom_complex_exponential(k3, point)) == [1]


PAIRS = [
    ("k2", "k3"),
    ("k2", "k2"),
    ("point", "reflexive_c4"),
    ("path3", "k3"),
    ("k2", "reflexive_path3"),
]


def graph_named(name):
    return {
        "k2": complete_graph(2),
        "k3": complete_graph(3),
        "point": looped_point(),
        "path3": path_graph(3),
        "reflexive_c4": cycle_graph(4, looped=True),
        "reflexive_path3": path_graph(3, looped=True),
    }[name]


@pytest.mark.parametrize("t_name,g_name", PAIRS)
def test_routes_agree(t_name, g_name):
    T, G = graph_named(t_name), graph_named(g_name)
    order = betti_z2(hom_complex_order(T, G))
    assert order.matches(betti_z2(hom_complex_exponential(T, G)))
    assert order.matches(hom_cellular_betti(T, G))


def test_hom_into_dismantlable_graph_is_acyclic():
    rng = random.Random(4)
    for _ in range(5):
        G = random_dismantlable_graph(5, rng)
        for T in (complete_graph(2), looped_point(), path_graph(3)):
            assert hom_cellular_betti(T, G).matches([1])


def test_support_subgraph(k2, k3):
    assert support_subgraph(k2, k3, [(0, 1)]) == complete_graph(2)
    f = enumerate_homs(k2, k3)[0]
    assert support_subgraph(k2, k3, [f]) == complete_graph(2)
    assert len(support_subgraph(k2, looped_point(), [(0, 0)])) == 1


def test_support_subgraph_requires_clique(k2, k3):
    with pytest.raises(InvalidInput, match="clique"):
        support_subgraph(k2, k3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidInput):
        support_subgraph(k2, k3, [])


def test_support_subgraph_reads_tuples_as_maps_into_g(k2, k3):
    with pytest.raises(InvalidInput, match="not a target vertex"):
        support_subgraph(k2, k3, [(0, 7)])
    with pytest.raises(InvalidInput, match="every vertex of T"):
        support_subgraph(k2, k3, [(0,)])


def test_support_of_adjacent_maps_has_small_diameter(k2, boundary_delta2):
    G = build_g_kx(boundary_delta2, 2)
    L = looped_exponential_graph(G, k2)
    assert len(L) == 36
    for f, g in L.edges():
        assert diameter(support_subgraph(k2, G, [f, g])) <= 2


def test_sample_clique_returns_clique(k2, k3):
    L = looped_exponential_graph(cycle_graph(12, looped=True), k2)
    rng = random.Random(1)
    for _ in range(20):
        alpha = sample_clique(L, rng)
        assert all(L.has_edge(f, g) for f in alpha for g in alpha)
    with pytest.raises(InvalidInput):
        sample_clique(Graph(["a"]), rng)
