"""
Shared fixtures: standard graphs and complexes
"""

from pathlib import Path

import pytest

from src.core.graph import Graph, complete_graph, cycle_graph, looped_point, path_graph
from src.core.simplicial import complex_from_facets, from_facets

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def path3():
    return path_graph(3)


@pytest.fixture
def point():
    return looped_point()


@pytest.fixture
def reflexive_c4():
    return cycle_graph(4, looped=True)


@pytest.fixture
def reflexive_c6():
    return cycle_graph(6, looped=True)


@pytest.fixture
def boundary_delta2():
    return complex_from_facets([["a", "b"], ["b", "c"], ["a", "c"]])


@pytest.fixture
def delta2():
    return complex_from_facets([["a", "b", "c"]])


@pytest.fixture
def boundary_delta3():
    return complex_from_facets([["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]])


@pytest.fixture
def two_points():
    return from_facets(["a", "b"], [["a"], ["b"]])


@pytest.fixture
def edge_complex():
    return complex_from_facets([["a", "b"]])


@pytest.fixture
def vertex_complex():
    return complex_from_facets([["a"]])


@pytest.fixture
def suite(boundary_delta2, delta2, boundary_delta3, two_points, edge_complex, vertex_complex):
    return {
        "boundary_delta2": boundary_delta2,
        "delta2": delta2,
        "boundary_delta3": boundary_delta3,
        "two_points": two_points,
        "edge": edge_complex,
        "vertex": vertex_complex,
    }


@pytest.fixture
def small_graphs():
    """Graphs on at most three vertices, with and without loops"""
    return [
        looped_point(),
        Graph(["a"]),
        complete_graph(2),
        complete_graph(2, looped=True),
        Graph(["a", "b"], [("a", "a"), ("a", "b")]),
        path_graph(3),
        complete_graph(3),
    ]


@pytest.fixture
def four_vertex_graphs():
    """Four-vertex graphs: loopless, reflexive and looped only at the ends"""
    return [
        cycle_graph(4),
        cycle_graph(4, looped=True),
        Graph([0, 1, 2, 3], [(0, 0), (0, 1), (1, 2), (2, 3), (3, 3)]),
    ]
