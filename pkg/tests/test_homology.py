import random

import networkx as nx
import pytest

from src.core.errors import CellCapExceeded, InvalidInput
from src.core.homology import (
    BettiVector, Z2Matrix, betti_from_boundaries, betti_z2, boundary_matrices,
    boundary_squares_vanish, euler_characteristic, z2_rank,
)
from src.core.simplicial import barycentric_subdivision, looped_one_skeleton


def test_boundary_of_edge(edge_complex):
    (d1,) = boundary_matrices(edge_complex)
    assert d1.shape == (2, 1)
    assert d1.columns() == [[0, 1]]


def test_boundary_of_triangle_boundary(boundary_delta2):
    (d1,) = boundary_matrices(boundary_delta2)
    assert d1.shape == (3, 3)
    assert z2_rank(d1) == 2


def test_point_has_no_boundary_matrices(vertex_complex):
    assert boundary_matrices(vertex_complex) == []


def test_betti_numbers(suite):
    assert betti_z2(suite["boundary_delta2"]) == (1, 1)
    assert betti_z2(suite["delta2"]) == (1, 0, 0)
    assert betti_z2(suite["boundary_delta3"]) == (1, 0, 1)
    assert betti_z2(suite["two_points"]) == (2,)
    assert betti_z2(suite["vertex"]) == (1,)


def test_euler_characteristic(suite):
    assert euler_characteristic(suite["boundary_delta3"]) == 2
    assert euler_characteristic(suite["boundary_delta2"]) == 0
    assert euler_characteristic(suite["vertex"]) == 1
    for X in suite.values():
        assert betti_z2(X).euler == euler_characteristic(X)


def test_boundary_squares_vanish(suite):
    for X in suite.values():
        assert boundary_squares_vanish(X)
    assert boundary_squares_vanish(barycentric_subdivision(suite["boundary_delta3"]))


def test_betti_invariant_under_subdivision(suite):
    for X in suite.values():
        assert betti_z2(barycentric_subdivision(X)).matches(betti_z2(X))


def test_b0_counts_components(suite):
    for X in suite.values():
        components = nx.number_connected_components(looped_one_skeleton(X).to_networkx())
        assert betti_z2(X)[0] == components


def test_rank_ignores_column_order(boundary_delta3):
    rng = random.Random(2)
    for M in boundary_matrices(barycentric_subdivision(boundary_delta3)):
        columns = M.columns()
        rng.shuffle(columns)
        assert z2_rank(Z2Matrix(M.shape[0], columns)) == z2_rank(M)


def test_rank_over_z2():
    assert z2_rank(Z2Matrix(3, [[0, 1], [0, 1], [1, 2]])) == 2
    assert z2_rank(Z2Matrix(3, [[0, 1], [1, 2], [0, 2]])) == 2
    assert z2_rank(Z2Matrix(2, [])) == 0


def test_matrix_rejects_out_of_range_rows():
    with pytest.raises(InvalidInput):
        Z2Matrix(2, [[0, 5]])


def test_betti_vector_comparison():
    assert BettiVector([1, 0, 0]).matches([1])
    assert not BettiVector([1, 1]).matches([1])
    assert BettiVector([1, 0, 1, 0]).trimmed() == (1, 0, 1)
    assert BettiVector([1, 0, 1]).euler == 2


def test_betti_respects_cap(boundary_delta3):
    with pytest.raises(CellCapExceeded) as info:
        betti_z2(boundary_delta3, max_cells=5)
    assert info.value.stage == "homology"


def test_betti_from_boundaries_on_circle(boundary_delta2):
    betti = betti_from_boundaries([3, 3], boundary_matrices(boundary_delta2))
    assert list(betti) == [1, 1]
    assert betti_from_boundaries([4], []) == BettiVector([4])
