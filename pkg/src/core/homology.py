"""
Simplicial homology with Z/2 coefficients.

Boundary matrices are stored column-major in scipy's CSC format; ranks come
from the standard left-to-right column reduction with a low -> pivot table.
"""

from typing import Iterable, List, Sequence

import numpy as np
from scipy.sparse import csc_matrix

from .errors import DEFAULT_MAX_CELLS, InvalidInput, check_cap
from .simplicial import SimplicialComplex, f_vector


class Z2Matrix:
    """Sparse 0/1 matrix over Z/2, one sorted duplicate-free row list per column"""

    __slots__ = ("matrix",)

    def __init__(self, n_rows: int, columns: Iterable[Iterable[int]]):
        indices: List[int] = []
        indptr = [0]
        for col in columns:
            rows = sorted(set(col))
            if rows and (rows[0] < 0 or rows[-1] >= n_rows):
                raise InvalidInput(f"row index out of range for {n_rows} rows")
            indices.extend(rows)
            indptr.append(len(indices))
        data = np.ones(len(indices), dtype=np.int64)
        self.matrix = csc_matrix(
            (data, np.asarray(indices, dtype=np.int64), np.asarray(indptr, dtype=np.int64)),
            shape=(n_rows, len(indptr) - 1),
        )

    @property
    def shape(self):
        return self.matrix.shape

    @property
    def n_cols(self) -> int:
        return self.matrix.shape[1]

    def column(self, j: int) -> np.ndarray:
        m = self.matrix
        return m.indices[m.indptr[j]:m.indptr[j + 1]]

    def columns(self) -> List[List[int]]:
        return [self.column(j).tolist() for j in range(self.n_cols)]

    def __repr__(self) -> str:
        return f"Z2Matrix(shape={self.shape}, nnz={self.matrix.nnz})"


class BettiVector(tuple):
    """Unreduced Z/2 Betti numbers b_0, b_1, ..."""

    def trimmed(self) -> "BettiVector":
        values = list(self)
        while values and values[-1] == 0:
            values.pop()
        return BettiVector(values)

    def matches(self, other: Sequence[int]) -> bool:
        """Equality after dropping trailing zeros"""
        return self.trimmed() == BettiVector(other).trimmed()

    @property
    def euler(self) -> int:
        return sum((-1) ** d * b for d, b in enumerate(self))

    def __repr__(self) -> str:
        return f"BettiVector({list(self)})"


def boundary_matrices(X: SimplicialComplex) -> List[Z2Matrix]:
    """[∂_1, ..., ∂_dim]: rows are (d-1)-faces, columns d-faces, in face order"""
    faces = X.faces
    matrices = []
    for d in range(1, len(faces)):
        row_index = {face: i for i, face in enumerate(faces[d - 1])}
        columns = ([row_index[tau - {v}] for v in tau] for tau in faces[d])
        matrices.append(Z2Matrix(len(faces[d - 1]), columns))
    return matrices


def z2_rank(M: Z2Matrix) -> int:
    pivots = {}
    rank = 0
    for j in range(M.n_cols):
        col = set(M.column(j).tolist())
        while col:
            low = max(col)
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                rank += 1
                break
            col ^= other
    return rank


def betti_from_boundaries(cell_counts: Sequence[int], matrices: Sequence[Z2Matrix]) -> BettiVector:
    """b_d = dim ker ∂_d - rank ∂_{d+1}; matrices[d-1] is ∂_d"""
    ranks = [0] + [z2_rank(M) for M in matrices] + [0]
    return BettiVector(
        cell_counts[d] - ranks[d] - ranks[d + 1] for d in range(len(cell_counts))
    )


def betti_z2(X: SimplicialComplex, max_cells: int = DEFAULT_MAX_CELLS) -> BettiVector:
    counts = f_vector(X)
    check_cap("homology", sum(counts), max_cells)
    return betti_from_boundaries(counts, boundary_matrices(X))


def euler_characteristic(X: SimplicialComplex) -> int:
    return sum((-1) ** d * f for d, f in enumerate(f_vector(X)))


def boundary_squares_vanish(X: SimplicialComplex) -> bool:
    """∂_d ∘ ∂_{d+1} = 0 mod 2 in every dimension"""
    matrices = boundary_matrices(X)
    for lower, upper in zip(matrices, matrices[1:]):
        composite = lower.matrix @ upper.matrix
        if np.any(composite.data % 2):
            return False
    return True
