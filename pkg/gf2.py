"""Linear algebra over GF(2): row reduction, rank, row-space membership and null spaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class GF2Matrix:
    """A binary matrix; rows are bit-vectors of uniform length."""

    rows: np.ndarray

    def __post_init__(self) -> None:
        if self.rows.ndim != 2:
            raise ValueError("GF2Matrix expects a two-dimensional array")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], width: Optional[int] = None) -> "GF2Matrix":
        data = [list(row) for row in rows]
        if not data:
            if width is None:
                raise ValueError("An empty GF2Matrix needs an explicit width")
            return cls(np.zeros((0, width), dtype=np.uint8))
        lengths = {len(row) for row in data}
        if len(lengths) != 1:
            raise ValueError(f"Rows have differing lengths: {sorted(lengths)}")
        if width is not None and width not in lengths:
            raise ValueError(f"Rows have length {lengths.pop()}, expected {width}")
        return cls((np.asarray(data, dtype=np.uint8) & 1))

    @property
    def num_rows(self) -> int:
        return self.rows.shape[0]

    @property
    def width(self) -> int:
        return self.rows.shape[1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2Matrix) and np.array_equal(self.rows, other.rows)

    def tolist(self) -> List[List[int]]:
        return self.rows.astype(int).tolist()


def _reduce(rows: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Gauss-Jordan elimination; returns the reduced matrix (zero rows last) and pivot columns."""
    mat = (rows.copy() & 1).astype(np.uint8)
    num_rows, num_cols = mat.shape
    pivots: List[int] = []
    rank = 0
    for col in range(num_cols):
        if rank == num_rows:
            break
        candidates = np.nonzero(mat[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            mat[[rank, pivot]] = mat[[pivot, rank]]
        hits = np.nonzero(mat[:, col])[0]
        for r in hits:
            if r != rank:
                mat[r] ^= mat[rank]
        pivots.append(col)
        rank += 1
    return mat, pivots


def rref(m: GF2Matrix) -> Tuple[GF2Matrix, int]:
    """Reduced row-echelon form and rank; the row space is preserved."""
    reduced, pivots = _reduce(m.rows)
    return GF2Matrix(reduced), len(pivots)


def rank(m: GF2Matrix) -> int:
    return rref(m)[1]


def in_rowspace(m: GF2Matrix, v: Sequence[int]) -> bool:
    """True iff v is a GF(2) combination of the rows of m."""
    vec = np.asarray(v, dtype=np.uint8) & 1
    if vec.shape != (m.width,):
        raise ValueError(f"Vector length {vec.size} does not match row length {m.width}")
    reduced, pivots = _reduce(m.rows)
    return not reduce_against(reduced, pivots, vec).any()


def reduce_against(reduced: np.ndarray, pivots: Sequence[int], vec: np.ndarray) -> np.ndarray:
    """Residue of vec after eliminating the pivots of an already reduced matrix."""
    residue = vec.copy()
    for row, col in enumerate(pivots):
        if residue[col]:
            residue ^= reduced[row]
    return residue


def nullspace(m: GF2Matrix) -> GF2Matrix:
    """Basis of {v : m v = 0}, one vector per free column in increasing column order."""
    reduced, pivots = _reduce(m.rows)
    free_cols = [c for c in range(m.width) if c not in set(pivots)]
    basis = []
    for free in free_cols:
        vec = np.zeros(m.width, dtype=np.uint8)
        vec[free] = 1
        for row, col in enumerate(pivots):
            if reduced[row, free]:
                vec[col] = 1
        basis.append(vec)
    if not basis:
        return GF2Matrix(np.zeros((0, m.width), dtype=np.uint8))
    return GF2Matrix(np.vstack(basis))
