"""Finite-index sublattices of Z^m as reduced triangular bases.

Basis rows are upper triangular: row i opens with i zeros, carries a
positive pivot at position i, and every entry right of the pivot is reduced
modulo the pivot of its own column.  Each sublattice of a given index shows
up exactly once in this form, which is what makes counting by direct
enumeration trustworthy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .dirichlet import divisors

IntMatrix = tuple[tuple[int, ...], ...]


def apply_matrix(matrix: IntMatrix, vec) -> tuple[int, ...]:
    """Row-major matrix times column vector (column j is the image of e_j)."""
    return tuple(sum(r * x for r, x in zip(row, vec)) for row in matrix)


@dataclass(frozen=True, slots=True)
class HnfBasis:
    rank: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = self.rows
        m = self.rank
        if len(rows) != m:
            raise ValueError(f"expected {m} rows, got {len(rows)}")
        for i, row in enumerate(rows):
            if len(row) != m:
                raise ValueError(f"row {i} has length {len(row)}, expected {m}")
            for j in range(i):
                if row[j]:
                    raise ValueError(f"row {i} is not triangular: entry {j} nonzero")
            if row[i] < 1:
                raise ValueError(f"pivot {i} must be positive, got {row[i]}")
            for j in range(i + 1, m):
                if not 0 <= row[j] < rows[j][j]:
                    raise ValueError(
                        f"entry ({i},{j}) = {row[j]} not reduced modulo pivot {rows[j][j]}"
                    )

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(row[i] for i, row in enumerate(self.rows))

    def determinant(self) -> int:
        """Index of the sublattice in Z^rank."""
        det = 1
        for i, row in enumerate(self.rows):
            det *= row[i]
        return det

    def contains(self, vec) -> bool:
        """Whether vec is an integer combination of the basis rows
        (back-substitution down the triangle)."""
        m = self.rank
        if len(vec) != m:
            raise ValueError(f"vector length {len(vec)} != rank {m}")
        v = list(vec)
        for i, row in enumerate(self.rows):
            q, r = divmod(v[i], row[i])
            if r:
                return False
            if q:
                for j in range(i + 1, m):
                    v[j] -= q * row[j]
        return True

    def reduce(self, vec) -> tuple[int, ...]:
        """Canonical representative of vec modulo the lattice, with
        coordinate j in [0, pivot_j)."""
        m = self.rank
        if len(vec) != m:
            raise ValueError(f"vector length {len(vec)} != rank {m}")
        v = list(vec)
        for i, row in enumerate(self.rows):
            q = v[i] // row[i]
            if q:
                for j in range(i, m):
                    v[j] -= q * row[j]
        return tuple(v)

    def is_stable(self, action: IntMatrix) -> bool:
        """Whether the action maps the lattice into itself.

        Checking rows suffices by linearity; for an involution the image
        then equals the lattice.
        """
        return all(self.contains(apply_matrix(action, row)) for row in self.rows)


def _pivot_splits(index: int, length: int):
    """Ordered factorizations of index into `length` positive parts, in
    lexicographic order."""
    if length == 1:
        yield (index,)
        return
    for d in divisors(index):
        for rest in _pivot_splits(index // d, length - 1):
            yield (d,) + rest


@lru_cache(maxsize=64)
def _hnf_bases(rank: int, index: int) -> tuple[HnfBasis, ...]:
    bases = []
    for pivots in _pivot_splits(index, rank):
        # free cells in row-major order, each bounded by its column's pivot
        cell_ranges = [
            range(pivots[j]) for i in range(rank) for j in range(i + 1, rank)
        ]
        for fill in itertools.product(*cell_ranges):
            rows = []
            pos = 0
            for i in range(rank):
                tail = fill[pos : pos + rank - i - 1]
                pos += rank - i - 1
                rows.append((0,) * i + (pivots[i],) + tail)
            bases.append(HnfBasis(rank, tuple(rows)))
    return tuple(bases)


def enumerate_hnf(rank: int, index: int) -> list[HnfBasis]:
    """All reduced triangular bases of index-`index` sublattices of Z^rank,
    each exactly once, in deterministic lexicographic order (pivot tuples
    ascending, then free entries row-major)."""
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if index < 1:
        raise ValueError(f"index must be >= 1, got {index}")
    return list(_hnf_bases(rank, index))
