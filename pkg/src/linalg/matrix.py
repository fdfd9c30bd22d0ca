"""
Sparse integer matrices and exact rank.

Small blocks (both sides below DENSE_THRESHOLD) are eliminated densely: Bareiss
fraction-free elimination over the rationals, numpy int64 elimination mod p over
GF(p) (p < 2^31 keeps every product below 2^62). Larger blocks are fed row by row
into an IncrementalSpan.
"""

import logging
from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np
from scipy.sparse import coo_matrix

from src.errors import DimensionMismatch

from .field import RATIONALS, FieldConfig
from .span import IncrementalSpan

logger = logging.getLogger(__name__)

DENSE_THRESHOLD = 64


def configure(dense_threshold: int) -> None:
    global DENSE_THRESHOLD
    DENSE_THRESHOLD = int(dense_threshold)


@dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...]   # (row, col, value), no zeros, no duplicates

    def __post_init__(self):
        seen = set()
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise DimensionMismatch(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if v == 0:
                raise ValueError(f"explicit zero at ({r}, {c})")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            seen.add((r, c))

    @classmethod
    def from_dict(cls, rows: int, cols: int, values: Mapping[tuple[int, int], int]) -> "SparseMatrix":
        entries = tuple(sorted((r, c, int(v)) for (r, c), v in values.items() if v))
        return cls(rows, cols, entries)

    @classmethod
    def from_dense(cls, dense) -> "SparseMatrix":
        arr = np.asarray(dense, dtype=object)
        if arr.ndim != 2:
            raise DimensionMismatch("expected a 2-dimensional array")
        values = {(r, c): int(arr[r, c]) for r, c in zip(*np.nonzero(arr))}
        return cls.from_dict(arr.shape[0], arr.shape[1], values)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, tuple(sorted((c, r, v) for r, c, v in self.entries)))

    def to_coo(self, modulus: Optional[int] = None) -> coo_matrix:
        """scipy COO copy with int64 data, entries reduced mod `modulus` when given."""
        entries = self.entries
        if modulus is not None:
            entries = [(r, c, v % modulus) for r, c, v in entries if v % modulus]
        if not entries:
            return coo_matrix((self.rows, self.cols), dtype=np.int64)
        r, c, v = zip(*entries)
        return coo_matrix((np.array(v, dtype=np.int64), (r, c)), shape=(self.rows, self.cols))

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        """Integer product through scipy.sparse; entries must stay within int64."""
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        product = (self.to_coo().tocsr() @ other.to_coo().tocsr()).tocoo()
        values = {(int(r), int(c)): int(v) for r, c, v in zip(product.row, product.col, product.data)}
        return SparseMatrix.from_dict(self.rows, other.cols, values)

    def to_dense(self) -> np.ndarray:
        """Dense object array of Python ints (no overflow)."""
        out = np.zeros((self.rows, self.cols), dtype=object)
        for r, c, v in self.entries:
            out[r, c] = v
        return out

    def row_dicts(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in range(self.rows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out


# ----------------------------------------------------------------------
# Dense kernels
# ----------------------------------------------------------------------

def _rank_bareiss(a: np.ndarray) -> int:
    a = a.copy()
    n_rows, n_cols = a.shape
    rank, prev = 0, 1
    for c in range(n_cols):
        if rank == n_rows:
            break
        nz = [r for r in range(rank, n_rows) if a[r, c] != 0]
        if not nz:
            continue
        r = nz[0]
        if r != rank:
            a[[rank, r]] = a[[r, rank]]
        piv = a[rank, c]
        below = slice(rank + 1, n_rows)
        if rank + 1 < n_rows:
            a[below, c:] = (a[below, c:] * piv - np.outer(a[below, c], a[rank, c:])) // prev
        prev = piv
        rank += 1
    return rank


def _rank_mod_p(a: np.ndarray, p: int) -> int:
    a = np.array(a % p, dtype=np.int64)
    n_rows, n_cols = a.shape
    rank = 0
    for c in range(n_cols):
        if rank == n_rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        r = rank + int(nz[0])
        if r != rank:
            a[[rank, r]] = a[[r, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = a[rank] * inv % p
        if rank + 1 < n_rows:
            factors = a[rank + 1:, c].copy()
            a[rank + 1:] = (a[rank + 1:] - np.outer(factors, a[rank])) % p
        rank += 1
    return rank


def rank(M: SparseMatrix, field: FieldConfig = RATIONALS) -> int:
    if M.rows == 0 or M.cols == 0 or not M.entries:
        return 0
    if max(M.rows, M.cols) < DENSE_THRESHOLD:
        if field.is_prime:
            return _rank_mod_p(M.to_coo(field.p).toarray(), field.p)
        return _rank_bareiss(M.to_dense())
    # Feed the shorter side as vectors: at most min(rows, cols) pivots either way.
    if M.rows <= M.cols:
        rows, dim = M.row_dicts(), M.cols
    else:
        rows, dim = M.transpose().row_dicts(), M.rows
    span = IncrementalSpan(dim, field)
    for row in rows:
        if row:
            span.add_vector(row)
    return span.rank
