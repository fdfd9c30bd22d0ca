"""
Incremental span maintenance.

Vectors are reduced against a pivot table keyed by leading column. Over the
rationals the arithmetic is fraction-free: v <- a*v - b*row followed by division
by the content gcd, so entries stay integers of modest size. Over GF(p) pivot
rows are normalized to leading coefficient 1.
"""

from math import gcd
from functools import reduce
from typing import Mapping, Sequence, Union

import numpy as np

from src.errors import DimensionMismatch

from .field import RATIONALS, FieldConfig

Vector = Union[Sequence[int], np.ndarray, Mapping[int, int]]


def _content_normalize(v: dict[int, int]) -> dict[int, int]:
    g = reduce(gcd, v.values(), 0)
    lead = v[min(v)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        v = {c: x // g for c, x in v.items()}
    return v


class IncrementalSpan:
    """Insertion-ordered span of vectors in a fixed ambient dimension."""

    def __init__(self, dim: int, field: FieldConfig = RATIONALS):
        self.dim = dim
        self.field = field
        self._pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _as_sparse(self, v: Vector) -> dict[int, int]:
        if isinstance(v, Mapping):
            if any(not (0 <= c < self.dim) for c in v):
                raise DimensionMismatch(f"vector index outside 0..{self.dim - 1}")
            items = v.items()
        else:
            if len(v) != self.dim:
                raise DimensionMismatch(f"expected length {self.dim}, got {len(v)}")
            items = enumerate(v)
        if self.field.is_prime:
            p = self.field.p
            return {int(c): int(x) % p for c, x in items if int(x) % p}
        return {int(c): int(x) for c, x in items if x}

    def reduce(self, v: Vector) -> dict[int, int]:
        """Remainder of v against the current pivots (empty dict = in the span)."""
        vec = self._as_sparse(v)
        if self.field.is_prime:
            return self._reduce_mod(vec, self.field.p)
        return self._reduce_int(vec)

    def _reduce_int(self, vec: dict[int, int]) -> dict[int, int]:
        while vec:
            c = min(vec)
            row = self._pivots.get(c)
            if row is None:
                return _content_normalize(vec)
            a, b = row[c], vec[c]
            out = {k: a * x for k, x in vec.items()}
            for k, x in row.items():
                y = out.get(k, 0) - b * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            vec = _content_normalize(out) if out else out
        return vec

    def _reduce_mod(self, vec: dict[int, int], p: int) -> dict[int, int]:
        while vec:
            c = min(vec)
            row = self._pivots.get(c)
            if row is None:
                inv = pow(vec[c], p - 2, p)
                return {k: x * inv % p for k, x in vec.items()}
            b = vec[c]
            out = dict(vec)
            for k, x in row.items():
                y = (out.get(k, 0) - b * x) % p
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            vec = out
        return vec

    def add_vector(self, v: Vector) -> bool:
        """True iff v is independent of everything added so far."""
        rest = self.reduce(v)
        if not rest:
            return False
        self._pivots[min(rest)] = rest
        return True

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)


def incremental_span(dim: int, field: FieldConfig = RATIONALS) -> IncrementalSpan:
    return IncrementalSpan(dim, field)
