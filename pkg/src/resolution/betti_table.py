"""
BettiTable – the result type shared by every Betti number computation.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class BettiTable:
    """Total Betti numbers b_0..b_max plus optional graded pieces (i, degree, dim)."""
    total: tuple[int, ...]
    graded: tuple[tuple[int, int, int], ...] = ()
    field: str = "q"
    grading: str = ""            # 'semigroup' | 'internal' | ''

    @classmethod
    def from_graded(cls, pieces: Iterable[tuple[int, int, int]], field: str, grading: str) -> "BettiTable":
        merged: dict[tuple[int, int], int] = defaultdict(int)
        for i, deg, dim in pieces:
            if dim:
                merged[(i, deg)] += dim
        graded = tuple(sorted((i, deg, dim) for (i, deg), dim in merged.items()))
        top = max((i for i, _, _ in graded), default=-1)
        total = [0] * (top + 1)
        for i, _, dim in graded:
            total[i] += dim
        return cls(total=tuple(total), graded=graded, field=field, grading=grading)

    def b(self, i: int) -> int:
        return self.total[i] if 0 <= i < len(self.total) else 0

    @property
    def length(self) -> int:
        return len(self.total)

    def graded_dict(self) -> dict[tuple[int, int], int]:
        return {(i, deg): dim for i, deg, dim in self.graded}

    def as_quotient(self) -> "BettiTable":
        """Table of S/I from the table of the ideal I (b_i(S/I) = b_{i-1}(I), b_0 = 1)."""
        graded = ((0, 0, 1),) + tuple((i + 1, deg, dim) for i, deg, dim in self.graded)
        return BettiTable(
            total=(1,) + self.total,
            graded=graded if self.graded else (),
            field=self.field,
            grading=self.grading,
        )

    def to_dict(self, graded: bool = True) -> dict:
        out = {"field": self.field, "total": list(self.total)}
        if graded and self.graded:
            out["grading"] = self.grading
            out["graded"] = [{"i": i, "degree": deg, "dim": dim} for i, deg, dim in self.graded]
        return out
