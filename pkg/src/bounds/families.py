"""
Bound families checked against the Betti numbers of a semigroup ring.
"""

from .base import BaseBound
from .formulas import bound_conjecture, bound_thm14, bound_valla


class ConjectureBound(BaseBound):
    """b_i <= i * C(w+1, i+1); at i = 1 this is mu(I) <= C(w+1, 2)."""

    @property
    def name(self) -> str:
        return "conjecture"

    def value(self, m: int, w: int, i: int):
        return bound_conjecture(w, i) if w >= 1 else None


class VallaBound(BaseBound):
    """b_i <= i * C(m, i+1), sharp on <m, m+1, ..., 2m-1>."""

    @property
    def name(self) -> str:
        return "valla"

    def value(self, m: int, w: int, i: int):
        return bound_valla(m, i) if m >= 2 else None


class ExponentialBound(BaseBound):
    """b_i <= C(w, i) * (3e)^sqrt(2w)."""

    @property
    def name(self) -> str:
        return "thm14"

    def value(self, m: int, w: int, i: int):
        return bound_thm14(w, i) if w >= 1 else None
