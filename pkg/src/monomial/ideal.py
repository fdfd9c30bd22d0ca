"""
Monomials, monomial ideals and Hilbert functions.

Variables are ordered x_1 > x_2 > ... > x_n. Exponent vectors are plain tuples;
the lex order is tuple comparison, and degrevlex compares degrees first, then
prefers the monomial with the smaller exponent in the last variable where the two
differ. Ideals are minimalized on construction.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Iterator, Optional, Sequence, Union

from src.errors import InfiniteColength

Exponents = tuple[int, ...]


def binomial(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 for b < 0 or a < b."""
    if b < 0 or a < b or a < 0:
        return 0
    return comb(a, b)


# ----------------------------------------------------------------------
# Monomials
# ----------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Monomial:
    exponents: Exponents

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def max_index(self) -> int:
        """Largest i (1-based) with a positive exponent; 0 for the monomial 1."""
        for i in range(len(self.exponents), 0, -1):
            if self.exponents[i - 1]:
                return i
        return 0

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def times_var(self, i: int, power: int = 1) -> "Monomial":
        e = list(self.exponents)
        e[i] += power
        return Monomial(tuple(e))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) or "1"


def degrevlex_key(e: Exponents) -> tuple:
    """Sort key: ascending order of the key is ascending degrevlex order."""
    return (sum(e), tuple(-x for x in reversed(e)))


def monomials_of_degree(n: int, d: int) -> list[Exponents]:
    """All exponent vectors of degree d in n variables, in decreasing lex order."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _generator_key(e: Exponents) -> tuple:
    return (sum(e), tuple(-x for x in e))


# ----------------------------------------------------------------------
# Monomial ideals
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    generators: tuple[Exponents, ...] = ()

    def __post_init__(self):
        gens = sorted({tuple(int(x) for x in g) for g in self.generators}, key=_generator_key)
        for g in gens:
            if len(g) != self.n or any(x < 0 for x in g):
                raise ValueError(f"bad exponent vector {g} for {self.n} variables")
        minimal: list[Exponents] = []
        for g in gens:
            if not any(_divides(h, g) for h in minimal):
                minimal.append(g)
        object.__setattr__(self, "generators", tuple(minimal))

    # ------------------------------------------------------------------
    @classmethod
    def of(cls, n: int, gens: Iterable[Union[Sequence[int], Monomial]]) -> "MonomialIdeal":
        return cls(n, tuple(g.exponents if isinstance(g, Monomial) else tuple(g) for g in gens))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.n != self.n:
            raise ValueError("ideals live in different rings")
        return MonomialIdeal(self.n, self.generators + other.generators)

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def monomials(self) -> list[Monomial]:
        return [Monomial(g) for g in self.generators]

    @property
    def max_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=0)

    def contains(self, e: Union[Exponents, Monomial]) -> bool:
        e = e.exponents if isinstance(e, Monomial) else e
        return any(_divides(g, e) for g in self.generators)

    def pure_power(self, i: int) -> Optional[int]:
        """Least k with x_i^k in the ideal (i is 0-based), None if no pure power."""
        best = None
        for g in self.generators:
            if all(x == 0 for j, x in enumerate(g) if j != i):
                best = g[i] if best is None else min(best, g[i])
        return best

    @property
    def is_artinian(self) -> bool:
        return all(self.pure_power(i) is not None for i in range(self.n))

    def standard_monomials_by_degree(self, d_max: Optional[int] = None) -> Iterator[list[Exponents]]:
        """Degree-by-degree lists of monomials outside the ideal (an order ideal)."""
        current = [] if self.contains((0,) * self.n) else [(0,) * self.n]
        d = 0
        while d_max is None or d <= d_max:
            yield current
            if not current:
                if d_max is None:
                    return
            nxt = set()
            for e in current:
                for i in range(self.n):
                    f = e[:i] + (e[i] + 1,) + e[i + 1:]
                    if not self.contains(f):
                        nxt.add(f)
            current = sorted(nxt, reverse=True)
            d += 1

    def standard_monomials(self) -> list[Exponents]:
        if not self.is_artinian:
            raise InfiniteColength(f"{self} has infinite colength")
        out: list[Exponents] = []
        for layer in self.standard_monomials_by_degree():
            out.extend(layer)
        return out

    def colength(self) -> int:
        return len(self.standard_monomials())

    def __str__(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(Monomial(g)) for g in self.generators) + ")"


def maximal_power(n: int, d: int, variables: Optional[Sequence[int]] = None) -> MonomialIdeal:
    """(x_i : i in variables)^d in n variables; variables are 0-based, default all."""
    variables = list(range(n)) if variables is None else list(variables)
    gens = []
    for combo in combinations_with_replacement(variables, d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        gens.append(tuple(e))
    return MonomialIdeal(n, tuple(gens))


def maximal_ideal(n: int) -> MonomialIdeal:
    return maximal_power(n, 1)


# ----------------------------------------------------------------------
# Hilbert functions
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class HilbertData:
    hf: tuple[int, ...]
    colength: Optional[int] = None
    infinite: bool = False

    def value(self, d: int) -> int:
        if d < len(self.hf):
            return self.hf[d]
        if self.infinite:
            raise InfiniteColength("Hilbert function not tabulated this far")
        return 0

    def hs(self, d: int) -> int:
        if d < len(self.hf):
            return sum(self.hf[: d + 1])
        if self.infinite:
            raise InfiniteColength("Hilbert-Samuel function not tabulated this far")
        return self.colength if self.colength is not None else sum(self.hf)

    def hs_profile(self) -> list[int]:
        out, acc = [], 0
        for h in self.hf:
            acc += h
            out.append(acc)
        return out

    @property
    def top_degree(self) -> int:
        """Largest d with hf(d) > 0 (socle degree of an artinian quotient)."""
        return max((d for d, h in enumerate(self.hf) if h), default=-1)

    def to_dict(self) -> dict:
        return {"hf": list(self.hf), "hs": self.hs_profile(), "colength": self.colength,
                "infinite": self.infinite}


def hilbert_function(J: MonomialIdeal, d_max: Optional[int] = None) -> HilbertData:
    """HF(S/J, d) for 0 <= d <= d_max; d_max defaults to the socle degree when artinian."""
    artinian = J.is_artinian
    if d_max is None:
        if not artinian:
            raise InfiniteColength(f"{J} has infinite colength; give d_max")
        counts = [len(layer) for layer in J.standard_monomials_by_degree()]
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        return HilbertData(hf=tuple(counts), colength=sum(counts))

    counts = [len(layer) for layer in J.standard_monomials_by_degree(d_max)]
    colength = None
    if artinian:
        colength = sum(len(layer) for layer in J.standard_monomials_by_degree())
    return HilbertData(hf=tuple(counts), colength=colength, infinite=not artinian)
