"""
Numerical semigroups: construction, membership, Apery sets and orders.

Logic:
- Generators are sorted, deduplicated and reduced to the unique minimal set by a
  knapsack table over the smaller generators.
- Every Apery element is a sum of at most m-1 generators, so a membership table up
  to m * g_max covers the whole Apery set, the conductor and one extra generator
  on top of it (the horizon the order recursion needs).
- ord(n) = 1 + max ord(n - g) over minimal generators g with n - g in the semigroup,
  ord(0) = 0. Including g_0 is harmless: no Apery element has a representation
  using g_0.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from src.errors import EmptyInput, NonCofinite, PreconditionError, ZeroWidth

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AperyData:
    """The m Apery elements (one per residue mod m) with their orders."""
    multiplicity: int
    elements: tuple[tuple[int, int], ...]   # (residue j, omega_j), ordered by j
    orders: dict[int, int] = field(compare=False)

    @property
    def values(self) -> list[int]:
        return [omega for _, omega in self.elements]

    @property
    def max_order(self) -> int:
        return max(self.orders.values())

    def order_of(self, omega: int) -> int:
        return self.orders[omega]

    def stratum(self, d: int) -> list[int]:
        """Apery elements of order exactly d, increasing."""
        return sorted(omega for omega, o in self.orders.items() if o == d)

    def order_profile(self) -> list[int]:
        """profile[d] = number of Apery elements of order d."""
        profile = [0] * (self.max_order + 1)
        for o in self.orders.values():
            profile[o] += 1
        return profile

    def to_dict(self) -> dict:
        return {
            "elements": [
                {"residue": j, "omega": omega, "order": self.orders[omega]}
                for j, omega in self.elements
            ],
            "max_order": self.max_order,
        }


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    membership: np.ndarray = field(compare=False, repr=False)
    orders: np.ndarray = field(compare=False, repr=False)
    frobenius: int = field(compare=False)

    # ------------------------------------------------------------------
    # Invariants
    # ------------------------------------------------------------------
    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def width(self) -> int:
        return self.generators[-1] - self.generators[0]

    @property
    def nu(self) -> int:
        """Embedding dimension minus one (index of the last generator)."""
        return len(self.generators) - 1

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def genus(self) -> int:
        return int(self.conductor - np.count_nonzero(self.membership[: self.conductor]))

    @property
    def horizon(self) -> int:
        return len(self.membership) - 1

    @property
    def is_narrow(self) -> bool:
        return self.width <= self.multiplicity - 2

    @property
    def label(self) -> str:
        return "<" + ",".join(str(g) for g in self.generators) + ">"

    def __str__(self) -> str:
        return self.label

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "multiplicity": self.multiplicity,
            "width": self.width,
            "embedding_dimension": len(self.generators),
            "frobenius": self.frobenius,
            "conductor": self.conductor,
            "genus": self.genus,
        }


# ----------------------------------------------------------------------
# Construction
# ----------------------------------------------------------------------

def _knapsack(gens: Iterable[int], horizon: int) -> np.ndarray:
    """Membership table 0..horizon; one round adds one more summand."""
    table = np.zeros(horizon + 1, dtype=bool)
    table[0] = True
    while True:
        grown = table.copy()
        for g in gens:
            if g <= horizon:
                grown[g:] |= table[: horizon + 1 - g]
        if np.array_equal(grown, table):
            return table
        table = grown


def _order_table(gens: Iterable[int], table: np.ndarray) -> np.ndarray:
    """Longest representation length of every member, -1 for gaps."""
    horizon = len(table) - 1
    orders = np.full(horizon + 1, -1, dtype=np.int64)
    orders[0] = 0
    while True:
        longer = orders.copy()
        for g in gens:
            if g > horizon:
                continue
            below = orders[: horizon + 1 - g]
            longer[g:] = np.maximum(longer[g:], np.where(below >= 0, below + 1, -1))
        if np.array_equal(longer, orders):
            return orders
        orders = longer


def minimal_generators(raw: Iterable[int]) -> tuple[int, ...]:
    """Unique minimal generating set of the monoid spanned by raw."""
    gens = sorted(set(int(g) for g in raw))
    top = gens[-1]
    reachable = np.zeros(top + 1, dtype=bool)
    reachable[0] = True
    kept: list[int] = []
    for g in gens:
        if reachable[g]:
            continue
        kept.append(g)
        for n in range(g, top + 1):
            if reachable[n - g]:
                reachable[n] = True
    return tuple(kept)


def from_generators(raw: Iterable[int]) -> NumericalSemigroup:
    raw = list(raw)
    if not raw:
        raise EmptyInput("generator list is empty")
    if any(int(g) < 1 for g in raw):
        raise PreconditionError(f"generators must be positive integers, got {raw}")
    if int(np.gcd.reduce(np.array(raw, dtype=np.int64))) != 1:
        raise NonCofinite(f"gcd of {sorted(set(raw))} is not 1")

    gens = minimal_generators(raw)
    m, top = gens[0], gens[-1]
    table = _knapsack(gens, m * top)

    apery = [min(n for n in range(j, len(table), m) if table[n]) for j in range(m)]
    frobenius = max(apery) - m
    horizon = frobenius + 1 + top
    table = table[: horizon + 1].copy()

    orders = _order_table(gens, table)

    table.setflags(write=False)
    orders.setflags(write=False)
    return NumericalSemigroup(
        generators=gens, membership=table, orders=orders, frobenius=int(frobenius)
    )


# ----------------------------------------------------------------------
# Queries
# ----------------------------------------------------------------------

def contains(S: NumericalSemigroup, n: int) -> bool:
    if n < 0:
        return False
    if n >= S.conductor:
        return True
    return bool(S.membership[n])


def order(S: NumericalSemigroup, gamma: int) -> int:
    """ord of gamma inside the membership horizon, -1 for non-members."""
    if not contains(S, gamma):
        return -1
    if gamma > S.horizon:
        raise PreconditionError(f"{gamma} lies beyond the order table of {S}")
    return int(S.orders[gamma])


def apery_set(S: NumericalSemigroup) -> AperyData:
    m = S.multiplicity
    elements = []
    for j in range(m):
        omega = next(n for n in range(j, S.horizon + 1, m) if S.membership[n])
        elements.append((j, omega))
    orders = {omega: int(S.orders[omega]) for _, omega in elements}
    return AperyData(multiplicity=m, elements=tuple(elements), orders=orders)


def hilbert_samuel_gr(S: NumericalSemigroup, d: int) -> int:
    """HS(gr of the artinian reduction, d) = #{Apery elements of order <= d}."""
    ap = apery_set(S)
    return sum(1 for o in ap.orders.values() if o <= d)


# ----------------------------------------------------------------------
# Derived semigroups
# ----------------------------------------------------------------------

def interval_completion(S: NumericalSemigroup) -> NumericalSemigroup:
    if S.width == 0:
        raise ZeroWidth(f"{S} has width 0")
    m, w = S.multiplicity, S.width
    completion = from_generators(range(m, m + w + 1))
    if not S.is_narrow:
        logger.warning(
            "Interval completion of %s has w=%d > m-2=%d; width/multiplicity may not be preserved",
            S, w, m - 2,
        )
    return completion


def shift(S: NumericalSemigroup, j: int) -> NumericalSemigroup:
    """Semigroup generated by g_i + j over the minimal generators g_i."""
    if j < 0:
        raise PreconditionError(f"shift must be nonnegative, got {j}")
    return from_generators(g + j for g in S.generators)
