"""
Betti numbers as Koszul homology of a finite-length module.

Logic:
- A MonomialModule is a finite basis plus, per acting variable, a partial map on
  basis indices (None = the product is zero). Every coefficient is 1.
- K_i = wedge^i k^n (x) M has basis e_F (x) b over subsets |F| = i, with
  d(e_F (x) b) = sum_k (-1)^k e_{F minus F_k} (x) x_{F_k} b.
- When the module is graded (basis degrees and variable degrees are integer
  tuples), d preserves degree and the complex splits into strands; each strand is a
  handful of small rank problems: H_i = dim K_i - rank d_i - rank d_{i+1}.
- Every strand passes a d o d = 0 gate (integer product of consecutive
  differentials) and a nonnegativity gate.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from src.errors import InconsistentHomology, NonCommutingActions, PreconditionError
from src.linalg.field import RATIONALS, FieldConfig
from src.linalg.matrix import SparseMatrix, rank

from .betti_table import BettiTable

logger = logging.getLogger(__name__)

Degree = tuple[int, ...]


def _add(a: Degree, b: Degree) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialModule:
    basis: tuple
    actions: tuple[tuple[Optional[int], ...], ...]
    degrees: tuple[Degree, ...] = ()
    variable_degrees: tuple[Degree, ...] = ()
    grading: str = ""

    def __post_init__(self):
        if not self.degrees:
            object.__setattr__(self, "degrees", ((),) * len(self.basis))
        if not self.variable_degrees:
            object.__setattr__(self, "variable_degrees", ((),) * len(self.actions))

    @classmethod
    def build(
        cls,
        basis: Sequence,
        actions: Sequence[Sequence[Optional[int]]],
        degrees: Sequence[Degree] = (),
        variable_degrees: Sequence[Degree] = (),
        grading: str = "",
    ) -> "MonomialModule":
        return cls(
            basis=tuple(basis),
            actions=tuple(tuple(a) for a in actions),
            degrees=tuple(tuple(d) for d in degrees),
            variable_degrees=tuple(tuple(d) for d in variable_degrees),
            grading=grading,
        )

    @property
    def n(self) -> int:
        return len(self.actions)

    def __len__(self) -> int:
        return len(self.basis)

    def act(self, i: int, b: Optional[int]) -> Optional[int]:
        return None if b is None else self.actions[i][b]

    def check(self) -> None:
        size = len(self.basis)
        if len(self.degrees) != size or len(self.variable_degrees) != self.n:
            raise PreconditionError("degree data does not match the basis or the variables")
        for i, action in enumerate(self.actions):
            if len(action) != size:
                raise PreconditionError(f"action of variable {i} has {len(action)} entries, expected {size}")
            for b, target in enumerate(action):
                if target is None:
                    continue
                if not 0 <= target < size:
                    raise PreconditionError(f"variable {i} maps basis element {b} outside the basis")
                if self.degrees[target] != _add(self.degrees[b], self.variable_degrees[i]):
                    raise PreconditionError(
                        f"variable {i} does not respect the grading at {self.basis[b]!r}"
                    )
        for i, j in combinations(range(self.n), 2):
            for b in range(size):
                if self.act(i, self.act(j, b)) != self.act(j, self.act(i, b)):
                    raise NonCommutingActions(
                        f"variables {i} and {j} do not commute on {self.basis[b]!r}"
                    )


def _koszul_cells(M: MonomialModule) -> list[dict[Degree, list[tuple[tuple[int, ...], int]]]]:
    """cells[i][degree] = basis of K_i in that degree, as (F, b) pairs."""
    cells = []
    for i in range(M.n + 1):
        by_degree: dict[Degree, list] = defaultdict(list)
        for F in combinations(range(M.n), i):
            shift = tuple(sum(c) for c in zip(*(M.variable_degrees[j] for j in F))) if F else None
            for b in range(len(M)):
                deg = M.degrees[b] if shift is None else _add(M.degrees[b], shift)
                by_degree[deg].append((F, b))
        cells.append(by_degree)
    return cells


def _differential(M: MonomialModule, source: list, target: list) -> SparseMatrix:
    row_of = {cell: r for r, cell in enumerate(target)}
    values = {}
    for col, (F, b) in enumerate(source):
        for k, j in enumerate(F):
            image = M.actions[j][b]
            if image is None:
                continue
            values[(row_of[(F[:k] + F[k + 1:], image)], col)] = -1 if k % 2 else 1
    return SparseMatrix.from_dict(len(target), len(source), values)


def koszul_homology(M: MonomialModule, field: FieldConfig = RATIONALS) -> dict[tuple[int, Degree], int]:
    """dim H_i(K(M))_degree for every (i, degree) with a nonzero value."""
    M.check()
    cells = _koszul_cells(M)
    for i, by_degree in enumerate(cells):
        if sum(map(len, by_degree.values())) != comb(M.n, i) * len(M):
            raise InconsistentHomology(f"K_{i} has the wrong number of cells")
    ranks: list[dict[Degree, int]] = [defaultdict(int) for _ in range(M.n + 2)]
    differentials: dict[tuple[int, Degree], SparseMatrix] = {}
    for i in range(1, M.n + 1):
        for deg, source in cells[i].items():
            target = cells[i - 1].get(deg)
            if target:
                differentials[(i, deg)] = _differential(M, source, target)
                ranks[i][deg] = rank(differentials[(i, deg)], field)
    for (i, deg), d_upper in differentials.items():
        d_lower = differentials.get((i - 1, deg))
        if d_lower is not None and (d_lower @ d_upper).nnz:
            raise InconsistentHomology(f"d_{i - 1} o d_{i} is nonzero in degree {deg}")

    homology: dict[tuple[int, Degree], int] = {}
    strands = set().union(*(c.keys() for c in cells))
    for deg in strands:
        for i in range(M.n + 1):
            dim = len(cells[i].get(deg, ()))
            h = dim - ranks[i][deg] - ranks[i + 1][deg]
            if h < 0:
                raise InconsistentHomology(f"negative homology H_{i} in degree {deg}")
            if h:
                homology[(i, deg)] = h
    logger.debug("Koszul complex: %d variables, %d basis elements, %d strands",
                 M.n, len(M), len(strands))
    return homology


def koszul_betti(M: MonomialModule, field: FieldConfig = RATIONALS) -> BettiTable:
    homology = koszul_homology(M, field)
    pieces = [(i, sum(deg), h) for (i, deg), h in homology.items()]
    table = BettiTable.from_graded(pieces, field=field.tag, grading=M.grading)
    if not M.grading:
        table = BettiTable(total=table.total, field=field.tag)
    return table
