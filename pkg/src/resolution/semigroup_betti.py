"""
Semigroup-graded Betti numbers of a numerical semigroup ring.

Two independent routes:
- betti_semigroup: Koszul homology of the artinian reduction (basis t^omega over
  the Apery set, t^{g_i} acting for i = 1..nu) graded by semigroup degree.
- divisor_complex_betti: b_{i, delta} = dim of reduced H_{i-1} of the squarefree
  divisor complex on {g_0, ..., g_nu}, whose faces are the subsets F with
  delta - sum(F) in the semigroup. Candidate degrees are the Koszul strand degrees.
"""

import logging
from itertools import combinations

from src.linalg.field import RATIONALS, FieldConfig
from src.linalg.matrix import SparseMatrix, rank
from src.semigroup.numerical import NumericalSemigroup, apery_set, contains

from .betti_table import BettiTable
from .koszul import MonomialModule, koszul_betti

logger = logging.getLogger(__name__)


def apery_module(S: NumericalSemigroup) -> MonomialModule:
    values = apery_set(S).values
    index = {omega: k for k, omega in enumerate(values)}
    acting = S.generators[1:]
    return MonomialModule.build(
        basis=values,
        actions=[[index.get(omega + g) for omega in values] for g in acting],
        degrees=[(omega,) for omega in values],
        variable_degrees=[(g,) for g in acting],
        grading="semigroup",
    )


def betti_semigroup(S: NumericalSemigroup, field: FieldConfig = RATIONALS) -> BettiTable:
    table = koszul_betti(apery_module(S), field)
    logger.debug("%s: betti %s over %s", S, list(table.total), field)
    return table


def _candidate_degrees(S: NumericalSemigroup) -> list[int]:
    acting = S.generators[1:]
    sums = {sum(F) for k in range(len(acting) + 1) for F in combinations(acting, k)}
    return sorted({omega + s for omega in apery_set(S).values for s in sums})


def _boundary(faces: list[tuple[int, ...]], lower: list[tuple[int, ...]]) -> SparseMatrix:
    row_of = {F: r for r, F in enumerate(lower)}
    values = {}
    for col, F in enumerate(faces):
        for k in range(len(F)):
            values[(row_of[F[:k] + F[k + 1:]], col)] = -1 if k % 2 else 1
    return SparseMatrix.from_dict(len(lower), len(faces), values)


def reduced_homology_dims(S: NumericalSemigroup, delta: int, field: FieldConfig = RATIONALS) -> list[int]:
    """dims[k] = dim of reduced H_{k-1} of the divisor complex at delta (faces of size k)."""
    gens = S.generators
    faces: list[list[tuple[int, ...]]] = []
    for size in range(len(gens) + 1):
        layer = [F for F in combinations(range(len(gens)), size)
                 if contains(S, delta - sum(gens[i] for i in F))]
        if not layer:
            break
        faces.append(layer)
    ranks = [0] * (len(faces) + 1)
    for size in range(1, len(faces)):
        ranks[size] = rank(_boundary(faces[size], faces[size - 1]), field)
    return [len(faces[k]) - ranks[k] - ranks[k + 1] for k in range(len(faces))]


def divisor_complex_betti(S: NumericalSemigroup, field: FieldConfig = RATIONALS) -> BettiTable:
    pieces = []
    for delta in _candidate_degrees(S):
        for i, dim in enumerate(reduced_homology_dims(S, delta, field)):
            if dim:
                pieces.append((i, delta, dim))
    return BettiTable.from_graded(pieces, field=field.tag, grading="semigroup")
