"""
Bound checks for a single semigroup and for artinian monomial quotients.

Logic:
- check_semigroup: Betti numbers of the semigroup ring against every enabled bound
  family, i >= 1. mu(I) = b_1 is reported next to C(w+1, 2).
- verify_hs_problem: an artinian quotient S/I with HS(S/I, d) <= 1 + d*w for all d
  has b_i(S/I) <= C(w, i) * (3e)^sqrt(2w). The constraint is checked first; past
  the socle degree HS is constant while 1 + d*w grows, so the finite prefix decides.
"""

import logging
from typing import Optional, Sequence

from src.errors import ConstraintViolated, PreconditionError
from src.linalg.field import RATIONALS, FieldConfig
from src.monomial.ideal import MonomialIdeal, binomial, hilbert_function
from src.resolution.betti_table import BettiTable
from src.resolution.quotient import betti_monomial_quotient
from src.resolution.semigroup_betti import betti_semigroup
from src.semigroup.numerical import NumericalSemigroup

from .base import BaseBound, BoundReport
from .families import ConjectureBound, ExponentialBound, VallaBound
from .formulas import bound_thm14

logger = logging.getLogger(__name__)

DEFAULT_FAMILIES: tuple[BaseBound, ...] = (ConjectureBound(), VallaBound(), ExponentialBound())


def check_semigroup(
    S: NumericalSemigroup,
    field: FieldConfig = RATIONALS,
    families: Optional[Sequence[BaseBound]] = None,
    betti: Optional[BettiTable] = None,
) -> BoundReport:
    if betti is None:
        betti = betti_semigroup(S, field)
    m, w = S.multiplicity, S.width
    report = BoundReport(subject=S.label, field=field.tag)
    for family in families or DEFAULT_FAMILIES:
        family.check(report, betti.total, m, w)
    report.details = {
        "betti": list(betti.total),
        "mu": betti.b(1),
        "mu_bound": binomial(w + 1, 2),
        "type": betti.b(S.nu),
    }
    for record in report.violations:
        logger.error("%s: b_%d = %s against %s bound %s (%s)",
                     S, record.index, record.computed, record.bound_name,
                     record.bound, record.status)
    return report


def check_hs_constraint(I: MonomialIdeal, w: int) -> list[int]:
    """HS profile of S/I; raises ConstraintViolated at the first d with HS(d) > 1 + d*w."""
    hs = hilbert_function(I).hs_profile()
    for d, value in enumerate(hs):
        if value > 1 + d * w:
            raise ConstraintViolated(
                f"HS(S/I, {d}) = {value} exceeds 1 + {d}*{w} = {1 + d * w}",
                degree=d, value=value, limit=1 + d * w,
            )
    return hs


def verify_hs_problem(I: MonomialIdeal, w: int, field: FieldConfig = RATIONALS) -> BoundReport:
    if w < 1:
        raise PreconditionError(f"w must be positive, got {w}")
    hs = check_hs_constraint(I, w)
    betti = betti_monomial_quotient(I, field)
    report = BoundReport(subject=str(I), field=field.tag, details={"hs": hs, "w": w})
    for i in range(I.n + 1):
        report.add(i, betti.b(i), bound_thm14(w, i), "thm14")
    return report
