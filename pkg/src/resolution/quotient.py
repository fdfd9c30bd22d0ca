"""
Betti numbers of an artinian monomial quotient S/J via Koszul homology.

The module basis is the set of standard monomials; x_i moves a standard monomial
to its product with x_i, or to zero when that product lies in J. Strands are the
multidegrees; the table reports internal (total) degree.
"""

from src.linalg.field import RATIONALS, FieldConfig
from src.monomial.ideal import MonomialIdeal

from .betti_table import BettiTable
from .koszul import MonomialModule, koszul_betti


def quotient_module(J: MonomialIdeal) -> MonomialModule:
    basis = J.standard_monomials()
    index = {e: k for k, e in enumerate(basis)}
    units = [tuple(int(i == j) for j in range(J.n)) for i in range(J.n)]
    actions = [
        [index.get(tuple(x + u for x, u in zip(e, unit))) for e in basis]
        for unit in units
    ]
    return MonomialModule.build(
        basis=basis,
        actions=actions,
        degrees=basis,
        variable_degrees=units,
        grading="internal",
    )


def betti_monomial_quotient(J: MonomialIdeal, field: FieldConfig = RATIONALS) -> BettiTable:
    return koszul_betti(quotient_module(J), field)
