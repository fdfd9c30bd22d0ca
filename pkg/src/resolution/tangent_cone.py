"""
Degrevlex initial ideal J of the tangent cone of the artinian reduction.

Logic:
- Variables x_1..x_nu stand for t^{g_1}..t^{g_nu}.
- In degree d, x^a maps to the basis vector t^gamma of the order-d Apery stratum
  when gamma = sum a_i g_i is an Apery element of order exactly d, and to zero
  otherwise.
- Monomials are scanned in increasing degrevlex order; x^a is in J iff its image
  lies in the span of the images of the smaller monomials of that degree.
- Past the maximal Apery order every monomial is in J, so the scan stops one
  degree beyond it. Q/J then has length m.
"""

import logging

from src.errors import ZeroWidth
from src.linalg.field import RATIONALS, FieldConfig
from src.linalg.span import incremental_span
from src.monomial.ideal import MonomialIdeal, degrevlex_key, monomials_of_degree
from src.semigroup.numerical import NumericalSemigroup, apery_set

logger = logging.getLogger(__name__)


def tangent_cone_initial_ideal(S: NumericalSemigroup, field: FieldConfig = RATIONALS) -> MonomialIdeal:
    nu = S.nu
    if nu < 1:
        raise ZeroWidth(f"{S} has no tangent cone ideal (no variables)")
    ap = apery_set(S)
    acting = S.generators[1:]
    in_j: list[tuple[int, ...]] = []
    for d in range(1, ap.max_order + 2):
        stratum = {omega: k for k, omega in enumerate(ap.stratum(d))}
        span = incremental_span(len(stratum), field)
        for e in sorted(monomials_of_degree(nu, d), key=degrevlex_key):
            gamma = sum(a * g for a, g in zip(e, acting))
            image = {stratum[gamma]: 1} if gamma in stratum else {}
            if not span.add_vector(image):
                in_j.append(e)
    J = MonomialIdeal(nu, tuple(in_j))
    logger.debug("%s: J has %d minimal generators", S, len(J))
    return J
