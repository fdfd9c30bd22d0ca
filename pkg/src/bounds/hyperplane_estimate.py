"""
Length estimate for the hyperplane section of a lexsegment ideal.

For 3 <= w the length of the hyperplane section is at most

    w + C(C+D-2, C-1) - (C-1) + (2w-4) - D,
    C = ceil(2 sqrt(w)) - 2,  D = floor(sqrt(6w-2)) - 2,

and this quantity is compared directly with (3e)^sqrt(2w) over a finite range.
Beyond the range two real inequalities carry the estimate; they are evaluated with
interval arithmetic at sample points only.

For a concrete lexsegment ideal L in w variables with HS(S/L, d) <= 1 + dw,
check_lex_hyperplane verifies the ingredients one by one:
- pure powers: x_i^2 in L for i <= w - C, x_{w-2}^D in L, x_{w-1}^(2w-2) in L;
- the ideal I built from those powers lies in the hyperplane section L^, so
  len(S^/L^) <= len(S^/I);
- b_i(S/L) <= len(S^/L^) * C(w, i) and b_i(S^/L^) <= len(S^/L^) * C(w-1, i).
"""

import logging
from math import isqrt
from typing import Iterable

from mpmath import iv

from src.errors import ConstraintViolated, PreconditionError, RangeError
from src.monomial.eliahou_kervaire import eliahou_kervaire_betti
from src.monomial.ideal import MonomialIdeal, binomial, hilbert_function, maximal_power
from src.monomial.lex import hyperplane_section

from .base import BoundReport, compare_le
from .formulas import ceil_sqrt, interval_precision, sqrt_interval, three_e_power

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = (112, 500, 5000)


def hyperplane_constants(w: int) -> tuple[int, int]:
    """(C, D) computed on integers."""
    return ceil_sqrt(4 * w) - 2, isqrt(6 * w - 2) - 2


def hyperplane_quantity(w: int) -> int:
    c, d = hyperplane_constants(w)
    return w + binomial(c + d - 2, c - 1) - (c - 1) + (2 * w - 4) - d


def asymptotic_terms(w: int) -> dict[str, tuple]:
    """(lhs, rhs) interval pairs of the two inequalities lhs >= rhs used for large w."""
    with interval_precision():
        root = sqrt_interval(2 * w)
        first = (3 * (root - 3), root + sqrt_interval(6 * w - 2) - 5)
        three_e_sq = three_e_power(iv.mpf(2))
        second = ((three_e_sq - 1) * three_e_power(root - 2), iv.mpf(3 * w))
    return {"linear": first, "exponential": second}


def verify_prop43_range(
    w_min: int = 3,
    w_max: int = 111,
    samples: Iterable[int] = DEFAULT_SAMPLES,
) -> BoundReport:
    if not (3 <= w_min <= w_max):
        raise RangeError(f"need 3 <= w_min <= w_max, got {w_min}..{w_max}")
    report = BoundReport(subject=f"w={w_min}..{w_max}")
    for w in range(w_min, w_max + 1):
        c, d = hyperplane_constants(w)
        with interval_precision():
            bound = three_e_power(sqrt_interval(2 * w))
        report.add(w, hyperplane_quantity(w), bound, "hyperplane_length", C=c, D=d)

    sample_rows = []
    for w in sorted(set(samples)):
        for name, (lhs, rhs) in asymptotic_terms(w).items():
            status = compare_le(rhs, lhs)
            sample_rows.append({"w": w, "inequality": name, "status": status})
            if status != "pass":
                report.failures.append(f"large-w inequality '{name}' is {status} at w={w}")
    report.details = {"rows": w_max - w_min + 1, "samples": sample_rows}

    for record in report.borderline:
        logger.warning("w=%d: hyperplane quantity is borderline against (3e)^sqrt(2w)", record.index)
    for record in report.violations:
        if record.status != "borderline":
            logger.error("w=%d: hyperplane quantity %d exceeds (3e)^sqrt(2w)", record.index, record.computed)
    return report


# ----------------------------------------------------------------------
# Concrete lexsegment ideals
# ----------------------------------------------------------------------

def pure_power_targets(w: int) -> list[tuple[str, int, int]]:
    """(label, 0-based variable, exponent) for every pure power forced into L."""
    if w < 3:
        raise PreconditionError(f"pure power estimates need w >= 3, got {w}")
    c, d = hyperplane_constants(w)
    targets = [("square", i, 2) for i in range(w - c)]
    targets.append(("power_D", w - 3, d))
    targets.append(("power_2w-2", w - 2, 2 * w - 2))
    return targets


def estimate_ideal(w: int) -> MonomialIdeal:
    """(x_1..x_{w-C})^2 + (x_1..x_{w-2})^D + (x_1..x_{w-1})^(2w-2) in w-1 variables."""
    if w < 3:
        raise PreconditionError(f"estimate ideal needs w >= 3, got {w}")
    c, d = hyperplane_constants(w)
    n = w - 1
    return (maximal_power(n, 2, range(w - c))
            + maximal_power(n, d, range(w - 2))
            + maximal_power(n, 2 * w - 2))


def _check_constraint(L: MonomialIdeal, w: int) -> None:
    for d, value in enumerate(hilbert_function(L).hs_profile()):
        if value > 1 + d * w:
            raise ConstraintViolated(
                f"HS(S/L, {d}) = {value} exceeds 1 + {d}*{w}", degree=d, value=value, limit=1 + d * w
            )


def check_lex_hyperplane(L: MonomialIdeal) -> BoundReport:
    """Pure-power, inclusion and syzygy estimates for an artinian lexsegment ideal in w >= 3 variables."""
    w = L.n
    _check_constraint(L, w)
    report = BoundReport(subject=f"{L}")

    for label, i, k in pure_power_targets(w):
        report.add(i + 1, L.pure_power(i), k, f"pure_{label}")

    section = hyperplane_section(L)
    length = section.colength()
    I = estimate_ideal(w)
    bound = I.colength()
    missing = [g for g in I.generators if not section.contains(g)]
    if missing:
        report.failures.append(f"{len(missing)} generators of the estimate ideal lie outside the section")
    report.add(0, length, bound, "estimate_ideal_length")
    with interval_precision():
        report.add(0, length, three_e_power(sqrt_interval(2 * w)), "hyperplane_length")

    quotient = eliahou_kervaire_betti(L).as_quotient().total
    for i, b in enumerate(quotient):
        report.add(i, b, length * binomial(w, i), "quotient_betti")
    section_betti = eliahou_kervaire_betti(section).as_quotient().total
    for i, b in enumerate(section_betti):
        report.add(i, b, length * binomial(w - 1, i), "section_betti")

    report.details = {"section_colength": length, "estimate_colength": bound}
    for record in report.violations:
        logger.error("%s: %s gives %s > %s", L, record.bound_name, record.computed, record.bound)
    return report
