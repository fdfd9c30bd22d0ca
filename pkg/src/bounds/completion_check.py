"""
Finite verification routines over families of semigroups.

- verify_completion_family: the tangent-cone initial ideal of <m, ..., m+w> equals
  its closed form for every 3 <= w <= m-2, m <= m_max.
- herzog_three_generated: every 3-generated semigroup <m, a, b> with b <= 3m and
  m <= m_max has b_1 <= 3 and b_2 <= 2.
- large_width_consistency: when w >= m-1 the width bound dominates the multiplicity
  bound index by index, so the conjecture is implied there.
"""

import logging
from itertools import combinations
from math import gcd

from src.linalg.field import RATIONALS, FieldConfig
from src.monomial.closed_forms import interval_closed_form
from src.resolution.semigroup_betti import betti_semigroup
from src.resolution.tangent_cone import tangent_cone_initial_ideal
from src.semigroup.numerical import from_generators, minimal_generators

from .base import EQUAL, VIOLATION, BoundReport
from .formulas import bound_conjecture, bound_valla

logger = logging.getLogger(__name__)


def verify_completion_family(m_max: int = 25, w_min: int = 3, field: FieldConfig = RATIONALS) -> BoundReport:
    report = BoundReport(subject=f"interval semigroups, {w_min} <= w <= m-2, m <= {m_max}", field=field.tag)
    for m in range(w_min + 2, m_max + 1):
        for w in range(w_min, m - 1):
            S = from_generators(range(m, m + w + 1))
            computed = tangent_cone_initial_ideal(S, field)
            expected = interval_closed_form(m, w)
            if computed.generators == expected.generators:
                report.add(m, len(computed), len(expected), "closed_form", EQUAL, w=w)
                continue
            report.add(m, len(computed), len(expected), "closed_form", VIOLATION, w=w,
                       computed_ideal=str(computed), expected_ideal=str(expected))
            logger.error("m=%d w=%d: J = %s, expected %s", m, w, computed, expected)
    report.details = {"pairs": len(report.records)}
    return report


def three_generated(m_max: int) -> list[tuple[int, int, int]]:
    """Minimal generator triples (m, a, b), m < a < b <= 3m, gcd 1, 3 <= m <= m_max."""
    found = set()
    for m in range(3, m_max + 1):
        for a, b in combinations(range(m + 1, 3 * m + 1), 2):
            if gcd(gcd(m, a), b) != 1:
                continue
            gens = minimal_generators((m, a, b))
            if len(gens) == 3:
                found.add(gens)
    return sorted(found)


def herzog_three_generated(m_max: int = 30, field: FieldConfig = RATIONALS) -> BoundReport:
    report = BoundReport(subject=f"3-generated semigroups, m <= {m_max}", field=field.tag)
    for gens in three_generated(m_max):
        betti = betti_semigroup(from_generators(gens), field)
        label = "<" + ",".join(map(str, gens)) + ">"
        report.add(1, betti.b(1), 3, "three_generated", semigroup=label)
        report.add(2, betti.b(2), 2, "three_generated", semigroup=label)
    report.details = {"semigroups": len(report.records) // 2}
    return report


def large_width_consistency(m_max: int = 60) -> BoundReport:
    """Tightest index per (m, w), 2 <= m <= m_max, m-1 <= w <= 2m."""
    report = BoundReport(subject=f"w >= m-1, m <= {m_max}")
    for m in range(2, m_max + 1):
        for w in range(max(m - 1, 1), 2 * m + 1):
            i = min(range(1, m), key=lambda k: bound_conjecture(w, k) - bound_valla(m, k))
            report.add(i, bound_valla(m, i), bound_conjecture(w, i), "conjecture_vs_valla", m=m, w=w)
    return report
