"""
Shift scan: Betti vectors of <g_0 + j, ..., g_nu + j> for j = 0..j_max.

The generator list is shifted as given (raw), then minimalized by the semigroup
constructor; shifts whose gcd is not 1 are skipped. The onset j_0 is the least j
such that b(k + w) = b(k) for every sampled pair k >= j, provided at least w such
pairs exist; the period is the least divisor p of w with b(k + p) = b(k) for all
sampled pairs k >= j_0.
"""

import logging
from dataclasses import dataclass, field as dc_field
from math import gcd
from functools import reduce
from typing import Optional

from src.errors import PreconditionError
from src.linalg.field import RATIONALS, FieldConfig
from src.resolution.semigroup_betti import betti_semigroup
from src.semigroup.numerical import NumericalSemigroup, from_generators

logger = logging.getLogger(__name__)

NO_PERIODICITY = "no periodicity observed in range"


@dataclass
class ShiftScanReport:
    subject: str
    width: int
    j_max: int
    field: str
    rows: list[dict] = dc_field(default_factory=list)
    skipped: list[int] = dc_field(default_factory=list)
    onset: Optional[int] = None
    period: Optional[int] = None

    @property
    def status(self) -> str:
        return "periodic" if self.onset is not None else NO_PERIODICITY

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "width": self.width,
            "j_max": self.j_max,
            "field": self.field,
            "rows": self.rows,
            "skipped": self.skipped,
            "onset": self.onset,
            "period": self.period,
            "status": self.status,
        }


def _holds(betti: dict[int, tuple], step: int, start: int) -> tuple[bool, int]:
    """(all sampled pairs k >= start agree at distance step, number of pairs compared)."""
    pairs = 0
    for k, vector in betti.items():
        if k >= start and k + step in betti:
            if betti[k + step] != vector:
                return False, pairs
            pairs += 1
    return True, pairs


def _compared(betti: dict[int, tuple], step: int, start: int) -> bool:
    """Agreement at distance step, backed by at least one sampled pair."""
    ok, pairs = _holds(betti, step, start)
    return ok and pairs > 0


def detect_period(betti: dict[int, tuple], w: int) -> tuple[Optional[int], Optional[int]]:
    """(onset, period) or (None, None)."""
    if w < 1:
        return None, None
    for start in sorted(betti):
        ok, pairs = _holds(betti, w, start)
        if ok and pairs >= w:
            period = next(p for p in range(1, w + 1) if w % p == 0 and _compared(betti, p, start))
            return start, period
    return None, None


def shift_scan(S: NumericalSemigroup, j_max: int, field: FieldConfig = RATIONALS) -> ShiftScanReport:
    w = S.width
    if j_max < 2 * w:
        raise PreconditionError(f"j_max must be at least 2w = {2 * w}, got {j_max}")
    report = ShiftScanReport(subject=S.label, width=w, j_max=j_max, field=field.tag)
    betti: dict[int, tuple] = {}
    for j in range(j_max + 1):
        raw = [g + j for g in S.generators]
        if reduce(gcd, raw) != 1:
            report.skipped.append(j)
            continue
        shifted = from_generators(raw)
        betti[j] = betti_semigroup(shifted, field).total
        report.rows.append({"j": j, "generators": list(shifted.generators), "betti": list(betti[j])})
        logger.debug("shift %d: %s -> %s", j, shifted, list(betti[j]))

    report.onset, report.period = detect_period(betti, w)
    if report.onset is None:
        logger.warning("%s: %s up to j=%d (onset beyond range)", S, NO_PERIODICITY, j_max)
    else:
        logger.info("%s: period %d observed from j=%d", S, report.period, report.onset)
    if report.skipped:
        logger.info("%s: skipped %d shifts with gcd > 1", S, len(report.skipped))
    return report
