"""
Sweep over two-variable lexsegment shapes (alpha, beta) for a width w.

Logic:
- alpha >= 2 with C(alpha+2, 3) <= 1 + (alpha-1) w, capped by alpha + 1 <= sqrt(6w+4).
- beta >= alpha with C(alpha+1, 3) + C(beta+1, 2) <= 1 + (beta-1) w, capped by
  beta <= 2w + 1.
- For each admissible shape the Betti estimates are
      B0 = alpha*beta - alpha(alpha-3)/2 + 1,   B1 = 2 alpha beta - alpha^2 + 2 alpha,
  and (w, alpha, beta) is an exception when B0 > C(w+1, 2) or B1 > 2 C(w+1, 3).
- For large w two closed-form chains replace the sweep; they are evaluated with
  interval arithmetic at sample points.
"""

import logging
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Iterator

from mpmath import iv

from src.errors import RangeError
from src.monomial.ideal import binomial

from .base import BoundReport, compare_le
from .formulas import interval_precision, sqrt_interval

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = (100, 200, 1000)


@dataclass(frozen=True, order=True)
class Shape:
    w: int
    alpha: int
    beta: int

    @property
    def b0_estimate(self) -> int:
        a, b = self.alpha, self.beta
        return a * b - a * (a - 3) // 2 + 1

    @property
    def b1_estimate(self) -> int:
        a, b = self.alpha, self.beta
        return 2 * a * b - a * a + 2 * a

    @property
    def is_exception(self) -> bool:
        w = self.w
        return self.b0_estimate > binomial(w + 1, 2) or self.b1_estimate > 2 * binomial(w + 1, 3)

    def to_dict(self) -> dict:
        return {"w": self.w, "alpha": self.alpha, "beta": self.beta,
                "b0_estimate": self.b0_estimate, "b1_estimate": self.b1_estimate}


def admissible_shapes(w: int) -> Iterator[Shape]:
    alpha_cap = isqrt(6 * w + 4) - 1
    for alpha in range(2, alpha_cap + 1):
        if binomial(alpha + 2, 3) > 1 + (alpha - 1) * w:
            continue
        for beta in range(alpha, 2 * w + 2):
            if binomial(alpha + 1, 3) + binomial(beta + 1, 2) <= 1 + (beta - 1) * w:
                yield Shape(w, alpha, beta)


def thm51_sweep(w_min: int, w_max: int) -> list[tuple[int, int, int]]:
    if w_min < 3:
        raise RangeError(f"sweep needs w_min >= 3, got {w_min}")
    exceptions = []
    for w in range(w_min, w_max + 1):
        found = [s for s in admissible_shapes(w) if s.is_exception]
        logger.debug("w=%d: %d exceptions", w, len(found))
        exceptions.extend((s.w, s.alpha, s.beta) for s in found)
    return sorted(exceptions)


def closed_form_terms(w: int) -> dict[str, tuple]:
    """Interval values of the two chains X <= 5 w^(3/2) <= C(w+1, 2), 2X <= 10 w^(3/2) <= 2 C(w+1, 3)."""
    with interval_precision():
        x = (sqrt_interval(6 * w + 4) - 1) * (2 * w + 1)
        w_three_halves = iv.mpf(w) * sqrt_interval(w)
        b0 = (x + 2, 5 * w_three_halves, binomial(w + 1, 2))
        b1 = (2 * x, 10 * w_three_halves, 2 * binomial(w + 1, 3))
    return {"b0": b0, "b1": b1}


def sweep_report(w_min: int, w_max: int, samples: Iterable[int] = DEFAULT_SAMPLES) -> BoundReport:
    """Exceptions of the sweep plus the large-w closed-form sample checks."""
    exceptions = thm51_sweep(w_min, w_max)
    report = BoundReport(subject=f"w={w_min}..{w_max}")
    sample_rows = []
    for w in sorted(set(samples)):
        for name, (low, middle, high) in closed_form_terms(w).items():
            status = [compare_le(low, middle), compare_le(middle, high)]
            ok = all(s == "pass" for s in status)
            sample_rows.append({"w": w, "estimate": name, "pass": ok})
            if not ok:
                report.failures.append(f"closed-form chain for {name} fails at w={w}: {status}")
    report.details = {
        "exceptions": [Shape(*t).to_dict() for t in exceptions],
        "exception_count": len(exceptions),
        "distinct_pairs": len({(a, b) for _, a, b in exceptions}),
        "samples": sample_rows,
    }
    return report
