"""
Base classes for bound families and verification suites.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field as dc_field
from typing import Any, Optional, Union

from mpmath import iv, mpf

Bound = Union[int, Any]      # exact integer or an mpmath iv interval

EQUAL = "equal"
PASS = "pass"
BORDERLINE = "borderline"
VIOLATION = "violation"


def _as_interval(x: Bound):
    return iv.mpf(x) if isinstance(x, int) else x


def compare_le(computed: Bound, bound: Bound) -> str:
    """Status of the claim computed <= bound.

    Integer against integer is decided exactly. Anything involving an interval
    passes only when computed's upper end is <= bound's lower end, fails only when
    computed's lower end exceeds bound's upper end, and is borderline otherwise.
    """
    if isinstance(computed, int) and isinstance(bound, int):
        if computed == bound:
            return EQUAL
        return PASS if computed < bound else VIOLATION
    lhs, rhs = _as_interval(computed), _as_interval(bound)
    if lhs.b <= rhs.a:
        return PASS
    if lhs.a > rhs.b:
        return VIOLATION
    return BORDERLINE


def jsonable(x: Bound):
    if isinstance(x, int):
        return x
    return {"lower": float(mpf(x.a)), "upper": float(mpf(x.b))}


@dataclass
class BoundRecord:
    """One comparison computed <= bound."""
    index: int
    computed: Bound
    bound: Bound
    bound_name: str
    status: str
    extra: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status in (EQUAL, PASS)

    def to_dict(self) -> dict:
        out = {
            "index": self.index,
            "computed": jsonable(self.computed),
            "bound": jsonable(self.bound),
            "bound_name": self.bound_name,
            "status": self.status,
        }
        out.update(self.extra)
        return out


@dataclass
class BoundReport:
    subject: str
    field: str = "q"
    records: list[BoundRecord] = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)
    failures: list[str] = dc_field(default_factory=list)

    def add(self, index: int, computed: Bound, bound: Bound, bound_name: str,
            status: Optional[str] = None, **extra) -> BoundRecord:
        """Append a record; status defaults to compare_le(computed, bound)."""
        record = BoundRecord(index, computed, bound, bound_name,
                             status or compare_le(computed, bound), extra)
        self.records.append(record)
        return record

    @property
    def borderline(self) -> list[BoundRecord]:
        return [r for r in self.records if r.status == BORDERLINE]

    @property
    def violations(self) -> list[BoundRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.violations and not self.failures

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "field": self.field,
            "pass": self.passed,
            "records": [r.to_dict() for r in self.records],
            "details": self.details,
            "failures": list(self.failures),
        }


class BaseBound(ABC):
    """
    A bound family b_i <= f(m, w, i) checked against semigroup Betti numbers.

    Subclasses must implement:
        - name (property)
        - value(m, w, i) -> int or interval, or None where the family says nothing
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Unique family identifier, e.g. 'conjecture'."""

    @abstractmethod
    def value(self, m: int, w: int, i: int) -> Optional[Bound]:
        """Bound on b_i for multiplicity m and width w."""

    def check(self, report: BoundReport, betti: tuple[int, ...], m: int, w: int) -> None:
        for i in range(1, len(betti)):
            bound = self.value(m, w, i)
            if bound is not None:
                report.add(i, betti[i], bound, self.name)


class BaseVerification(ABC):
    """
    A reproducible verification run driven by `main.py verify <name>`.

    Subclasses must implement:
        - name (property)
        - DEFAULTS: parameter defaults, overridable from config.yaml
        - run(params) -> BoundReport
    """

    DEFAULTS: dict = {}

    @property
    @abstractmethod
    def name(self) -> str:
        """Subcommand name, e.g. 'prop43'."""

    @abstractmethod
    def run(self, params: dict) -> BoundReport:
        """Execute the verification with DEFAULTS updated by params."""

    def params(self, overrides: Optional[dict] = None) -> dict:
        merged = dict(self.DEFAULTS)
        merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
        return merged
