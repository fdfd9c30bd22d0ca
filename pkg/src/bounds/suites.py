"""
Verification suites behind `main.py verify <name>`.

Each suite carries its default ranges; config.yaml (verify.<name>) and command-line
flags override them. A suite's report passes iff the expected outcome was observed.
"""

from src.linalg.field import RATIONALS

from .base import BaseVerification, BoundReport
from .completion_check import herzog_three_generated, large_width_consistency, verify_completion_family
from .hyperplane_estimate import verify_prop43_range
from .two_variable_sweep import sweep_report


class HyperplaneEstimateSuite(BaseVerification):
    DEFAULTS = {"w_min": 3, "w_max": 111, "samples": [112, 500, 5000]}

    @property
    def name(self) -> str:
        return "prop43"

    def run(self, params: dict) -> BoundReport:
        p = self.params(params)
        return verify_prop43_range(p["w_min"], p["w_max"], p["samples"])


class TwoVariableSuite(BaseVerification):
    """No exceptional (alpha, beta) may survive in the range."""

    DEFAULTS = {"w_min": 40, "w_max": 99, "samples": [100, 200, 1000]}

    @property
    def name(self) -> str:
        return "thm51"

    def run(self, params: dict) -> BoundReport:
        p = self.params(params)
        report = sweep_report(p["w_min"], p["w_max"], p["samples"])
        count = report.details["exception_count"]
        if count:
            report.failures.append(f"{count} exceptional triples in w={p['w_min']}..{p['w_max']}")
        return report


class ExceptionCountSuite(BaseVerification):
    """Counts the exceptions left below the range the sweep settles."""

    DEFAULTS = {"w_min": 4, "w_max": 39, "count_min": 187, "count_max": 187, "samples": []}

    @property
    def name(self) -> str:
        return "remark"

    def run(self, params: dict) -> BoundReport:
        p = self.params(params)
        report = sweep_report(p["w_min"], p["w_max"], p["samples"])
        count = report.details["exception_count"]
        report.details["expected_count"] = [p["count_min"], p["count_max"]]
        if not p["count_min"] <= count <= p["count_max"]:
            report.failures.append(
                f"exception count {count} outside [{p['count_min']}, {p['count_max']}]"
            )
        return report


class CompletionFamilySuite(BaseVerification):
    DEFAULTS = {"m_max": 25, "w_min": 3}

    @property
    def name(self) -> str:
        return "jtilde"

    def run(self, params: dict) -> BoundReport:
        p = self.params(params)
        return verify_completion_family(p["m_max"], p["w_min"], p.get("field", RATIONALS))


class ThreeGeneratedSuite(BaseVerification):
    DEFAULTS = {"m_max": 30}

    @property
    def name(self) -> str:
        return "herzog"

    def run(self, params: dict) -> BoundReport:
        p = self.params(params)
        return herzog_three_generated(p["m_max"], p.get("field", RATIONALS))


class LargeWidthSuite(BaseVerification):
    DEFAULTS = {"m_max": 60}

    @property
    def name(self) -> str:
        return "consistency"

    def run(self, params: dict) -> BoundReport:
        return large_width_consistency(self.params(params)["m_max"])
