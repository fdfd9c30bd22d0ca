"""
Semigroup Syzygies – command-line driver.

Commands:
  analyze     one semigroup: Apery set, Betti table, tangent-cone ideal J, HS profile,
              bound comparisons and (for w <= m-2) the tangent-cone checks
  sweep       every semigroup with width/multiplicity in the given ranges, one row each,
              followed by the largest Betti numbers per width
  verify      reproduce a finite verification: prop43 | thm51 | remark | jtilde |
              herzog | consistency
  shift-scan  Betti vectors of the shifted semigroups <g_0+j, ..., g_nu+j>

Exit codes: 0 = everything passed, 1 = usage or input error, 2 = verification failure.
Logs go to standard error; the report goes to standard output or --out.
"""

import argparse
import copy
import logging
import sys
import time
from multiprocessing import Pool, cpu_count
from pathlib import Path
from typing import Optional

import yaml

from src.bounds.base import BORDERLINE, EQUAL, PASS, VIOLATION, BaseBound
from src.bounds.families import ConjectureBound, ExponentialBound, VallaBound
from src.bounds import formulas
from src.bounds.periodicity import shift_scan
from src.bounds.semigroup_check import check_semigroup, verify_hs_problem
from src.bounds.suites import (
    CompletionFamilySuite,
    ExceptionCountSuite,
    HyperplaneEstimateSuite,
    LargeWidthSuite,
    ThreeGeneratedSuite,
    TwoVariableSuite,
)
from src.errors import ConfigError, ConstraintViolated, SyzygyError
from src.linalg import matrix
from src.linalg.field import FieldConfig, parse_field
from src.monomial.closed_forms import tangent_cone_envelope
from src.monomial.ideal import hilbert_function
from src.monomial.textio import write_ideal
from src.report.writer import FORMATS, Report, write_report
from src.resolution.quotient import betti_monomial_quotient
from src.resolution.semigroup_betti import betti_semigroup
from src.resolution.tangent_cone import tangent_cone_initial_ideal
from src.semigroup.enumeration import enumerate_corpus
from src.semigroup.numerical import (
    NumericalSemigroup,
    apery_set,
    from_generators,
    hilbert_samuel_gr,
    interval_completion,
)

# ---------------------------------------------------------------------------
# Logging setup
# ---------------------------------------------------------------------------
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s [%(levelname)s] %(name)s – %(message)s",
    handlers=[logging.StreamHandler(sys.stderr)],
)
logger = logging.getLogger("syzygies")

# ---------------------------------------------------------------------------
# Registries
# ---------------------------------------------------------------------------
ALL_BOUNDS: dict[str, BaseBound] = {
    "conjecture": ConjectureBound(),
    "valla": VallaBound(),
    "thm14": ExponentialBound(),
}

ALL_VERIFICATIONS = {
    suite.name: suite
    for suite in (
        HyperplaneEstimateSuite(),
        TwoVariableSuite(),
        ExceptionCountSuite(),
        CompletionFamilySuite(),
        ThreeGeneratedSuite(),
        LargeWidthSuite(),
    )
}

DEFAULT_CONFIG = {
    "field": "q",
    "jobs": 0,
    "output": {"format": "json"},
    "linalg": {"dense_threshold": 64},
    "bounds": {"precision_bits": 128, "enabled": list(ALL_BOUNDS)},
    "sweep": {"width": "1..3", "mult": "2..12"},
    "verify": {name: dict(suite.DEFAULTS) for name, suite in ALL_VERIFICATIONS.items()},
    "shift_scan": {"j_max": 40},
}


def _merge(base: dict, override: dict) -> dict:
    out = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = _merge(out[key], value)
        else:
            out[key] = value
    return out


def load_config(path: str = "config.yaml") -> dict:
    if not Path(path).exists():
        logger.warning("Config file %s not found – using built-in defaults", path)
        return copy.deepcopy(DEFAULT_CONFIG)
    with open(path, "r", encoding="utf-8") as f:
        loaded = yaml.safe_load(f) or {}
    if not isinstance(loaded, dict):
        raise ConfigError(f"{path} must contain a mapping")
    return _merge(DEFAULT_CONFIG, loaded)


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------

def parse_range(text) -> range:
    """'a..b' -> range(a, b+1); 'a' -> range(a, a+1)."""
    text = str(text).strip()
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise ConfigError(f"bad range {text!r} (expected a or a..b)") from None
    if lo > hi:
        raise ConfigError(f"empty range {text!r}")
    return range(lo, hi + 1)


def parse_gens(text: str) -> list[int]:
    try:
        return [int(part) for part in str(text).replace(" ", "").split(",") if part]
    except ValueError:
        raise ConfigError(f"bad generator list {text!r} (expected e.g. 4,5,6,7)") from None


def parse_int_list(text) -> list[int]:
    if isinstance(text, (list, tuple)):
        return [int(x) for x in text]
    return parse_gens(text)


def enabled_bounds(names) -> list[BaseBound]:
    names = [n.strip() for n in (names.split(",") if isinstance(names, str) else names) if n.strip()]
    unknown = [n for n in names if n not in ALL_BOUNDS]
    if unknown:
        raise ConfigError(f"unknown bound families {unknown}; known: {sorted(ALL_BOUNDS)}")
    return [ALL_BOUNDS[n] for n in names]


def _family_status(records) -> str:
    statuses = {r.status for r in records}
    for status in (VIOLATION, BORDERLINE):
        if status in statuses:
            return status
    if statuses and statuses <= {EQUAL}:
        return EQUAL
    return PASS


def _configure(config: dict) -> None:
    matrix.configure(config["linalg"]["dense_threshold"])
    formulas.configure(config["bounds"]["precision_bits"])


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def analyze_semigroup(S: NumericalSemigroup, field: FieldConfig, families: list[BaseBound]) -> dict:
    """Every per-semigroup computation, as one JSON-ready dict with a 'pass' flag."""
    ap = apery_set(S)
    betti = betti_semigroup(S, field)
    bounds = check_semigroup(S, field, families, betti)
    result = {
        "semigroup": S.to_dict(),
        "narrow": S.is_narrow,
        "apery": ap.to_dict(),
        "hs_gr": [hilbert_samuel_gr(S, d) for d in range(ap.max_order + 1)],
        "betti": betti.to_dict(),
        "bounds": bounds.to_dict(),
    }
    failures = [f"b_{r.index} {r.status} against {r.bound_name}" for r in bounds.violations]

    if S.nu >= 1:
        J = tangent_cone_initial_ideal(S, field)
        hf = hilbert_function(J)
        result["tangent_cone"] = {
            "ideal": str(J),
            "generators": [list(g) for g in J.generators],
            "colength": hf.colength,
            "hf": list(hf.hf),
            "hs": hf.hs_profile(),
        }
        if hf.colength != S.multiplicity:
            failures.append(f"length of Q/J is {hf.colength}, expected {S.multiplicity}")
        if list(hf.hf) != ap.order_profile():
            failures.append("Hilbert function of Q/J differs from the Apery order profile")
        if S.is_narrow:
            failures.extend(_narrow_checks(S, J, betti, field, result))
        result["_ideal"] = J

    result["failures"] = failures
    result["pass"] = not failures
    return result


def _narrow_checks(S, J, betti, field, result: dict) -> list[str]:
    failures = []
    m, w = S.multiplicity, S.width
    envelope = tangent_cone_envelope(m, w, S.nu)
    outside = [g for g in J.generators if not envelope.contains(g)]
    if outside:
        failures.append(f"J generators outside the envelope: {outside}")

    completion = interval_completion(S)
    top = max(apery_set(S).max_order, apery_set(completion).max_order)
    hs_pairs = [(hilbert_samuel_gr(S, d), hilbert_samuel_gr(completion, d)) for d in range(top + 1)]
    if any(a > b for a, b in hs_pairs):
        failures.append("HS of the tangent cone exceeds that of the interval completion")

    quotient = betti_monomial_quotient(J, field)
    if any(betti.b(i) > quotient.b(i) for i in range(betti.length)):
        failures.append("b_i of the semigroup ring exceeds b_i of Q/J")

    try:
        hs_report = verify_hs_problem(J, w, field)
        if not hs_report.passed:
            failures.append("b_i(Q/J) exceeds C(w, i)(3e)^sqrt(2w)")
    except ConstraintViolated as exc:
        failures.append(str(exc))

    result["narrow_checks"] = {
        "envelope": str(envelope),
        "completion": completion.label,
        "quotient_betti": list(quotient.total),
    }
    return failures


def cmd_analyze(args, config: dict) -> int:
    field = parse_field(args.field or config["field"])
    families = enabled_bounds(args.checks or config["bounds"]["enabled"])
    S = from_generators(parse_gens(args.gens))
    logger.info("Analyzing %s over %s", S, field)

    result = analyze_semigroup(S, field, families)
    J = result.pop("_ideal", None)
    if args.ideal_out and J is not None:
        write_ideal(J, args.ideal_out)
        logger.info("J written to %s", args.ideal_out)

    row = {
        "generators": list(S.generators),
        "m": S.multiplicity,
        "w": S.width,
        "frobenius": S.frobenius,
        "betti": result["betti"]["total"],
        "j_ideal": result.get("tangent_cone", {}).get("ideal", ""),
        "j_colength": result.get("tangent_cone", {}).get("colength", ""),
    }
    report = Report(
        command="analyze",
        field=field.tag,
        inputs={"generators": parse_gens(args.gens), "checks": [f.name for f in families]},
        results=[result],
        rows=[row],
        passed=result["pass"],
        violations=result["failures"],
    )
    for failure in result["failures"]:
        logger.error("%s: %s", S, failure)
    write_report(report, args.format or config["output"]["format"], args.out)
    return 0 if report.passed else 2


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _sweep_worker(task: tuple) -> dict:
    gens, field_tag, family_names, dense_threshold, precision_bits = task
    matrix.configure(dense_threshold)
    formulas.configure(precision_bits)
    field = parse_field(field_tag)
    S = from_generators(gens)
    betti = betti_semigroup(S, field)
    report = check_semigroup(S, field, [ALL_BOUNDS[n] for n in family_names], betti)
    row = {"kind": "semigroup", "generators": list(S.generators),
           "m": S.multiplicity, "w": S.width, "betti": list(betti.total)}
    for name in family_names:
        row[name] = _family_status([r for r in report.records if r.bound_name == name])
    return row


def _run_tasks(worker, tasks: list, jobs: int) -> list:
    if jobs == 1 or len(tasks) < 2:
        return [worker(t) for t in tasks]
    with Pool(processes=jobs) as pool:
        return pool.map(worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))


def cmd_sweep(args, config: dict) -> int:
    field = parse_field(args.field or config["field"])
    families = enabled_bounds(args.checks or config["bounds"]["enabled"])
    widths = parse_range(args.width or config["sweep"]["width"])
    mults = parse_range(args.mult or config["sweep"]["mult"])
    jobs = args.jobs if args.jobs is not None else int(config["jobs"])
    jobs = jobs or cpu_count()

    corpus = [S.generators for S in enumerate_corpus(widths, mults)]
    names = [f.name for f in families]
    tasks = [(gens, field.tag, names, config["linalg"]["dense_threshold"],
              config["bounds"]["precision_bits"]) for gens in corpus]

    start = time.monotonic()
    logger.info("=" * 60)
    logger.info("Sweep started: w in %s, m in %s, %d semigroups, jobs=%d",
                f"{widths.start}..{widths.stop - 1}", f"{mults.start}..{mults.stop - 1}", len(tasks), jobs)
    rows = sorted(_run_tasks(_sweep_worker, tasks, jobs), key=lambda r: (r["m"], r["generators"]))

    top = max((len(r["betti"]) - 1 for r in rows), default=0)
    extremal: dict[int, list[int]] = {}
    for row in rows:
        betti = row.pop("betti")
        for i in range(1, top + 1):
            row[f"b_{i}"] = betti[i] if i < len(betti) else 0
        best = extremal.setdefault(row["w"], [0] * top)
        extremal[row["w"]] = [max(a, row[f"b_{i + 1}"]) for i, a in enumerate(best)]

    violations = [
        {"generators": r["generators"], "family": n, "status": r[n]}
        for r in rows for n in names if r[n] in (VIOLATION, BORDERLINE)
    ]
    for v in violations:
        logger.error("%s: %s bound %s", v["generators"], v["family"], v["status"])
    summary_rows = [
        {"kind": "extremal", "generators": "", "m": "", "w": w,
         **{f"b_{i + 1}": value for i, value in enumerate(best)}, **{n: "" for n in names}}
        for w, best in sorted(extremal.items())
    ]
    columns = ["kind", "generators", "m", "w"] + [f"b_{i}" for i in range(1, top + 1)] + names
    report = Report(
        command="sweep",
        field=field.tag,
        inputs={"width": [widths.start, widths.stop - 1], "mult": [mults.start, mults.stop - 1],
                "checks": names},
        results=rows + summary_rows,
        rows=rows + summary_rows,
        columns=columns,
        passed=not violations,
        violations=violations,
    )
    logger.info("Sweep finished in %.1fs | %d semigroups | %d violations",
                time.monotonic() - start, len(rows), len(violations))
    logger.info("=" * 60)
    write_report(report, args.format or config["output"]["format"], args.out)
    return 0 if report.passed else 2


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args, config: dict) -> int:
    suite = ALL_VERIFICATIONS[args.suite]
    field = parse_field(args.field or config["field"])
    params = dict(config["verify"].get(suite.name, {}))
    overrides = {"w_min": args.w_min, "w_max": args.w_max, "m_max": args.m_max,
                 "samples": parse_int_list(args.samples) if args.samples else None}
    params.update({k: v for k, v in overrides.items() if v is not None})
    params["field"] = field

    start = time.monotonic()
    logger.info("Verification %s started with %s", suite.name,
                {k: v for k, v in params.items() if k != "field"})
    result = suite.run(params)
    logger.info("Verification %s finished in %.1fs | %d records | %s", suite.name,
                time.monotonic() - start, len(result.records), "PASS" if result.passed else "FAIL")

    violations = [r.to_dict() for r in result.violations] + list(result.failures)
    for failure in result.failures:
        logger.error("%s: %s", suite.name, failure)
    exceptions = result.details.get("exceptions")
    rows = exceptions if exceptions is not None else [r.to_dict() for r in result.records]
    report = Report(
        command=f"verify {suite.name}",
        field=field.tag,
        inputs={k: v for k, v in suite.params(params).items() if k != "field"},
        results=[result.to_dict()],
        rows=rows,
        passed=result.passed,
        violations=violations,
    )
    write_report(report, args.format or config["output"]["format"], args.out)
    return 0 if report.passed else 2


# ---------------------------------------------------------------------------
# shift-scan
# ---------------------------------------------------------------------------

def cmd_shift_scan(args, config: dict) -> int:
    field = parse_field(args.field or config["field"])
    S = from_generators(parse_gens(args.gens))
    j_max = args.j_max if args.j_max is not None else int(config["shift_scan"]["j_max"])
    scan = shift_scan(S, j_max, field)
    report = Report(
        command="shift-scan",
        field=field.tag,
        inputs={"generators": list(S.generators), "j_max": j_max},
        results=[scan.to_dict()],
        rows=scan.rows,
        columns=["j", "generators", "betti"],
    )
    write_report(report, args.format or config["output"]["format"], args.out)
    return 0


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", default="config.yaml", help="YAML config file")
    common.add_argument("--field", help="q (rationals) or gf:p")
    common.add_argument("--format", choices=FORMATS, help="report format")
    common.add_argument("--out", help="write the report here instead of standard output")
    common.add_argument("--verbose", action="store_true", help="DEBUG logging")

    parser = _Parser(prog="main.py", description="Syzygies of numerical semigroup rings")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[common], help="analyze one semigroup")
    analyze.add_argument("--gens", required=True, help="comma-separated generators")
    analyze.add_argument("--checks", help="comma-separated bound families")
    analyze.add_argument("--ideal-out", help="write J in the monomial ideal text format")

    sweep = sub.add_parser("sweep", parents=[common], help="sweep semigroups by width and multiplicity")
    sweep.add_argument("--width", help="w or a..b")
    sweep.add_argument("--mult", help="a..b")
    sweep.add_argument("--checks", help="comma-separated bound families")
    sweep.add_argument("--jobs", type=int, help="worker processes (0 = all cores)")

    verify = sub.add_parser("verify", parents=[common], help="reproduce a finite verification")
    verify.add_argument("suite", choices=sorted(ALL_VERIFICATIONS))
    verify.add_argument("--w-min", type=int)
    verify.add_argument("--w-max", type=int)
    verify.add_argument("--m-max", type=int)
    verify.add_argument("--samples", help="comma-separated sample points for the large-w checks")

    scan = sub.add_parser("shift-scan", parents=[common], help="Betti vectors of shifted semigroups")
    scan.add_argument("--gens", required=True, help="comma-separated generators")
    scan.add_argument("--j-max", type=int)
    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "shift-scan": cmd_shift_scan,
}


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.getLogger().setLevel(logging.DEBUG if args.verbose else logging.INFO)
        config = load_config(args.config)
        _configure(config)
        return COMMANDS[args.command](args, config)
    except SyzygyError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
