# harness/runner.py
"""Suite execution: independent checks run on a worker pool, report assembly stays serial."""
import hashlib
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from config import get_config
from errors import UnsupportedOperation, ValidationError
from jlo import jlo_generic
from logging_equichern import logger

from .cache import EvaluationCache
from .checks import Check, CheckContext, CheckResult, run_check
from .report import Report
from .scenario import SUITES, Scenario
from .suites import build_suite

CACHE_ANCHOR = "cached operator evaluations equal fresh evaluations"


def _cache_soundness(cache: EvaluationCache) -> CheckResult:
    keys = cache.spot_keys()
    digest = hashlib.sha256("\x1e".join(keys).encode("utf-8")).hexdigest()
    if not keys:
        return CheckResult("cache-soundness", CACHE_ANCHOR, "skipped", digest,
                           note="no cached evaluations in this run")
    mismatches = cache.spot_check()
    if mismatches:
        return CheckResult("cache-soundness", CACHE_ANCHOR, "fail", digest,
                           counterexample="\n".join(mismatches), cases=len(keys))
    return CheckResult("cache-soundness", CACHE_ANCHOR, "pass", digest, cases=len(keys))


def run_suite(
    scenario: Scenario,
    suite: str,
    seed: Optional[int] = None,
    config=None,
    cache: Optional[EvaluationCache] = None,
) -> Report:
    """
    Run every check of a suite on a scenario. The seed falls back to the
    scenario seed and then to the configured default.
    """
    if suite not in SUITES:
        raise ValidationError(f"unknown suite {suite!r}, expected one of {', '.join(SUITES)}")
    if not scenario.applicable(suite):
        raise UnsupportedOperation(f"suite {suite} needs a finite group, {scenario.name} has a circle action")
    config = config or get_config()
    if seed is None:
        seed = scenario.seed if scenario.seed is not None else config.DEFAULT_SEED

    checks = build_suite(scenario, suite)
    if cache is not None:
        cache.reset()
    with ThreadPoolExecutor(max_workers=max(1, config.WORKERS)) as pool:
        results = list(pool.map(lambda check: run_check(check, scenario, seed, config, cache), checks))
    if cache is not None:
        results.append(_cache_soundness(cache))

    report = Report(scenario.name, scenario.digest, suite, seed, results)
    totals = report.totals()
    logger.info(
        f"{suite} on {scenario.name}: {totals['pass']} passed, "
        f"{totals['fail']} failed, {totals['skipped']} skipped"
    )
    for failure in report.failures():
        logger.info(f"FAIL {failure.check_id} ({failure.anchor})")
    return report


def cocycle_table(
    scenario: Scenario,
    seed: Optional[int] = None,
    config=None,
    algebra: str = "twisted",
) -> dict:
    """
    Values of every JLO component Ch^k, k <= n of the parity of n, on the
    basis tuples the jlo suite uses.
    """
    if algebra not in ("twisted", "untwisted", "invariant"):
        raise ValidationError(f"unknown algebra {algebra!r}")
    if algebra == "invariant" and not scenario.is_finite:
        raise UnsupportedOperation("averaged connections are built over finite groups")
    config = config or get_config()
    if seed is None:
        seed = scenario.seed if scenario.seed is not None else config.DEFAULT_SEED
    dga = getattr(scenario, f"{algebra}_dga")
    rows = []
    for k in range(scenario.dim % 2, scenario.dim + 1, 2):
        cochain = jlo_generic(dga, k)
        ctx = CheckContext(scenario, Check(f"chern-jlo.k{k}", "JLO table", lambda _: iter(())), seed, config)
        for xs in ctx.tuples(k + 1):
            rows.append({
                "degree": k,
                "tuple": [x.to_text() for x in xs],
                "value": cochain.evaluate(xs).to_text(),
            })
    logger.info(f"JLO table for {scenario.name}: {len(rows)} values")
    return {
        "scenario": scenario.name,
        "scenario_digest": scenario.digest,
        "algebra": algebra,
        "seed": seed,
        "rows": rows,
    }
