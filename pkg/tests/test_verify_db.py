# tests/test_verify_db.py
import pytest

from harness import CheckResult, Report
from verify_db import CacheService, CheckRecord, RunService
from verify_db.services import cache_key


def make_report(suite="dga", scenario="z4-torus2", failing=False):
    checks = [
        CheckResult(f"{suite}.one", "first identity", "pass", "d1", wall_time=0.25, cases=4),
        CheckResult(f"{suite}.two", "second identity", "skipped", "d2", note="needs a circle scenario"),
    ]
    if failing:
        checks.append(CheckResult(f"{suite}.three", "third identity", "fail", "d3", counterexample="lhs != rhs"))
    return Report(scenario, "a" * 64, suite, 17, checks)


# ─── Runs ────────────────────────────────────────────────────────
def test_record_run(db_session):
    run = RunService.record_run(db_session, make_report(failing=True), "reports/z4/dga-17.json")
    assert run.id_run is not None
    assert (run.passed, run.failed, run.skipped) == (1, 1, 1)

    stored = RunService.get_run(db_session, run.id_run, load_checks=True)
    assert stored.report_path == "reports/z4/dga-17.json"
    assert sorted(c.check_id for c in stored.checks) == ["dga.one", "dga.three", "dga.two"]
    assert next(c for c in stored.checks if c.check_id == "dga.one").wall_time == "0.250"


def test_get_missing_run(db_session):
    assert RunService.get_run(db_session, 999) is None


def test_list_runs_filters_and_limits(db_session):
    first = RunService.record_run(db_session, make_report("dga"))
    RunService.record_run(db_session, make_report("jlo"))
    last = RunService.record_run(db_session, make_report("dga", "circle-torus2"))

    assert [r.id_run for r in RunService.list_runs(db_session, suite="dga")] == [last.id_run, first.id_run]
    assert [r.suite for r in RunService.list_runs(db_session, scenario="z4-torus2")] == ["jlo", "dga"]
    assert len(RunService.list_runs(db_session, limit=2)) == 2


def test_failing_checks(db_session):
    run = RunService.record_run(db_session, make_report(failing=True))
    failures = RunService.failing_checks(db_session, run.id_run)
    assert [c.check_id for c in failures] == ["dga.three"]
    assert failures[0].counterexample == "lhs != rhs"


def test_delete_run(db_session):
    run = RunService.record_run(db_session, make_report())
    assert RunService.delete_run(db_session, run.id_run)
    assert RunService.get_run(db_session, run.id_run) is None
    assert db_session.query(CheckRecord).count() == 0
    assert not RunService.delete_run(db_session, run.id_run)


# ─── Cache ───────────────────────────────────────────────────────
def test_cache_key_depends_on_every_part():
    key = cache_key("digest", "Ch0", "x")
    assert len(key) == 64
    assert key == cache_key("digest", "Ch0", "x")
    assert len({key, cache_key("other", "Ch0", "x"), cache_key("digest", "Ch2", "x"),
                cache_key("digest", "Ch0", "y")}) == 4


def test_put_get_and_overwrite(db_session):
    CacheService.put(db_session, "k1", "Ch0", "1/2")
    assert CacheService.get(db_session, "k1") == "1/2"
    CacheService.put(db_session, "k1", "Ch0", "3")
    assert CacheService.get(db_session, "k1") == "3"
    assert CacheService.get(db_session, "missing") is None


def test_put_requires_key_and_operator(db_session):
    with pytest.raises(ValueError):
        CacheService.put(db_session, "", "Ch0", "1")
    with pytest.raises(ValueError):
        CacheService.put(db_session, "k", "", "1")


def test_count_by_operator(db_session):
    CacheService.put(db_session, "k1", "Ch0", "1")
    CacheService.put(db_session, "k2", "Ch0", "2")
    CacheService.put(db_session, "k3", "Ch2", "0")
    assert CacheService.count(db_session) == 3
    assert CacheService.count(db_session, "Ch0") == 2


def test_spot_check_reports_mismatches(db_session):
    CacheService.put(db_session, "good", "Ch0", "1")
    CacheService.put(db_session, "bad", "Ch0", "2")
    fresh = {"good": "1", "bad": "3", "gone": "0"}
    assert CacheService.spot_check(db_session, ["good", "bad", "gone"], fresh.get) == ["bad"]
    assert CacheService.spot_check(db_session, ["good", "bad"], lambda key: None) == []
