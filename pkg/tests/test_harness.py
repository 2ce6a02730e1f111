# tests/test_harness.py
import json

import pytest

from config import TestingConfig
from errors import UnsupportedOperation, ValidationError
from harness import (
    PRESETS,
    SUITE_BUILDERS,
    SUITES,
    Case,
    Check,
    CheckResult,
    EvaluationCache,
    Report,
    cocycle_table,
    emit_report,
    evaluate_pairing,
    load_scenario,
    parse_cochain,
    parse_tuple,
    run_check,
    run_suite,
)
from scalars import Scalar, ZERO
from utils import read_input_file, report_path

JLO_POINT = """
scenario = "z2-point"
kind = "jlo"
degree = 0
"""

CHARACTER_POINT = """
scenario = "z2-point"
kind = "character"
"""

TUPLE_POINT = """
[[slot]]
unit = "2"
[[slot.term]]
element = "e"
coef = "3"
"""


# ─── Running suites ──────────────────────────────────────────────
def test_reductions_report_on_a_point(z2_point, config):
    report = run_suite(z2_point, "reductions", 3, config)
    assert report.passed
    assert report.totals() == {"pass": 2, "fail": 0, "skipped": 3}
    assert report.suite == "reductions"
    assert report.scenario_digest == z2_point.digest


def test_reports_are_deterministic(z2_point, config):
    first = run_suite(z2_point, "reductions", 5, config)
    second = run_suite(z2_point, "reductions", 5, config)
    assert first.to_json() == second.to_json()
    assert "wall_time" not in first.to_json()


def test_seed_falls_back_to_the_configured_default(z2_point, config):
    assert z2_point.seed is None
    assert run_suite(z2_point, "reductions", config=config).seed == config.DEFAULT_SEED


def test_claims_hold_on_z4(z4, config):
    report = run_suite(z4, "claims", 11, config)
    assert not report.failures()
    assert {c.check_id for c in report.checks if c.status == "pass"} >= {
        "claims.delta-cocycle",
        "claims.covariant-square",
        "claims.pulled-curvature",
    }


def test_suite_errors(circle, z4, config):
    with pytest.raises(ValidationError, match="unknown suite"):
        run_suite(z4, "speed", 1, config)
    with pytest.raises(UnsupportedOperation):
        run_suite(circle, "chern-compare", 1, config)


def broken(ctx):
    yield Case("first", ZERO, ZERO)
    raise KeyError("rank")


def test_a_raising_check_fails(z2_point, config):
    result = run_check(Check("demo.broken", "raises after one case", broken), z2_point, 1, config)
    assert result.status == "fail"
    assert result.cases == 1
    assert "KeyError" in result.counterexample


def test_the_suite_continues_after_a_raising_check(monkeypatch, z2_point, config):
    fine = Check("demo.fine", "holds", lambda ctx: iter([Case("x", ZERO, ZERO)]))
    monkeypatch.setitem(SUITE_BUILDERS, "reductions", lambda scenario: [Check("demo.broken", "raises", broken), fine])
    report = run_suite(z2_point, "reductions", 1, config)
    assert report.totals() == {"pass": 1, "fail": 1, "skipped": 0}
    assert [c.check_id for c in report.failures()] == ["demo.broken"]


def test_circle_action_claim(circle, config):
    report = run_suite(circle, "claims", 11, config)
    assert not report.failures()
    assert next(c for c in report.checks if c.check_id == "claims.circle-action").status == "pass"


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(PRESETS))
def test_every_preset_at_full_sample_size(monkeypatch, config, name):
    monkeypatch.setattr(TestingConfig, "SAMPLE_COUNT", 200)
    scenario = load_scenario(name)
    for suite in SUITES:
        if scenario.applicable(suite):
            report = run_suite(scenario, suite, config=config)
            assert not report.failures(), f"{suite} on {name}: {[c.check_id for c in report.failures()]}"


# ─── Reports ─────────────────────────────────────────────────────
def failing_report():
    checks = [
        CheckResult("a.one", "first identity", "pass", "d1", cases=3),
        CheckResult("a.two", "second identity", "fail", "d2", counterexample="x = 1\nlhs:\n1\nrhs:\n0", cases=1),
        CheckResult("a.three", "third identity", "skipped", "d3", note="needs a circle scenario"),
    ]
    return Report("demo", "f" * 64, "claims", 9, checks)


def test_report_totals_and_failures():
    report = failing_report()
    assert report.totals() == {"pass": 1, "fail": 1, "skipped": 1}
    assert not report.passed
    assert [c.check_id for c in report.failures()] == ["a.two"]


def test_structured_report():
    data = json.loads(failing_report().to_json())
    assert data["totals"] == {"pass": 1, "fail": 1, "skipped": 1}
    assert data["checks"][1]["counterexample"].startswith("x = 1")
    assert "wall_time" not in data["checks"][0]


def test_human_report():
    text = failing_report().to_human()
    assert "suite claims on demo (seed 9)" in text
    assert "1 passed, 1 failed, 1 skipped" in text
    assert "a.three: needs a circle scenario" in text
    assert "counterexample for a.two (second identity):" in text
    assert "no checks" in Report("demo", "0" * 64, "dga", 1).to_human()


def test_render_rejects_unknown_formats():
    with pytest.raises(ValueError, match="unknown report format"):
        failing_report().render("yaml")


def test_emit_report_writes_the_file(tmp_path):
    target = emit_report(failing_report(), "human", str(tmp_path / "out" / "report.txt"))
    assert target.read_text(encoding="utf-8") == failing_report().to_human()


# ─── Evaluation cache ────────────────────────────────────────────
def test_cache_is_sound_and_reused(db, z2_point, config):
    cache = EvaluationCache(config.CACHE_SPOT_CHECKS)
    first = run_suite(z2_point, "jlo", 4, config, cache)
    assert first.checks[-1].check_id == "cache-soundness"
    assert first.checks[-1].status == "pass"
    assert cache.misses > 0

    second = run_suite(z2_point, "jlo", 4, config, cache)
    assert cache.misses == 0
    assert cache.hits > 0
    assert second.to_json() == first.to_json()


def test_cache_soundness_is_skipped_without_cached_values(db, z2_point, config):
    report = run_suite(z2_point, "reductions", 4, config, EvaluationCache(2))
    assert report.checks[-1].status == "skipped"


# ─── JLO tables ──────────────────────────────────────────────────
def test_cocycle_table_on_a_point(z2_point, config):
    table = cocycle_table(z2_point, 1, config)
    assert table["algebra"] == "twisted"
    # two basis elements and the unit, degree 0 only
    assert len(table["rows"]) == 3
    assert {row["degree"] for row in table["rows"]} == {0}
    assert table["rows"][-1]["value"] == "1"


def test_cocycle_table_errors(z2_point, circle, config):
    with pytest.raises(ValidationError):
        cocycle_table(z2_point, 1, config, "plain")
    with pytest.raises(UnsupportedOperation):
        cocycle_table(circle, 1, config, "invariant")


# ─── Pairing inputs ──────────────────────────────────────────────
def test_jlo_pairing_on_a_point():
    pairing = parse_cochain(JLO_POINT)
    xs = parse_tuple(TUPLE_POINT, pairing.scenario)
    assert pairing.arity == 1
    assert evaluate_pairing(pairing, xs) == Scalar.of(5)


def test_character_pairing_on_a_point():
    pairing = parse_cochain(CHARACTER_POINT)
    xs = parse_tuple(TUPLE_POINT.replace('unit = "2"', 'unit = "1"'), pairing.scenario)
    assert evaluate_pairing(pairing, xs) == Scalar.of(4)


def test_pairing_arity_must_match():
    pairing = parse_cochain(JLO_POINT)
    xs = parse_tuple(TUPLE_POINT + TUPLE_POINT, pairing.scenario)
    with pytest.raises(ValidationError, match="takes 1 slots"):
        evaluate_pairing(pairing, xs)


def test_cochain_file_errors():
    with pytest.raises(ValidationError, match="needs a 'scenario'"):
        parse_cochain('kind = "jlo"\n')
    with pytest.raises(ValidationError, match="unknown cochain kind"):
        parse_cochain(JLO_POINT.replace('"jlo"', '"spectral"'))
    with pytest.raises(ValidationError, match="nonnegative integer"):
        parse_cochain(JLO_POINT.replace("degree = 0", "degree = -2"))
    with pytest.raises(ValidationError, match="finite groups"):
        parse_cochain('scenario = "circle-torus2"\nkind = "character"\n')


def test_tuple_file_errors(circle, z4):
    with pytest.raises(ValidationError, match="at least one"):
        parse_tuple("", z4)
    with pytest.raises(ValidationError, match="integer modes"):
        parse_tuple('[[slot]]\n[[slot.term]]\nelement = "r"\nmode = [0, 0]\n', circle)
    with pytest.raises(ValidationError, match="does not live on"):
        parse_tuple('[[slot]]\n[[slot.term]]\nelement = "r"\nmode = [1]\n', z4)


# ─── Files ───────────────────────────────────────────────────────
def test_report_path_is_stable(tmp_path):
    path = report_path(str(tmp_path), "Z4 Torus", "chern-compare", 7)
    assert path == tmp_path / "z4-torus" / "chern-compare-7.json"
    assert path.parent.is_dir()
    assert report_path(str(tmp_path), "Z4 Torus", "chern-compare", 7, "human").suffix == ".txt"
    with pytest.raises(ValueError):
        report_path(str(tmp_path), "z4", "dga", 1, "yaml")


def test_read_input_file(tmp_path):
    source = tmp_path / "cochain.toml"
    source.write_text(JLO_POINT, encoding="utf-8")
    assert read_input_file(str(source), "cochain") == JLO_POINT
    with pytest.raises(ValueError, match="tuple file not found"):
        read_input_file(str(tmp_path / "missing.toml"), "tuple")
