# cli.py
"""
equichern command line.

Exit codes: 0 when every check passes, 1 when a check fails, 2 when the
input is rejected (parse, validation or unsupported-scope errors).
"""
import functools
import json
from pathlib import Path

import click

from config import get_config
from harness import (
    FORMATS,
    PRESETS,
    SUITES,
    EvaluationCache,
    cocycle_table,
    emit_report,
    evaluate_pairing,
    load_scenario,
    parse_cochain,
    parse_scenario,
    parse_tuple,
    run_suite,
)
from logging_equichern import logger
from utils import read_input_file, report_path
from verify_db import RunService, init_db, session_scope


def guarded(command):
    """Print rejected input as a ✗ line and exit with code 2."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ValueError as e:
            click.echo(f"✗ {e}", err=True)
            raise SystemExit(2)

    return wrapper


def _config(ctx: click.Context):
    return ctx.obj["config"]


def _run_and_report(ctx, scenario_name: str, suite: str, seed, report, fmt: str, use_cache: bool) -> None:
    config = _config(ctx)
    scenario = load_scenario(scenario_name, config.SCENARIOS_DIR)
    cache = EvaluationCache(config.CACHE_SPOT_CHECKS) if use_cache and config.CACHE_ENABLED else None
    result = run_suite(scenario, suite, seed, config, cache)

    target = Path(report) if report else report_path(config.REPORTS_DIR, scenario.name, suite, result.seed, fmt)
    emit_report(result, fmt, str(target))
    with session_scope() as session:
        RunService.record_run(session, result, str(target))

    totals = result.totals()
    mark = "✓" if result.passed else "✗"
    click.echo(
        f"{mark} {suite} on {scenario.name}: {totals['pass']} passed, "
        f"{totals['fail']} failed, {totals['skipped']} skipped"
    )
    for failure in result.failures():
        click.echo(f"  ✗ {failure.check_id} ({failure.anchor})")
    click.echo(f"  report: {target}")
    ctx.exit(0 if result.passed else 1)


# ─── Command group ───────────────────────────────────────────────
@click.group()
@click.option("--env", default=None, help="Configuration name (development, production, testing).")
@click.pass_context
@guarded
def main(ctx: click.Context, env):
    """Exact verification of equivariant Chern characters on crossed products."""
    config = get_config(env)
    config.init_app()
    init_db(config.DATABASE_URI, config.SQL_ECHO)
    ctx.ensure_object(dict)
    ctx.obj["config"] = config
    logger.debug(f"equichern started with {config.ENV} configuration")


@main.command()
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--scenario", "scenario_name", required=True, help="Scenario file, scenario name or preset.")
@click.option("--seed", type=int, default=None, help="Seed for sampled inputs.")
@click.option("--report", type=click.Path(dir_okay=False), default=None, help="Report file.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="structured", show_default=True)
@click.option("--cache/--no-cache", default=True, help="Use the evaluation cache.")
@click.pass_context
@guarded
def verify(ctx, suite, scenario_name, seed, report, fmt, cache):
    """Run one verification suite on a scenario."""
    _run_and_report(ctx, scenario_name, suite, seed, report, fmt, cache)


@main.command()
@click.argument("mode", type=click.Choice(["jlo", "compare"]))
@click.option("--scenario", "scenario_name", required=True, help="Scenario file, scenario name or preset.")
@click.option("--seed", type=int, default=None)
@click.option("--algebra", type=click.Choice(["twisted", "untwisted", "invariant"]), default="twisted",
              show_default=True, help="Algebra of the JLO table.")
@click.option("--report", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@guarded
def chern(ctx, mode, scenario_name, seed, algebra, report):
    """Evaluate the JLO cocycle table, or compare the Chern characters."""
    if mode == "compare":
        _run_and_report(ctx, scenario_name, "chern-compare", seed, report, "structured", True)
        return
    config = _config(ctx)
    scenario = load_scenario(scenario_name, config.SCENARIOS_DIR)
    table = cocycle_table(scenario, seed, config, algebra)
    target = Path(report) if report else report_path(
        config.REPORTS_DIR, scenario.name, f"chern-jlo-{algebra}", table["seed"]
    )
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(json.dumps(table, sort_keys=True, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    click.echo(f"✓ {len(table['rows'])} values of the {algebra} JLO cocycle on {scenario.name}")
    click.echo(f"  report: {target}")


@main.command()
@click.option("--cochain", "cochain_file", required=True, type=click.Path(dir_okay=False))
@click.option("--tuple", "tuple_file", required=True, type=click.Path(dir_okay=False))
@click.pass_context
@guarded
def pair(ctx, cochain_file, tuple_file):
    """Evaluate a cochain on a tuple of algebra elements."""
    config = _config(ctx)
    pairing = parse_cochain(read_input_file(cochain_file, "cochain"), cochain_file, config.SCENARIOS_DIR)
    xs = parse_tuple(read_input_file(tuple_file, "tuple"), pairing.scenario, tuple_file)
    value = evaluate_pairing(pairing, xs)
    click.echo(f"{pairing.description} on {pairing.scenario.name}:")
    click.echo(value.to_text())


@main.command()
@guarded
def presets():
    """List the built-in scenarios."""
    for name, text in PRESETS.items():
        scenario = parse_scenario(text)
        click.echo(f"{name:<18} {scenario.description}")


@main.command()
@click.option("--suite", type=click.Choice(SUITES), default=None)
@click.option("--scenario", "scenario_name", default=None)
@click.option("--limit", type=int, default=20, show_default=True)
@guarded
def history(suite, scenario_name, limit):
    """List recorded verification runs, most recent first."""
    with session_scope() as session:
        runs = RunService.list_runs(session, suite, scenario_name, limit)
        if not runs:
            click.echo("no recorded runs")
            return
        for run in runs:
            mark = "✓" if not run.failed else "✗"
            click.echo(
                f"{mark} #{run.id_run} {run.started_at:%Y-%m-%d %H:%M} {run.suite} on {run.scenario} "
                f"seed {run.seed}: {run.passed} passed, {run.failed} failed, {run.skipped} skipped"
            )


@main.command()
@click.pass_context
def bootstrap(ctx):
    """Create directories and tables and validate the presets."""
    from bootstrap import bootstrap as run_bootstrap

    ctx.exit(0 if run_bootstrap(_config(ctx)) else 1)


if __name__ == "__main__":
    main()
