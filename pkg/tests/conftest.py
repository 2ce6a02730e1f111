# tests/conftest.py
import pytest
from hypothesis import HealthCheck, settings

from config import get_config
from harness import build_suite, load_scenario, run_check
from verify_db import get_session, init_db

settings.register_profile(
    "equichern",
    max_examples=20,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("equichern")


@pytest.fixture(scope="session")
def config():
    return get_config("testing")


# ─── Preset scenarios ────────────────────────────────────────────
@pytest.fixture(scope="session")
def z4():
    return load_scenario("z4-torus2")


@pytest.fixture(scope="session")
def circle():
    return load_scenario("circle-torus2")


@pytest.fixture(scope="session")
def trivial():
    return load_scenario("trivial-torus2")


@pytest.fixture(scope="session")
def z2_point():
    return load_scenario("z2-point")


@pytest.fixture(scope="session")
def z4_point():
    return load_scenario("z4-point")


@pytest.fixture(scope="session")
def z2_flip():
    return load_scenario("z2-flip-torus2")


@pytest.fixture(scope="session")
def z2_shift():
    return load_scenario("z2-shift-torus2")


# ─── Suites ──────────────────────────────────────────────────────
@pytest.fixture
def check_results(config):
    """Run every check of a suite and index the results by check id."""

    def run(scenario, suite, seed=11):
        return {
            check.check_id: run_check(check, scenario, seed, config)
            for check in build_suite(scenario, suite)
        }

    return run


# ─── Database ────────────────────────────────────────────────────
@pytest.fixture
def db(config):
    """Fresh in-memory database bound to the module-level engine."""
    init_db(config.DATABASE_URI)
    yield


@pytest.fixture
def db_session(db):
    session = get_session()
    yield session
    session.rollback()
    session.close()
