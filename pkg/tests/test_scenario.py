# tests/test_scenario.py
from pathlib import Path

import pytest

from errors import ScenarioParseError, ValidationError
from harness import PRESETS, SUITES, load_scenario, parse_scenario
from torus import TorusForm
from utils import scenario_files

SCENARIOS_DIR = Path(__file__).parent.parent / "scenarios"

MINIMAL = """
name = "minimal"
dim = 1

[group]
kind = "trivial"
"""


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_load(name):
    scenario = load_scenario(name)
    assert scenario.name == name
    assert scenario.description


def test_shipped_scenario_files_load(config):
    files = scenario_files(str(SCENARIOS_DIR))
    assert files
    for path in files:
        scenario = load_scenario(str(path))
        assert scenario.path == str(path)
    assert load_scenario("z3-torus2", str(SCENARIOS_DIR)).group.order == 3


def test_z4_scenario(z4):
    assert z4.group.order == 4
    assert z4.conductor == 1
    assert z4.bundle.rank == 1
    assert z4.connection.potential.entry(0, 0).degrees() == [1]
    assert z4.applicable("chern-compare")


def test_circle_scenario(circle):
    assert not circle.is_finite
    assert circle.bundle.charges == (2, 0)
    assert circle.jet_order == 2
    assert not circle.applicable("chern-compare")
    assert circle.applicable("bridge")


def test_defaults():
    scenario = parse_scenario(MINIMAL)
    assert scenario.band == 1
    assert scenario.seed is None
    assert scenario.suites == SUITES
    assert scenario.bundle.rank == 1
    assert scenario.connection.potential.is_zero()


def test_digest_follows_the_text():
    assert parse_scenario(MINIMAL).digest == parse_scenario(MINIMAL).digest
    assert parse_scenario(MINIMAL).digest != parse_scenario(MINIMAL + "band = 0\n").digest


def test_average_flag(z4):
    text = PRESETS["z4-torus2"].replace("average = false", "average = true")
    assert parse_scenario(text).connection.is_invariant()


# ─── Rejected input ──────────────────────────────────────────────
def test_parse_error_has_a_location():
    with pytest.raises(ScenarioParseError) as info:
        parse_scenario('name = "x"\ndim = = 2\n', "broken.toml")
    assert info.value.path == "broken.toml"
    assert info.value.line == 2
    assert str(info.value).startswith("broken.toml:2")


def test_structural_errors():
    with pytest.raises(ValidationError, match="unknown group kind"):
        parse_scenario(MINIMAL.replace('kind = "trivial"', 'kind = "lattice"'))
    with pytest.raises(ValidationError, match="scenario needs a 'dim' entry"):
        parse_scenario(MINIMAL.replace("dim = 1", ""))


def test_non_associative_table_is_rejected():
    text = """
dim = 0
[group]
kind = "table"
labels = ["e", "a", "b"]
table = [["e", "a", "b"], ["a", "e", "a"], ["b", "b", "e"]]
"""
    with pytest.raises(ValidationError, match="not associative"):
        parse_scenario(text)


def test_table_must_start_with_the_unit():
    text = """
dim = 0
[group]
kind = "table"
labels = ["s", "e"]
table = [["e", "s"], ["s", "e"]]
"""
    with pytest.raises(ValidationError, match="unit"):
        parse_scenario(text)


def test_bad_cocycle_is_rejected():
    text = PRESETS["z2-flip-torus2"].replace('form = "1 * e[1,1] * dx{}"', 'form = "2 * e[0,0] * dx{}"')
    with pytest.raises(ValidationError, match="cocycle identity fails"):
        parse_scenario(text)


def test_connection_entries_must_be_one_forms():
    text = MINIMAL + '\n[[connection.potential]]\nrow = 1\ncol = 1\nform = "1 * e[1] * dx{}"\n'
    with pytest.raises(ValidationError, match="1-forms"):
        parse_scenario(text)


def test_charges_only_on_the_circle():
    text = MINIMAL + "\n[bundle]\nrank = 1\ncharges = [1]\n"
    with pytest.raises(ValidationError, match="charges"):
        parse_scenario(text)


def test_unknown_suites_and_entries_out_of_range():
    with pytest.raises(ValidationError, match="unknown suites"):
        parse_scenario('suites = ["dga", "speed"]\n' + MINIMAL)
    text = MINIMAL + '\n[[connection.potential]]\nrow = 2\ncol = 1\nform = "1 * e[0] * dx{1}"\n'
    with pytest.raises(ValidationError, match="outside rank 1"):
        parse_scenario(text)


def test_unknown_scenario():
    with pytest.raises(ValidationError, match="no scenario file or preset"):
        load_scenario("no-such-scenario")


def test_matrix_entries_accumulate():
    text = MINIMAL + (
        '\n[[connection.potential]]\nrow = 1\ncol = 1\nform = "1 * e[1] * dx{1}"\n'
        '\n[[connection.potential]]\nrow = 1\ncol = 1\nform = "2 * e[1] * dx{1}"\n'
    )
    scenario = parse_scenario(text)
    assert scenario.connection.potential.entry(0, 0) == TorusForm.dx(1, 0, coef=3, k=(1,))


def test_conductor(z2_shift):
    assert z2_shift.conductor == 2
    assert parse_scenario("conductor = 8\n" + PRESETS["z4-torus2"]).conductor == 8
    assert parse_scenario("conductor = 4\n" + PRESETS["z2-shift-torus2"]).conductor == 4


def test_conductor_must_hold_the_translations():
    with pytest.raises(ValidationError, match="translation phases"):
        parse_scenario("conductor = 3\n" + PRESETS["z2-shift-torus2"])
    with pytest.raises(ValidationError, match="positive integer"):
        parse_scenario("conductor = 0\n" + MINIMAL)
