from .cache import EvaluationCache
from .checks import Case, Check, CheckContext, CheckResult, run_check
from .inputs import PairingInput, evaluate_pairing, parse_cochain, parse_tuple
from .presets import PRESETS
from .report import FORMATS, Report, emit_report
from .runner import cocycle_table, run_suite
from .sampling import Sampler, basis_elements
from .scenario import FINITE_ONLY_SUITES, SUITES, Scenario, load_scenario, load_toml, parse_scenario
from .suites import SUITE_BUILDERS, build_suite

__all__ = [
    "EvaluationCache",
    "Case",
    "Check",
    "CheckContext",
    "CheckResult",
    "run_check",
    "PairingInput",
    "evaluate_pairing",
    "parse_cochain",
    "parse_tuple",
    "PRESETS",
    "FORMATS",
    "Report",
    "emit_report",
    "cocycle_table",
    "run_suite",
    "Sampler",
    "basis_elements",
    "FINITE_ONLY_SUITES",
    "SUITES",
    "Scenario",
    "load_scenario",
    "load_toml",
    "parse_scenario",
    "SUITE_BUILDERS",
    "build_suite",
]
