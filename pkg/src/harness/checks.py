# harness/checks.py
"""
Checks: named identities evaluated on generated inputs.

A check function receives a CheckContext and yields Cases. The check passes
when every case has lhs == rhs exactly; the first failing case becomes the
counterexample and stops the check.
"""
import hashlib
import logging
import time
from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Iterable, List, Optional, Sequence

from errors import UnsupportedOperation
from groups import AlgebraElem

from .sampling import Sampler, basis_elements

logger = logging.getLogger(__name__)

REQUIREMENTS = ("any", "finite", "circle", "trivial", "point")
STATUSES = ("pass", "fail", "skipped")


def to_text(value: Any) -> str:
    """Canonical text of engine values, repr for anything else."""
    if hasattr(value, "to_text"):
        return value.to_text()
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(to_text(v) for v in value) + ")"
    return repr(value)


@dataclass
class Case:
    label: str
    lhs: Any
    rhs: Any

    def holds(self) -> bool:
        return self.lhs == self.rhs

    def describe(self) -> str:
        return f"{self.label}\nlhs:\n{to_text(self.lhs)}\nrhs:\n{to_text(self.rhs)}"


@dataclass
class Check:
    check_id: str
    anchor: str
    fn: Callable[["CheckContext"], Iterable[Case]]
    requires: str = "any"
    cost: int = 1

    def __post_init__(self):
        if self.requires not in REQUIREMENTS:
            raise ValueError(f"unknown requirement {self.requires!r} for {self.check_id}")

    def applies_to(self, scenario) -> bool:
        if self.requires == "any":
            return True
        if self.requires == "finite":
            return scenario.is_finite
        if self.requires == "circle":
            return not scenario.is_finite
        if self.requires == "trivial":
            return scenario.is_finite and scenario.group.order == 1
        return scenario.is_finite and scenario.dim == 0


@dataclass
class CheckResult:
    check_id: str
    anchor: str
    status: str
    inputs_digest: str
    counterexample: Optional[str] = None
    wall_time: float = 0.0
    cases: int = 0
    note: Optional[str] = None

    def to_dict(self) -> dict:
        """Structured form; wall time stays out so reports diff cleanly."""
        return {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "status": self.status,
            "inputs_digest": self.inputs_digest,
            "counterexample": self.counterexample,
            "cases": self.cases,
            "note": self.note,
        }


class CheckContext:
    """Inputs and services handed to a check function."""

    def __init__(self, scenario, check: Check, seed: int, config, cache=None):
        self.scenario = scenario
        self.check = check
        self.seed = seed
        self.config = config
        self.cache = cache
        self.sampler = Sampler(scenario, seed, check.check_id)

    def samples(self) -> int:
        return max(2, self.config.SAMPLE_COUNT // self.check.cost)

    def basis(self) -> List[AlgebraElem]:
        band = min(self.scenario.band, self.config.EXHAUSTIVE_BAND)
        return basis_elements(self.scenario.group, self.scenario.dim, band)

    def tuples(self, arity: int) -> List[List[AlgebraElem]]:
        """
        Exhaustive basis tuples when they fit into the sample budget, seeded
        samples otherwise. The first slot also runs over the unit on finite groups.
        """
        budget = self.samples()
        basis = self.basis()
        first = list(basis)
        if self.scenario.is_finite:
            first.append(AlgebraElem.identity(self.scenario.group))
        if arity and len(first) * len(basis) ** (arity - 1) <= budget:
            return [list(xs) for xs in product(first, *([basis] * (arity - 1)))]
        return [self.sampler.algebra_tuple(arity) for _ in range(budget)]

    def evaluate(self, operator: str, cochain, xs: Sequence[AlgebraElem]):
        """Cochain value, through the evaluation cache when one is attached."""
        if self.cache is None:
            return cochain.evaluate(xs)
        return self.cache.evaluate(self.scenario, operator, cochain, xs)


def tuple_label(xs: Sequence[AlgebraElem]) -> str:
    return " | ".join(x.to_text().replace("\n", " + ") for x in xs)


def run_check(check: Check, scenario, seed: int, config, cache=None) -> CheckResult:
    started = time.perf_counter()
    digest = hashlib.sha256()
    if not check.applies_to(scenario):
        return CheckResult(
            check.check_id, check.anchor, "skipped", digest.hexdigest(),
            note=f"needs a {check.requires} scenario",
        )
    ctx = CheckContext(scenario, check, seed, config, cache)
    status, counterexample, note, count = "pass", None, None, 0
    try:
        for case in check.fn(ctx):
            count += 1
            digest.update(case.label.encode("utf-8"))
            digest.update(b"\x1e")
            if not case.holds():
                status, counterexample = "fail", case.describe()
                break
    except UnsupportedOperation as e:
        status, note = "skipped", str(e)
    except Exception as e:
        # an exception fails this check only
        logger.warning(f"check {check.check_id} raised {type(e).__name__}: {e}")
        status = "fail"
        counterexample = f"error after {count} cases: {type(e).__name__}: {e}"
    if status == "pass" and count == 0:
        status, note = "skipped", "no inputs in range for this scenario"
    result = CheckResult(
        check.check_id, check.anchor, status, digest.hexdigest(), counterexample,
        time.perf_counter() - started, count, note,
    )
    logger.debug(f"check {check.check_id}: {status} ({count} cases)")
    return result
