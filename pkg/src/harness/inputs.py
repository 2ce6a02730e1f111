# harness/inputs.py
"""
Cochain and tuple files for `equichern pair`.

A cochain file names a scenario and either gives an equivariant cochain term
by term or selects one of the characters the engine computes::

    scenario = "z4-torus2"
    kind = "getzler"              # getzler | character | jlo

    [[term]]                      # kind = "getzler" only
    elements = ["r", "r"]
    form = "1 * e[0,0] * dx{1,2}"

    algebra = "twisted"           # kind = "jlo": twisted | untwisted | invariant
    degree = 2                    # kind = "jlo"

A tuple file lists the algebra elements, one [[slot]] each::

    [[slot]]
    unit = "1"
    [[slot.term]]
    element = "e"                 # group label, or an integer mode on the circle
    mode = [1, 0]
    coef = "1/2"
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

from errors import ValidationError
from getzler import GetzCochain, c_cochain, getzler_chern
from groups import AlgebraElem
from jlo import jlo_generic
from scalars import Scalar, parse_scalar
from torus import parse_form

from .scenario import Scenario, load_scenario, load_toml

logger = logging.getLogger(__name__)

COCHAIN_KINDS = ("getzler", "character", "jlo")
JLO_ALGEBRAS = ("twisted", "untwisted", "invariant")


@dataclass
class PairingInput:
    scenario: Scenario
    kind: str
    description: str
    evaluate: Callable[[Sequence[AlgebraElem]], Scalar]
    arity: Optional[int] = None


def _getzler_terms(data: Dict[str, Any], scenario: Scenario) -> GetzCochain:
    group = scenario.group
    alpha = GetzCochain(group)
    for i, term in enumerate(data.get("term", []), start=1):
        if "form" not in term:
            raise ValidationError(f"cochain term {i} needs a 'form'")
        gs = [group.index(str(label)) for label in term.get("elements", [])]
        alpha = alpha + alpha.embed(gs, parse_form(scenario.dim, term["form"]))
    return alpha


def parse_cochain(text: str, path: Optional[str] = None, scenarios_dir: Optional[str] = None) -> PairingInput:
    data = load_toml(text, path)
    if "scenario" not in data:
        raise ValidationError("cochain file needs a 'scenario' entry")
    scenario = load_scenario(str(data["scenario"]), scenarios_dir)
    kind = data.get("kind", "getzler")
    if kind not in COCHAIN_KINDS:
        raise ValidationError(f"unknown cochain kind {kind!r}, expected one of {', '.join(COCHAIN_KINDS)}")

    if kind == "jlo":
        algebra = data.get("algebra", "twisted")
        if algebra not in JLO_ALGEBRAS:
            raise ValidationError(f"unknown algebra {algebra!r}")
        degree = data.get("degree")
        if not isinstance(degree, int) or degree < 0:
            raise ValidationError("jlo cochains need a nonnegative integer 'degree'")
        dga = getattr(scenario, f"{algebra}_dga")
        cochain = jlo_generic(dga, degree)
        return PairingInput(scenario, kind, f"Ch^{degree} of the {algebra} algebra",
                            cochain.evaluate, degree + 1)

    if not scenario.is_finite:
        raise ValidationError("equivariant cochains are paired over finite groups")
    if kind == "character":
        alpha = getzler_chern(scenario.invariant_connection)
        description = "c of the Getzler character of the averaged connection"
    else:
        alpha = _getzler_terms(data, scenario)
        description = "c of the given equivariant cochain"
    return PairingInput(scenario, kind, description, lambda xs: c_cochain(alpha, len(xs)).evaluate(xs))


def _element(scenario: Scenario, slot: Dict[str, Any], index: int) -> AlgebraElem:
    group = scenario.group
    out = AlgebraElem.identity(group, parse_scalar(str(slot.get("unit", "0"))))
    for term in slot.get("term", []):
        label = term.get("element", 0 if not scenario.is_finite else group.label(0))
        if scenario.is_finite:
            g = group.index(str(label))
        elif isinstance(label, int):
            g = label
        else:
            raise ValidationError(f"slot {index}: circle elements are integer modes, got {label!r}")
        mode = tuple(term.get("mode", [0] * scenario.dim))
        if len(mode) != scenario.dim:
            raise ValidationError(f"slot {index}: mode {list(mode)} does not live on T^{scenario.dim}")
        out = out + AlgebraElem.element(group, g, mode, parse_scalar(str(term.get("coef", "1"))))
    return out


def parse_tuple(text: str, scenario: Scenario, path: Optional[str] = None) -> List[AlgebraElem]:
    data = load_toml(text, path)
    slots = data.get("slot", [])
    if not slots:
        raise ValidationError("tuple file needs at least one [[slot]]")
    xs = [_element(scenario, slot, i) for i, slot in enumerate(slots, start=1)]
    logger.debug(f"parsed a {len(xs)}-tuple for {scenario.name}")
    return xs


def evaluate_pairing(pairing: PairingInput, xs: Sequence[AlgebraElem]) -> Scalar:
    if pairing.arity is not None and len(xs) != pairing.arity:
        raise ValidationError(f"{pairing.description} takes {pairing.arity} slots, the tuple has {len(xs)}")
    return pairing.evaluate(xs)
