# harness/scenario.py
"""
Scenario files: a torus action, an equivariant bundle and a connection.

Scenarios are TOML documents::

    name = "z4-torus2"
    dim = 2
    band = 1          # mode band of sampled inputs
    jet_order = 2     # u-order of circle jets

    [group]
    kind = "generated"            # generated | table | trivial | circle
    [group.generators.r]
    matrix = [[0, -1], [1, 0]]
    translation = ["0", "0"]

    [bundle]
    rank = 1
    [[bundle.cocycle]]            # generator (generated) or element label (table)
    element = "r"
    row = 1
    col = 1
    form = "1 * e[1,0] * dx{}"

    [connection]
    average = false
    [[connection.potential]]
    row = 1
    col = 1
    form = "1 * e[1,0] * dx{1}"

Forms use the canonical text of TorusForm, one term per line.
"""
import hashlib
import logging
import re

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from bundle import BundleDesc, Connection, EndForm
from dga import CurvedDGA
from errors import DomainError, ScenarioParseError, ValidationError
from groups import CircleGroup, FiniteGroup, GroupDesc
from torus import AffineMap, parse_form

logger = logging.getLogger(__name__)

SUITES = ("dga", "traces", "claims", "jlo", "complexes", "bridge", "chern-compare", "reductions")
FINITE_ONLY_SUITES = ("chern-compare",)
GROUP_KINDS = ("generated", "table", "trivial", "circle")

_LOCATION = re.compile(r"at line (\d+), column (\d+)")


@dataclass
class Scenario:
    name: str
    group: GroupDesc
    bundle: BundleDesc
    connection: Connection
    band: int = 1
    jet_order: int = 2
    conductor: int = 1
    seed: Optional[int] = None
    suites: Tuple[str, ...] = SUITES
    description: str = ""
    source: str = field(default="", repr=False)
    path: Optional[str] = None

    @property
    def dim(self) -> int:
        return self.group.dim

    @property
    def is_finite(self) -> bool:
        return self.group.is_finite

    @cached_property
    def digest(self) -> str:
        return hashlib.sha256(self.source.encode("utf-8")).hexdigest()

    # ─── Algebras ────────────────────────────────────────────────
    @cached_property
    def twisted_dga(self) -> CurvedDGA:
        return CurvedDGA.with_connection(self.connection)

    @cached_property
    def untwisted_dga(self) -> CurvedDGA:
        return CurvedDGA.untwisted(self.group)

    @cached_property
    def invariant_connection(self) -> Connection:
        return self.connection.average()

    @cached_property
    def invariant_dga(self) -> CurvedDGA:
        return CurvedDGA.with_connection(self.invariant_connection)

    def applicable(self, suite: str) -> bool:
        return suite in SUITES and (self.is_finite or suite not in FINITE_ONLY_SUITES)

    def describe(self) -> str:
        return f"{self.name}: {self.bundle.describe()}"


# ─── Parsing ─────────────────────────────────────────────────────
def load_toml(text: str, path: Optional[str] = None) -> Dict[str, Any]:
    """TOML text to a dict; decode errors become ScenarioParseError with a location."""
    try:
        return tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        line = getattr(e, "lineno", None)
        column = getattr(e, "colno", None)
        message = str(e)
        match = _LOCATION.search(message)
        if match and line is None:
            line, column = int(match.group(1)), int(match.group(2))
        message = _LOCATION.sub("", message).replace("()", "").strip()
        raise ScenarioParseError(message, path, line, column) from None


def parse_scenario(text: str, path: Optional[str] = None) -> Scenario:
    """Parse and validate scenario text."""
    data = load_toml(text, path)
    try:
        scenario = _build(data, text, path)
    except DomainError as e:
        raise ValidationError(str(e)) from e
    logger.debug(f"loaded scenario {scenario.name} ({scenario.digest[:12]})")
    return scenario


def _require(data: Dict[str, Any], key: str, where: str) -> Any:
    if key not in data:
        raise ValidationError(f"{where} needs a {key!r} entry")
    return data[key]


def _nonnegative(data: Dict[str, Any], key: str, default: int) -> int:
    value = data.get(key, default)
    if not isinstance(value, int) or value < 0:
        raise ValidationError(f"{key} must be a nonnegative integer")
    return value


def _affine(spec: Dict[str, Any], dim: int, name: str) -> AffineMap:
    matrix = spec.get("matrix", [[int(i == j) for j in range(dim)] for i in range(dim)])
    translation = [Fraction(str(x)) for x in spec.get("translation", ["0"] * dim)]
    if len(matrix) != dim or any(len(row) != dim for row in matrix) or len(translation) != dim:
        raise ValidationError(f"action of {name} does not act on T^{dim}")
    return AffineMap.of(matrix, translation)


def _build_group(spec: Dict[str, Any], dim: int) -> GroupDesc:
    kind = spec.get("kind", "generated")
    if kind not in GROUP_KINDS:
        raise ValidationError(f"unknown group kind {kind!r}, expected one of {', '.join(GROUP_KINDS)}")
    if kind == "trivial":
        return FiniteGroup.trivial(dim)
    if kind == "circle":
        direction = _require(spec, "direction", "circle group")
        if len(direction) != dim:
            raise ValidationError(f"circle direction {direction} does not live on T^{dim}")
        return CircleGroup(direction)
    if kind == "generated":
        generators = _require(spec, "generators", "generated group")
        maps = {name: _affine(g, dim, name) for name, g in generators.items()}
        return FiniteGroup.generated_by(dim, maps)
    labels = list(_require(spec, "labels", "group table"))
    if not labels or labels[0] != "e":
        raise ValidationError("the first label of a group table must be the unit 'e'")
    if len(set(labels)) != len(labels):
        raise ValidationError("group labels must be distinct")
    index = {label: i for i, label in enumerate(labels)}
    try:
        table = [[index[x] for x in row] for row in _require(spec, "table", "group table")]
    except KeyError as e:
        raise ValidationError(f"multiplication table refers to unknown element {e.args[0]!r}") from None
    actions_spec = spec.get("actions", {})
    unknown = set(actions_spec) - set(labels)
    if unknown:
        raise ValidationError(f"actions given for unknown elements {sorted(unknown)}")
    actions = [_affine(actions_spec.get(label, {}), dim, label) for label in labels]
    return FiniteGroup(labels, table, actions)


def _matrix(entries, rank: int, dim: int, where: str) -> EndForm:
    forms = {}
    for entry in entries:
        row, col = int(_require(entry, "row", where)), int(_require(entry, "col", where))
        if not (1 <= row <= rank and 1 <= col <= rank):
            raise ValidationError(f"{where} entry ({row}, {col}) outside rank {rank}")
        form = parse_form(dim, _require(entry, "form", where))
        key = (row - 1, col - 1)
        forms[key] = forms[key] + form if key in forms else form
    return EndForm.from_entries(rank, dim, forms)


def _build_bundle(spec: Dict[str, Any], group: GroupDesc, kind: str) -> BundleDesc:
    rank = _require(spec, "rank", "bundle")
    if not isinstance(rank, int) or rank < 1:
        raise ValidationError("bundle rank must be a positive integer")
    if not group.is_finite:
        return BundleDesc(group, rank, charges=spec.get("charges"))
    if spec.get("charges"):
        raise ValidationError("charges only apply to circle bundles")
    by_element: Dict[str, list] = {}
    for entry in spec.get("cocycle", []):
        by_element.setdefault(str(_require(entry, "element", "cocycle entry")), []).append(entry)
    images = {name: _matrix(entries, rank, group.dim, f"cocycle of {name}") for name, entries in by_element.items()}
    if kind == "generated":
        return BundleDesc.from_generator(group, rank, images)
    identity = EndForm.identity(rank, group.dim)
    cocycle = {g: images.get(group.label(g), identity) for g in group.elements()}
    unknown = set(images) - {group.label(g) for g in group.elements()}
    if unknown:
        raise ValidationError(f"cocycle given for unknown elements {sorted(unknown)}")
    return BundleDesc(group, rank, cocycle)


def _conductor(data: Dict[str, Any], group: GroupDesc) -> int:
    """Declared conductor, or the smallest one holding every translation phase."""
    if "conductor" not in data:
        return group.conductor
    conductor = data["conductor"]
    if not isinstance(conductor, int) or isinstance(conductor, bool) or conductor < 1:
        raise ValidationError(f"conductor must be a positive integer, got {conductor!r}")
    if conductor % group.conductor:
        raise ValidationError(
            f"conductor {conductor} does not hold the translation phases, which need a multiple of {group.conductor}"
        )
    return conductor


def _build(data: Dict[str, Any], text: str, path: Optional[str]) -> Scenario:
    name = str(data.get("name") or (Path(path).stem if path else "scenario"))
    dim = _nonnegative(data, "dim", -1) if "dim" in data else None
    if dim is None:
        raise ValidationError("scenario needs a 'dim' entry")
    group_spec = _require(data, "group", "scenario")
    kind = group_spec.get("kind", "generated")
    group = _build_group(group_spec, dim)
    if group.dim != dim:
        raise ValidationError(f"group acts on T^{group.dim}, scenario declares T^{dim}")
    bundle = _build_bundle(data.get("bundle", {"rank": 1}), group, kind)
    connection_spec = data.get("connection", {})
    potential = _matrix(connection_spec.get("potential", []), bundle.rank, dim, "connection")
    connection = Connection(bundle, potential)
    if connection_spec.get("average", False):
        connection = connection.average()
    suites = tuple(data.get("suites", SUITES))
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise ValidationError(f"unknown suites {unknown}")
    conductor = _conductor(data, group)
    seed = data.get("seed")
    if seed is not None and not isinstance(seed, int):
        raise ValidationError("seed must be an integer")
    return Scenario(
        name=name,
        group=group,
        bundle=bundle,
        connection=connection,
        band=_nonnegative(data, "band", 1),
        jet_order=_nonnegative(data, "jet_order", 2),
        conductor=conductor,
        seed=seed,
        suites=suites,
        description=str(data.get("description", "")),
        source=text,
        path=path,
    )


def load_scenario(source: str, scenarios_dir: Optional[str] = None) -> Scenario:
    """
    Load a scenario by file path, by name inside scenarios_dir, or by preset
    name, in that order.
    """
    from .presets import PRESETS

    candidates = [Path(source)]
    if scenarios_dir:
        candidates.append(Path(scenarios_dir) / f"{source}.toml")
    for candidate in candidates:
        if candidate.is_file():
            return parse_scenario(candidate.read_text(encoding="utf-8"), str(candidate))
    if source in PRESETS:
        return parse_scenario(PRESETS[source], None)
    raise ValidationError(f"no scenario file or preset named {source!r}")
