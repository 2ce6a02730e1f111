# dga/eqform.py
"""
Elements of the curved algebras: G-functions with values in Sym(g*) (x) Omega(End E).

``values`` maps a group key (element index for finite groups, Fourier mode for
the circle) to a PolyU in u whose coefficients are EndForms. ``unit`` is the
multiple of the adjoined unit delta_e. Total degree of a term is form degree
plus twice the u-degree.
"""
from typing import Callable, Dict, Iterator, Tuple

from errors import DomainError
from scalars import PolyU, Scalar, ZERO
from bundle import EndForm


class EqForm:
    __slots__ = ("dga", "values", "unit")

    def __init__(self, dga, values: Dict[int, PolyU] = None, unit=ZERO):
        self.dga = dga
        self.values = {g: p for g, p in (values or {}).items() if not p.is_zero()}
        self.unit = Scalar.of(unit)

    def _like(self, values: Dict[int, PolyU], unit=ZERO) -> "EqForm":
        return EqForm(self.dga, values, unit)

    def _check(self, other: "EqForm") -> None:
        if other.dga is not self.dga:
            raise DomainError("elements of different curved algebras")

    # ─── Inspection ──────────────────────────────────────────────
    def is_zero(self) -> bool:
        return not self.values and self.unit.is_zero()

    def items(self) -> Iterator[Tuple[int, PolyU]]:
        return iter(sorted(self.values.items()))

    def at(self, g: int) -> PolyU:
        return self.values.get(g, PolyU())

    def component(self, g: int, j: int = 0) -> EndForm:
        return self.at(g).coefficient(j, self.dga.zero_end())

    def terms(self) -> Iterator[Tuple[int, int, EndForm]]:
        for g, poly in self.items():
            for j, payload in poly.items():
                yield g, j, payload

    def degrees(self):
        return sorted({p + 2 * j for _, j, payload in self.terms() for p in payload.degrees()})

    def degree_part(self, total: int) -> "EqForm":
        out: Dict[int, PolyU] = {}
        for g, j, payload in self.terms():
            part = payload.degree_part(total - 2 * j)
            if not part.is_zero():
                out[g] = out.get(g, PolyU()) + PolyU.monomial(j, part)
        return self._like(out, self.unit if total == 0 else ZERO)

    # ─── Linear structure ────────────────────────────────────────
    def __add__(self, other: "EqForm") -> "EqForm":
        self._check(other)
        out = dict(self.values)
        for g, p in other.values.items():
            out[g] = p if g not in out else out[g] + p
        return self._like(out, self.unit + other.unit)

    def __neg__(self) -> "EqForm":
        return self._like({g: -p for g, p in self.values.items()}, -self.unit)

    def __sub__(self, other: "EqForm") -> "EqForm":
        return self + (-other)

    def scale(self, factor) -> "EqForm":
        factor = Scalar.of(factor)
        return self._like({g: p.scale(factor) for g, p in self.values.items()}, self.unit * factor)

    def __rmul__(self, factor) -> "EqForm":
        return self.scale(factor)

    def map_payloads(self, f: Callable[[int, int, EndForm], EndForm]) -> "EqForm":
        """Smooth part only: apply f(g, j, payload) termwise."""
        return self._like({
            g: PolyU({j: f(g, j, payload) for j, payload in poly.items()})
            for g, poly in self.values.items()
        })

    def smooth_part(self) -> "EqForm":
        return self._like(dict(self.values))

    # ─── Algebra ─────────────────────────────────────────────────
    def __mul__(self, other: "EqForm") -> "EqForm":
        return self.dga.star(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EqForm):
            return NotImplemented
        return self.dga is other.dga and self.values == other.values and self.unit == other.unit

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.values)), self.unit))

    def to_text(self) -> str:
        blocks = []
        if not self.unit.is_zero():
            blocks.append(f"unit: {self.unit.to_text()}")
        group = self.dga.group
        for g, j, payload in self.terms():
            label = group.label(g) if group.is_finite else f"m={g}"
            body = payload.to_text().replace("\n", "\n  ")
            blocks.append(f"[{label}] u^{j}\n  {body}")
        return "\n".join(blocks) or "0"

    def __repr__(self) -> str:
        return f"EqForm({self.to_text()!s})"
