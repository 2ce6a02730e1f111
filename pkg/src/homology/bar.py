# homology/bar.py
"""
Normalized Hochschild chains of the crossed product of a finite group with
the Fourier modes of the torus.

A basis key is a tuple of slots (g, k), each the element e_k u_g. The unit is
the slot (e, 0); chains with a unit in slot i >= 1 are zero.
"""
from typing import Dict, Sequence, Tuple

from errors import DomainError
from groups import AlgebraElem, FiniteGroup
from scalars import LinComb, Scalar, sign
from scalars.lincomb import accumulate
from torus import add_modes

from .cylindrical import CylChain

Slot = Tuple[int, Tuple[int, ...]]
BarKey = Tuple[Slot, ...]


class BarChain(LinComb):
    __slots__ = ("group",)

    def __init__(self, group: FiniteGroup, terms: Dict[BarKey, Scalar] = None):
        if not group.is_finite:
            raise DomainError("bar chains are built over finite groups")
        super().__init__(terms)
        self.group = group

    def _new(self, terms):
        obj = object.__new__(BarChain)
        obj.terms = terms
        obj.group = self.group
        return obj

    def _check_compatible(self, other: "BarChain") -> None:
        if other.group is not self.group:
            raise DomainError("bar chains over different groups")

    @property
    def unit_slot(self) -> Slot:
        return (0, (0,) * self.group.dim)

    @classmethod
    def single(cls, group: FiniteGroup, slots: Sequence, coef=1) -> "BarChain":
        key = tuple((g, tuple(k)) for g, k in slots)
        return cls(group, {key: Scalar.of(coef)})

    @classmethod
    def from_elements(cls, elements: Sequence[AlgebraElem]) -> "BarChain":
        """Multilinear expansion of a_0 (x) ... (x) a_k; the adjoined unit becomes (e, 0)."""
        if not elements:
            raise DomainError("a chain needs at least one slot")
        group = elements[0].group
        unit = (0, (0,) * group.dim)
        expansions = []
        for a in elements:
            slots = list(a.terms.items())
            if not a.unit.is_zero():
                slots.append((unit, a.unit))
            expansions.append(slots)
        out: Dict[BarKey, Scalar] = {}
        partial = [((), Scalar.of(1))]
        for slots in expansions:
            partial = [(key + (slot,), c * d) for key, c in partial for slot, d in slots]
        accumulate(partial, out)
        return cls(group, out).normalize()

    def degrees(self):
        return sorted({len(key) - 1 for key in self.terms})

    def normalize(self) -> "BarChain":
        unit = self.unit_slot
        return self.filter_keys(lambda key: unit not in key[1:])

    # ─── Algebra of slots ────────────────────────────────────────
    def _multiply(self, left: Slot, right: Slot) -> Tuple[Scalar, Slot]:
        (g, a), (h, b) = left, right
        phase, image = self.group.act_mode(g, b)
        return phase, (self.group.mul(g, h), add_modes(a, image))

    def face(self, i: int) -> "BarChain":
        def apply(key, c):
            n = len(key) - 1
            if i < n:
                phase, slot = self._multiply(key[i], key[i + 1])
                return [(key[:i] + (slot,) + key[i + 2:], c * phase)]
            phase, slot = self._multiply(key[n], key[0])
            return [((slot,) + key[1:n], c * phase)]

        return self.map_terms(apply)

    def rotate(self) -> "BarChain":
        return self.map_terms(lambda key, c: [((key[-1],) + key[:-1], c)])

    def b(self) -> "BarChain":
        out: Dict[BarKey, Scalar] = {}
        for key, c in self.terms.items():
            n = len(key) - 1
            x = self._new({key: c})
            for i in range(n + 1 if n else 0):
                accumulate(x.face(i).scale(sign(i)).terms.items(), out)
        return self._new(out).normalize()

    def B(self) -> "BarChain":
        unit = self.unit_slot
        out: Dict[BarKey, Scalar] = {}
        for key, c in self.terms.items():
            n = len(key) - 1
            x = self._new({key: c})
            for i in range(n + 1):
                accumulate(((((unit,) + k), d * sign(i * n)) for k, d in x.terms.items()), out)
                x = x.rotate()
        return self._new(out).normalize()

    def total_differential(self) -> "BarChain":
        return self.b() + self.B()

    # ─── Into the cylindrical complex ────────────────────────────
    def psi1(self) -> CylChain:
        """(g_0..g_n; b_0..b_n) with b_i moved by (g_i .. g_n)^-1."""
        group = self.group
        out: Dict = {}
        for key, c in self.terms.items():
            gs = tuple(g for g, _ in key)
            coef = c
            bs = []
            for i, (_, k) in enumerate(key):
                phase, image = group.act_mode(group.inv(group.product(gs[i:])), k)
                coef = coef * phase
                bs.append(image)
            accumulate([((gs, tuple(bs)), coef)], out)
        return CylChain(group, out).normalize_diagonal()

    def to_text(self) -> str:
        lines = []
        for key, c in self.sorted_terms():
            slots = " (x) ".join(f"[{self.group.label(g)}]e[{','.join(str(x) for x in k)}]" for g, k in key)
            lines.append(f"{c.to_text()} * {slots}")
        return "\n".join(lines) or "0"
