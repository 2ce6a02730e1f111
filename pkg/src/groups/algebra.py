# groups/algebra.py
"""
The convolution algebra C_c(G x T^n) and its unitalization.

A basis key ``(g, k)`` is the function (x, h) -> [h = g] e_k(x) for a finite
group and (x, h) -> e^{tau g h} e_k(x) for the circle, where g is then a
Fourier mode. The adjoined unit delta_e is tracked as a separate scalar.
"""
from typing import Dict, Hashable, Tuple

from errors import DomainError
from scalars import ONE, LinComb, Scalar, ZERO
from scalars.lincomb import accumulate
from torus import TorusForm, add_modes

from .group import GroupDesc
from .groupfun import GroupFun

AlgebraKey = Tuple[int, Tuple[int, ...]]


class AlgebraElem(LinComb):
    __slots__ = ("group", "unit")

    def __init__(self, group: GroupDesc, terms: Dict[AlgebraKey, Scalar] = None, unit=ZERO):
        super().__init__(terms)
        self.group = group
        self.unit = Scalar.of(unit)

    def _new(self, terms, unit=None):
        obj = object.__new__(AlgebraElem)
        obj.terms = terms
        obj.group = self.group
        obj.unit = self.unit if unit is None else unit
        return obj

    def _check_compatible(self, other: "AlgebraElem") -> None:
        if other.group is not self.group:
            raise DomainError("algebra elements over different groups")

    # ─── Constructors ────────────────────────────────────────────
    @classmethod
    def element(cls, group: GroupDesc, g: int, k, coef=1) -> "AlgebraElem":
        k = tuple(k)
        if len(k) != group.dim:
            raise DomainError(f"mode {k} does not live on T^{group.dim}")
        return cls(group, {(g, k): Scalar.of(coef)})

    @classmethod
    def identity(cls, group: GroupDesc, coef=1) -> "AlgebraElem":
        return cls(group, unit=coef)

    def smooth_part(self) -> "AlgebraElem":
        return self._new(dict(self.terms), ZERO)

    def is_zero(self) -> bool:
        return not self.terms and self.unit.is_zero()

    # ─── Linear structure with the unit ──────────────────────────
    def __add__(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check_compatible(other)
        return self._new(accumulate(other.terms.items(), dict(self.terms)), self.unit + other.unit)

    def __sub__(self, other: "AlgebraElem") -> "AlgebraElem":
        return self + (-other)

    def __neg__(self) -> "AlgebraElem":
        return self._new({k: -c for k, c in self.terms.items()}, -self.unit)

    def scale(self, factor) -> "AlgebraElem":
        factor = Scalar.of(factor)
        return self._new({k: c * factor for k, c in self.terms.items() if not (c * factor).is_zero()},
                         self.unit * factor)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        return self.group is other.group and self.terms == other.terms and self.unit == other.unit

    def __hash__(self) -> int:
        return hash((frozenset(self.terms), self.unit))

    # ─── Product ─────────────────────────────────────────────────
    def _basis_product(self, left: AlgebraKey, right: AlgebraKey):
        (g, a), (h, b) = left, right
        if self.group.is_finite:
            phase, image = self.group.act_mode(g, b)
            return phase, (self.group.mul(g, h), add_modes(a, image))
        # inner Haar integral over the circle of e^{tau (g - h + k.v) t}
        inner = GroupFun(self.group, {g - h + self.group.weight(b): ONE})
        if inner.haar_integrate(ZERO).is_zero():
            return None
        return Scalar.of(1), (h, add_modes(a, b))

    def convolve(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check_compatible(other)
        out: Dict[Hashable, Scalar] = {}
        for left, c in self.terms.items():
            for right, d in other.terms.items():
                hit = self._basis_product(left, right)
                if hit is not None:
                    phase, key = hit
                    accumulate([(key, c * d * phase)], out)
        if not self.unit.is_zero():
            accumulate(((k, c * self.unit) for k, c in other.terms.items()), out)
        if not other.unit.is_zero():
            accumulate(((k, c * other.unit) for k, c in self.terms.items()), out)
        return self._new(out, self.unit * other.unit)

    __mul__ = convolve

    # ─── Evaluation ──────────────────────────────────────────────
    def at(self, g: int) -> TorusForm:
        """The 0-form x -> a(x, g) (finite) or the g-mode coefficient (circle), smooth part only."""
        out = TorusForm(self.group.dim)
        for (h, k), c in self.terms.items():
            if h == g:
                out = out + TorusForm.mode(self.group.dim, k, c)
        return out

    def support(self):
        return sorted({g for g, _ in self.terms})

    def to_text(self) -> str:
        parts = []
        if not self.unit.is_zero():
            parts.append(f"{self.unit.to_text()} * 1")
        for (g, k), c in self.sorted_terms():
            label = self.group.label(g) if self.group.is_finite else f"m={g}"
            parts.append(f"{c.to_text()} * [{label}] e[{','.join(str(x) for x in k)}]")
        return "\n".join(parts) or "0"
