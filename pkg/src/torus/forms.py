# torus/forms.py
"""
Differential forms on the torus T^n = R^n / Z^n with finitely many Fourier modes.

A basis key ``(I, k)`` stands for e^{2 pi i k.x} dx_I with I a strictly
increasing tuple of 0-based coordinate indices and k an integer mode vector.
2 pi i itself is the formal symbol tau carried by the Scalar coefficients, so
d(e_k) = sum_j tau k_j e_k dx_j exactly. The volume of T^n is 1.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from errors import DomainError, ValidationError
from scalars import LinComb, Scalar, parse_scalar
from scalars.lincomb import accumulate

logger = logging.getLogger(__name__)

Indices = Tuple[int, ...]
Mode = Tuple[int, ...]
FormKey = Tuple[Indices, Mode]

_TAU = Scalar.tau()


def merge_indices(left: Indices, right: Indices) -> Optional[Tuple[int, Indices]]:
    """Sign and sorted union of dx_left ^ dx_right, None when they overlap."""
    if not right:
        return 1, left
    if not left:
        return 1, right
    if set(left) & set(right):
        return None
    inversions = sum(1 for j in right for i in left if i > j)
    return (-1 if inversions % 2 else 1), tuple(sorted(left + right))


def add_modes(k: Mode, l: Mode) -> Mode:
    return tuple(a + b for a, b in zip(k, l))


def pairing(v: Sequence[Fraction], k: Mode):
    """k . v, kept as an int when v is integral."""
    total = sum(Fraction(a) * b for a, b in zip(v, k))
    return int(total) if total.denominator == 1 else total


@dataclass(frozen=True)
class TangentVector:
    """Constant vector field on T^n."""

    components: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable) -> "TangentVector":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def dim(self) -> int:
        return len(self.components)

    def pair(self, k: Mode):
        return pairing(self.components, k)

    def is_zero(self) -> bool:
        return not any(self.components)


class TorusForm(LinComb):
    __slots__ = ("dim",)

    def __init__(self, dim: int, terms: Dict[FormKey, Scalar] = None):
        super().__init__(terms)
        self.dim = dim

    def _new(self, terms):
        obj = object.__new__(TorusForm)
        obj.terms = terms
        obj.dim = self.dim
        return obj

    def _check_compatible(self, other: "TorusForm") -> None:
        if other.dim != self.dim:
            raise DomainError(f"dimension mismatch: T^{self.dim} vs T^{other.dim}")

    # ─── Constructors ────────────────────────────────────────────
    @classmethod
    def zero_form(cls, dim: int) -> "TorusForm":
        return cls(dim)

    @classmethod
    def mode(cls, dim: int, k: Sequence[int], coef=1) -> "TorusForm":
        """coef * e^{tau k.x}."""
        k = tuple(k)
        if len(k) != dim:
            raise DomainError(f"mode {k} does not live on T^{dim}")
        return cls(dim, {((), k): Scalar.of(coef)})

    @classmethod
    def constant(cls, dim: int, coef=1) -> "TorusForm":
        return cls.mode(dim, (0,) * dim, coef)

    @classmethod
    def dx(cls, dim: int, *indices: int, coef=1, k: Sequence[int] = None) -> "TorusForm":
        """coef * e_k dx_{i1} ^ ... ^ dx_{ip}, indices 0-based in any order."""
        form = cls.mode(dim, k if k is not None else (0,) * dim, coef)
        for i in indices:
            if not 0 <= i < dim:
                raise DomainError(f"dx index {i} out of range on T^{dim}")
            form = form.wedge(cls(dim, {((i,), (0,) * dim): Scalar.of(1)}))
        return form

    # ─── Grading ─────────────────────────────────────────────────
    def degrees(self) -> List[int]:
        return sorted({len(I) for I, _ in self.terms})

    def degree(self) -> int:
        """Form degree of a homogeneous form (0 for the zero form)."""
        degrees = self.degrees()
        if len(degrees) > 1:
            raise DomainError(f"form is not homogeneous: degrees {degrees}")
        return degrees[0] if degrees else 0

    def degree_part(self, p: int) -> "TorusForm":
        return self.filter_keys(lambda key: len(key[0]) == p)

    def graded_sign(self) -> "TorusForm":
        """(-1)^{|w|} w, termwise."""
        return self._new({key: (-c if len(key[0]) % 2 else c) for key, c in self.terms.items()})

    def modes(self) -> List[Mode]:
        return sorted({k for _, k in self.terms})

    # ─── Exterior calculus ───────────────────────────────────────
    def wedge(self, other: "TorusForm") -> "TorusForm":
        self._check_compatible(other)
        out: Dict[FormKey, Scalar] = {}
        for (I, k), a in self.terms.items():
            for (J, l), b in other.terms.items():
                merged = merge_indices(I, J)
                if merged is None:
                    continue
                s, K = merged
                coef = a * b
                accumulate([((K, add_modes(k, l)), -coef if s < 0 else coef)], out)
        return self._new(out)

    def d(self) -> "TorusForm":
        out: Dict[FormKey, Scalar] = {}
        for (I, k), c in self.terms.items():
            for j, kj in enumerate(k):
                if not kj or j in I:
                    continue
                before = sum(1 for i in I if i < j)
                coef = c * _TAU * kj
                K = tuple(sorted(I + (j,)))
                accumulate([((K, k), -coef if before % 2 else coef)], out)
        return self._new(out)

    def contract(self, v: TangentVector) -> "TorusForm":
        """Interior product with a constant vector field."""
        out: Dict[FormKey, Scalar] = {}
        for (I, k), c in self.terms.items():
            for s, i in enumerate(I):
                vi = v.components[i]
                if not vi:
                    continue
                coef = c * vi
                accumulate([((I[:s] + I[s + 1:], k), -coef if s % 2 else coef)], out)
        return self._new(out)

    def lie(self, v: TangentVector) -> "TorusForm":
        """Lie derivative along a constant field: tau (k.v) on mode k."""
        return self.map_terms(lambda key, c: [(key, c * _TAU * v.pair(key[1]))])

    def times_tau(self, power: int = 1) -> "TorusForm":
        return self._new({key: c.times_tau(power) for key, c in self.terms.items()})

    def weight_split(self, v: Sequence[Fraction], offset=0) -> Dict[object, "TorusForm"]:
        """Decompose by the weight k.v + offset of each mode."""
        parts: Dict[object, Dict[FormKey, Scalar]] = {}
        for (I, k), c in self.terms.items():
            parts.setdefault(pairing(v, k) + offset, {})[(I, k)] = c
        return {w: self._new(terms) for w, terms in parts.items()}

    # ─── Integration ─────────────────────────────────────────────
    def integrate_top(self) -> Scalar:
        """Zero-mode coefficient of dx_1 ^ ... ^ dx_n; lower degrees integrate to 0."""
        return self.coefficient((tuple(range(self.dim)), (0,) * self.dim))

    # ─── Text ────────────────────────────────────────────────────
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for (I, k), c in sorted(self.terms.items(), key=lambda kc: (len(kc[0][0]), kc[0][0], kc[0][1])):
            coef = c.to_text()
            if " + " in coef:
                coef = f"({coef})"
            modes = ",".join(str(x) for x in k)
            dx = ",".join(str(i + 1) for i in I)
            lines.append(f"{coef} * e[{modes}] * dx{{{dx}}}")
        return "\n".join(lines)

    __str__ = to_text


_LINE = re.compile(r"^(?P<coef>.+) \* e\[(?P<modes>[-\d,\s]*)\] \* dx\{(?P<dx>[\d,\s]*)\}$")


def parse_form(dim: int, text: str) -> TorusForm:
    """Inverse of TorusForm.to_text."""
    form = TorusForm(dim)
    text = text.strip()
    if text in ("", "0"):
        return form
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        match = _LINE.match(line)
        if not match:
            raise ValidationError(f"cannot parse form line {line!r}")
        modes = tuple(int(x) for x in match.group("modes").split(",") if x.strip())
        indices = [int(x) - 1 for x in match.group("dx").split(",") if x.strip()]
        if len(modes) != dim:
            raise ValidationError(f"form line {line!r} does not live on T^{dim}")
        form = form + TorusForm.dx(dim, *indices, coef=parse_scalar(match.group("coef")), k=modes)
    return form
