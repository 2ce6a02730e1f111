# getzler/jets.py
"""
Circle actions in jet mode.

Cylindrical (p, 0) chains over the circle carry a Fourier mode m in the single
group slot and torus modes b_0..b_p: key ``(m, bs)``. Equivariant chains keep
u-jets up to a fixed order J: key ``(j, I, k)`` is u^j e_k dx_I, with the
powers of tau folded into the coefficient.
"""
import logging
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from errors import DomainError, UnsupportedOperation
from groups import CircleGroup
from jlo.simplex import ascending_simplex_integrate
from scalars import LinComb, Scalar, sign
from scalars.lincomb import accumulate
from torus import TorusForm, add_modes

logger = logging.getLogger(__name__)

Mode = Tuple[int, ...]


class CircleCylChain(LinComb):
    __slots__ = ("group",)

    def __init__(self, group: CircleGroup, terms: Dict = None):
        if group.is_finite:
            raise DomainError("circle chains need the circle group")
        super().__init__(terms)
        self.group = group

    def _new(self, terms):
        obj = object.__new__(CircleCylChain)
        obj.terms = terms
        obj.group = self.group
        return obj

    def _check_compatible(self, other: "CircleCylChain") -> None:
        if other.group is not self.group:
            raise DomainError("circle chains over different actions")

    @classmethod
    def single(cls, group: CircleGroup, m: int, bs: Sequence[Sequence[int]], coef=1) -> "CircleCylChain":
        bs = tuple(tuple(b) for b in bs)
        if any(len(b) != group.dim for b in bs):
            raise DomainError(f"modes {bs} do not live on T^{group.dim}")
        return cls(group, {(m, bs): Scalar.of(coef)})

    def _weight(self, b: Mode) -> int:
        return self.group.weight(b)

    def t_h(self) -> "CircleCylChain":
        def rotate(key, c):
            m, bs = key
            return [((m - self._weight(bs[-1]), (bs[-1],) + bs[:-1]), c)]

        return self.map_terms(rotate)

    def c_h(self) -> "CircleCylChain":
        zero = (0,) * self.group.dim
        return self.map_terms(lambda key, c: [((key[0], (zero,) + key[1]), c)])

    def b_h(self) -> "CircleCylChain":
        def faces(key, c):
            m, bs = key
            p = len(bs) - 1
            out = []
            for i in range(p):
                out.append(((m, bs[:i] + (add_modes(bs[i], bs[i + 1]),) + bs[i + 2:]), c * sign(i)))
            if p:
                wrapped = (add_modes(bs[p], bs[0]),) + bs[1:p]
                out.append(((m - self._weight(bs[p]), wrapped), c * sign(p)))
            return out

        return self.map_terms(faces)

    def B_h(self) -> "CircleCylChain":
        out: Dict = {}
        for x in self.split():
            p = len(next(iter(x.terms))[1]) - 1
            for i in range(p + 1):
                accumulate(x.c_h().scale(sign(i * p)).terms.items(), out)
                x = x.t_h()
        return self._new(out)


class JetChain(LinComb):
    """Equivariant (p, 0) chains of the circle, truncated at u-order J."""

    __slots__ = ("group", "order")

    def __init__(self, group: CircleGroup, order: int, terms: Dict = None):
        if order < 0:
            raise DomainError("jet order must be nonnegative")
        super().__init__({key: c for key, c in (terms or {}).items() if key[0] <= order})
        self.group = group
        self.order = order

    def _new(self, terms):
        obj = object.__new__(JetChain)
        obj.terms = {key: c for key, c in terms.items() if key[0] <= self.order}
        obj.group = self.group
        obj.order = self.order
        return obj

    def _check_compatible(self, other: "JetChain") -> None:
        if other.group is not self.group or other.order != self.order:
            raise DomainError("jet chains of different actions or orders")

    @property
    def dim(self) -> int:
        return self.group.dim

    def jet(self, j: int) -> TorusForm:
        return TorusForm(self.dim, {(I, k): c for (i, I, k), c in self.terms.items() if i == j})

    def b_h(self) -> "JetChain":
        """u iota_v."""
        v = self.group.vector

        def contract(key, c):
            j, I, k = key
            form = TorusForm(self.dim, {(I, k): c}).contract(v)
            return [((j + 1,) + fk, d) for fk, d in form.terms.items()]

        return self.map_terms(contract)

    def B_h(self) -> "JetChain":
        """sum_a (-tau u w)^a / (a+1)! d, w the weight of the differentiated term."""
        def apply(key, c):
            j, I, k = key
            out = []
            for (I2, k2), d in TorusForm(self.dim, {(I, k): c}).d().terms.items():
                w = self.group.weight(k2)
                for a in range(self.order - j + 1):
                    coef = Fraction((-w) ** a, factorial(a + 1))
                    if coef:
                        out.append(((j + a, I2, k2), d.times_tau(a) * coef))
            return out

        return self.map_terms(apply)

    def b_v(self) -> "JetChain":
        return self.zero()

    def B_v(self) -> "JetChain":
        raise UnsupportedOperation("vertical B on the circle produces delta-singular terms")


def series_coefficients(m: int, weights: Sequence[int], order: int) -> List[Fraction]:
    """
    Coefficients of (tau u)^j, j <= order, in
    e^{m tau u} int_{0 <= t_1 <= ... <= t_p <= 1} exp(-tau u sum t_i w_i).
    """
    p = len(weights)
    integrals = []
    for j in range(order + 1):
        poly: Dict[Tuple[int, ...], Fraction] = {(0,) * p: Fraction(1)}
        for _ in range(j):
            nxt: Dict[Tuple[int, ...], Fraction] = {}
            for exps, c in poly.items():
                for i, w in enumerate(weights):
                    if not w:
                        continue
                    e = exps[:i] + (exps[i] + 1,) + exps[i + 1:]
                    nxt[e] = nxt.get(e, Fraction(0)) + c * w
            poly = nxt
        if p:
            value = sum((c * ascending_simplex_integrate(e) for e, c in poly.items()), Fraction(0))
        else:
            value = Fraction(int(j == 0))
        integrals.append(value * Fraction(sign(j), factorial(j)))
    return [
        sum((Fraction(m ** a, factorial(a)) * integrals[j - a] for a in range(j + 1)), Fraction(0))
        for j in range(order + 1)
    ]


def psi3_circle(x: CircleCylChain, order: int) -> JetChain:
    """HKR_X with the jet expansion of e^{-t_i X} on (p, 0) chains."""
    group = x.group
    dim = group.dim
    out: Dict = {}
    for (m, bs), c in x.terms.items():
        form = TorusForm.mode(dim, bs[0])
        for b in bs[1:]:
            form = form.wedge(TorusForm.mode(dim, b).d())
        coefficients = series_coefficients(m, [group.weight(b) for b in bs[1:]], order)
        for j, s in enumerate(coefficients):
            if not s:
                continue
            accumulate((((j, I, k), f.times_tau(j) * c * s) for (I, k), f in form.terms.items()), out)
    return JetChain(group, order, out)
