# getzler/cochains.py
"""
Equivariant cochains: forms-valued functions of q group slots.

GetzCochain    finite groups at X = 0, key ``(gs, I, k)``; iota and the
               inverse-flow derivative vanish there.
CircleCochain  circle, trigonometric polynomials in the slots: key
               ``(ms, j, I, k)`` is e^{tau (m_1 g_1 + ... + m_q g_q)} u^j e_k dx_I,
               truncated at u-order J.

Normalized cochains vanish as soon as one slot is the unit. The unreduced
variant keeps those values.
"""
import logging
from typing import Dict, Optional, Tuple

from errors import DomainError, UnsupportedOperation
from groups import CircleGroup, FiniteGroup
from scalars import LinComb, Scalar, sign
from scalars.lincomb import accumulate
from torus import TorusForm

from .chains import GetzKey, GetzTerms

logger = logging.getLogger(__name__)


class GetzCochain(GetzTerms):
    __slots__ = ("normalized",)

    def __init__(self, group: FiniteGroup, terms: Dict[GetzKey, Scalar] = None, normalized: bool = True):
        if not group.is_finite:
            raise DomainError("cochains at X = 0 are built over finite groups")
        super().__init__(group, terms)
        self.normalized = normalized
        if normalized:
            self.terms = {key: c for key, c in self.terms.items() if 0 not in key[0]}

    def _copy_extra(self, obj) -> None:
        obj.normalized = self.normalized

    def _check_compatible(self, other: "GetzCochain") -> None:
        super()._check_compatible(other)
        if other.normalized != self.normalized:
            raise DomainError("cannot combine normalized and unreduced cochains")

    def unreduced(self) -> "GetzCochain":
        return GetzCochain(self.group, dict(self.terms), normalized=False)

    def _finish(self, out: "GetzCochain") -> "GetzCochain":
        return out.normalize() if self.normalized else out

    # ─── Differentials ───────────────────────────────────────────
    def iota(self) -> "GetzCochain":
        return self.zero()

    def iota_bar(self) -> "GetzCochain":
        return self.zero()

    def d(self) -> "GetzCochain":
        """(-1)^q d on the form part."""
        def apply(key, c):
            gs, I, k = key
            s = sign(len(gs))
            return [((gs,) + fk, e * s) for fk, e in TorusForm(self.dim, {(I, k): c}).d().terms.items()]

        return self.map_terms(apply)

    def d_bar(self) -> "GetzCochain":
        group = self.group
        elements = list(group.elements())

        def apply(h, form):
            q = len(h)
            out = self.zero()
            for x in elements:
                out = out + self.embed((x,) + h, form)
            for i in range(1, q + 1):
                for y in elements:
                    split = h[:i - 1] + (y, group.mul(group.inv(y), h[i - 1])) + h[i:]
                    out = out + self.embed(split, form, sign(i))
            for x in elements:
                out = out + self.embed(h + (x,), self.act(group.inv(x), form), sign(q + 1))
            return out

        return self._finish(self._per_key(apply))

    def total_differential(self) -> "GetzCochain":
        return self.iota() + self.iota_bar() + self.d() + self.d_bar()

    # ─── Cyclic structure ────────────────────────────────────────
    def cyclic_operator(self) -> "GetzCochain":
        """(t a)(g_1..g_q) = g_q^* a((g_1..g_q)^-1, g_1..g_{q-1}); identity for q = 0."""
        group = self.group
        if not group.is_abelian():
            raise UnsupportedOperation("the cyclic-form criterion is checked for abelian groups")

        def apply(s, form):
            if not s:
                return self.embed(s, form)
            last = group.inv(group.product(s))
            return self.embed(s[1:] + (last,), self.act(last, form))

        return self._finish(self._per_key(apply))

    def has_cyclic_form(self) -> bool:
        """t^* a = (-1)^q a on every bidegree."""
        rotated = self.cyclic_operator()
        expected = self.map_terms(lambda key, c: [(key, c * sign(len(key[0])))])
        return rotated == expected


def is_cyclically_normalized(alpha: GetzCochain, include_empty: bool = False) -> Tuple[bool, Optional[tuple]]:
    """
    Vanishing on tuples with product e. The empty tuple has product e; it is
    only checked when include_empty is set. Returns (ok, witness tuple).
    """
    group = alpha.group
    for gs in alpha.tuples():
        if not gs and not include_empty:
            continue
        if group.product(gs) == 0:
            logger.debug(f"cyclic normalization fails at {gs}")
            return False, gs
    return True, None


class CircleCochain(LinComb):
    __slots__ = ("group", "order")

    def __init__(self, group: CircleGroup, order: int, terms: Dict = None):
        if group.is_finite:
            raise DomainError("circle cochains need the circle group")
        if order < 0:
            raise DomainError("jet order must be nonnegative")
        super().__init__({key: c for key, c in (terms or {}).items() if key[1] <= order})
        self.group = group
        self.order = order

    def _new(self, terms):
        obj = object.__new__(CircleCochain)
        obj.terms = {key: c for key, c in terms.items() if key[1] <= self.order}
        obj.group = self.group
        obj.order = self.order
        return obj

    def _check_compatible(self, other: "CircleCochain") -> None:
        if other.group is not self.group or other.order != self.order:
            raise DomainError("circle cochains of different actions or orders")

    @property
    def dim(self) -> int:
        return self.group.dim

    @classmethod
    def single(cls, group: CircleGroup, order: int, ms, j: int, form: TorusForm) -> "CircleCochain":
        ms = tuple(ms)
        return cls(group, order, accumulate(((ms, j, I, k), c) for (I, k), c in form.terms.items()))

    def _forms(self, key, c) -> TorusForm:
        return TorusForm(self.dim, {key[2:]: c})

    def iota(self) -> "CircleCochain":
        """(-1)^q u iota_v."""
        v = self.group.vector

        def apply(key, c):
            ms, j = key[:2]
            s = sign(len(ms))
            return [((ms, j + 1) + fk, e * s) for fk, e in self._forms(key, c).contract(v).terms.items()]

        return self.map_terms(apply)

    def iota_bar(self) -> "CircleCochain":
        """Derivative along the inverse flow in each slot: removes slot i with -tau u m_i (-1)^i."""
        def apply(key, c):
            ms, j, I, k = key
            out = []
            for i, m in enumerate(ms):
                if m:
                    out.append(((ms[:i] + ms[i + 1:], j + 1, I, k), c.times_tau(1) * (-m * sign(i))))
            return out

        return self.map_terms(apply)

    def d(self) -> "CircleCochain":
        def apply(key, c):
            ms, j = key[:2]
            s = sign(len(ms))
            return [((ms, j) + fk, e * s) for fk, e in self._forms(key, c).d().terms.items()]

        return self.map_terms(apply)

    def d_bar(self) -> "CircleCochain":
        def apply(key, c):
            ms, j, I, k = key
            q = len(ms)
            out = [(((0,) + ms, j, I, k), c)]
            for i in range(1, q + 1):
                out.append(((ms[:i] + (ms[i - 1],) + ms[i:], j, I, k), c * sign(i)))
            out.append(((ms + (-self.group.weight(k),), j, I, k), c * sign(q + 1)))
            return out

        return self.map_terms(apply)

    def total_differential(self) -> "CircleCochain":
        return self.iota() + self.iota_bar() + self.d() + self.d_bar()

    def to_text(self) -> str:
        lines = []
        for (ms, j, I, k), c in self.sorted_terms():
            dx = ",".join(str(i + 1) for i in I)
            lines.append(f"{c.to_text()} * exp[{','.join(str(m) for m in ms)}] * u^{j} * e[{','.join(str(x) for x in k)}] * dx{{{dx}}}")
        return "\n".join(lines) or "0"
