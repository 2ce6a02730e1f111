# getzler/chains.py
"""
Equivariant chains at X = 0 for a finite group: functions G^q -> Omega^p(T^n).

A basis key ``(gs, I, k)`` is the delta function at the tuple gs times
e_k dx_I. Chains are normalized: tuples containing the unit vanish. The
Kronecker factor of the vertical B operator is realized by only producing
tuples whose product is the unit.
"""
from fractions import Fraction
from math import factorial
from typing import Dict, Sequence, Tuple

from errors import DomainError
from groups import FiniteGroup
from homology import CylChain
from scalars import LinComb, Scalar, sign
from scalars.lincomb import accumulate
from torus import TorusForm

GetzKey = Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]


class GetzTerms(LinComb):
    """Shared storage of chains and cochains: tuple-indexed torus forms."""

    __slots__ = ("group",)

    def __init__(self, group: FiniteGroup, terms: Dict[GetzKey, Scalar] = None):
        super().__init__(terms)
        self.group = group

    def _new(self, terms):
        obj = object.__new__(type(self))
        obj.terms = terms
        obj.group = self.group
        self._copy_extra(obj)
        return obj

    def _copy_extra(self, obj) -> None:
        pass

    def _check_compatible(self, other: "GetzTerms") -> None:
        if other.group is not self.group or type(other) is not type(self):
            raise DomainError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    @property
    def dim(self) -> int:
        return self.group.dim

    def embed(self, gs: Sequence[int], form: TorusForm, coef=1) -> "GetzTerms":
        gs = tuple(gs)
        coef = Scalar.of(coef)
        return self._new(accumulate(((gs, I, k), c * coef) for (I, k), c in form.terms.items()))

    def form_at(self, gs: Sequence[int]) -> TorusForm:
        gs = tuple(gs)
        return TorusForm(self.dim, {(I, k): c for (h, I, k), c in self.terms.items() if h == gs})

    def tuples(self):
        return sorted({key[0] for key in self.terms})

    def bidegrees(self):
        return sorted({(len(I), len(gs)) for gs, I, _ in self.terms})

    def bidegree_part(self, p: int, q: int) -> "GetzTerms":
        return self.filter_keys(lambda key: len(key[1]) == p and len(key[0]) == q)

    def normalize(self) -> "GetzTerms":
        return self.filter_keys(lambda key: 0 not in key[0])

    def _per_key(self, f) -> "GetzTerms":
        """f(gs, form) returns a GetzTerms; summed over the tuples present."""
        out = self.zero()
        for gs in self.tuples():
            out = out + f(gs, self.form_at(gs))
        return out

    def _per_degree(self, f) -> "GetzTerms":
        """f(gs, p, form) on each homogeneous piece."""
        def apply(gs, form):
            out = self.zero()
            for p in form.degrees():
                out = out + f(gs, p, form.degree_part(p))
            return out

        return self._per_key(apply)

    def act(self, g: int, form: TorusForm) -> TorusForm:
        return self.group.act(g, form)

    def to_text(self) -> str:
        blocks = []
        for gs in self.tuples():
            label = ",".join(self.group.label(g) for g in gs) or "()"
            body = self.form_at(gs).to_text().replace("\n", "\n  ")
            blocks.append(f"({label})\n  {body}")
        return "\n".join(blocks) or "0"


class GetzChain(GetzTerms):
    __slots__ = ()

    def __init__(self, group: FiniteGroup, terms: Dict[GetzKey, Scalar] = None):
        if not group.is_finite:
            raise DomainError("equivariant chains at X = 0 are built over finite groups")
        super().__init__(group, terms)

    def b_h(self) -> "GetzChain":
        """iota_X at X = 0."""
        return self.zero()

    def B_h(self) -> "GetzChain":
        """int e^{-tX} d at X = 0 is d."""
        return self.map_terms(lambda key, c: (
            ((key[0],) + fk, d) for fk, d in TorusForm(self.dim, {key[1:]: c}).d().terms.items()
        ))

    def b_v(self) -> "GetzChain":
        group = self.group

        def apply(h, p, form):
            q = len(h)
            out = self.zero()
            if q == 0:
                return out
            out = out + self.embed(h[1:], form, sign(p))
            for i in range(1, q):
                merged = h[:i - 1] + (group.mul(h[i - 1], h[i]),) + h[i + 1:]
                out = out + self.embed(merged, form, sign(i + p))
            out = out + self.embed(h[:q - 1], self.act(h[q - 1], form), sign(p + q))
            return out

        return self._per_degree(apply).normalize()

    def B_v(self) -> "GetzChain":
        group = self.group

        def apply(h, p, form):
            q = len(h)
            out = self.zero()
            for i in range(q + 1):
                head, tail = h[q - i:], h[:q - i]
                head_product, tail_product = group.product(head), group.product(tail)
                x = group.mul(group.inv(head_product), group.inv(tail_product))
                gs = head + (x,) + tail
                moved = self.act(group.inv(group.mul(x, tail_product)), form)
                out = out + self.embed(gs, moved, sign(i * q + p))
            return out

        return self._per_degree(apply).normalize()

    def total_differential(self) -> "GetzChain":
        return (self.b_v() + self.B_h() + self.B_v()).normalize()


def hkr(dim: int, modes: Sequence[Tuple[int, ...]], coef=1) -> TorusForm:
    """(1/p!) e_{b_0} de_{b_1} ^ ... ^ de_{b_p}."""
    form = TorusForm.mode(dim, modes[0], coef)
    for b in modes[1:]:
        form = form.wedge(TorusForm.mode(dim, b).d())
    p = len(modes) - 1
    return form.scale(Fraction(1, factorial(p))) if p > 1 else form


def psi3(x: CylChain) -> GetzChain:
    """Keep the terms with product e, drop g_0 and apply HKR to the modes."""
    group = x.group
    out = GetzChain(group)
    for (gs, bs), c in x.terms.items():
        if group.product(gs) != 0:
            continue
        out = out + out.embed(gs[1:], hkr(group.dim, bs, c))
    return out.normalize()
