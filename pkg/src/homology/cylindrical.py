# homology/cylindrical.py
"""
The cylindrical complex of a finite group acting on Fourier modes of the torus.

A basis key ``(gs, bs)`` holds q+1 group slots gs = (g_0..g_q) and p+1 torus
modes bs = (b_0..b_p), giving bidegree (p, q). The horizontal structure acts on
the modes, the vertical structure on the group slots. Gamma is the product of
all group slots.

Chains are kept in the normalized quotient: ``normalize`` drops keys with a
zero mode in b_1..b_p or a unit in g_1..g_q, ``normalize_diagonal`` drops
diagonal keys degenerate in a common position.
"""
import logging
from typing import Dict, Tuple

from errors import DomainError, IndexOutOfRange
from groups import FiniteGroup
from scalars import LinComb, Scalar, sign
from scalars.lincomb import accumulate
from torus import add_modes

logger = logging.getLogger(__name__)

Mode = Tuple[int, ...]
CylKey = Tuple[Tuple[int, ...], Tuple[Mode, ...]]


def bidegree(key: CylKey) -> Tuple[int, int]:
    gs, bs = key
    return len(bs) - 1, len(gs) - 1


class CylChain(LinComb):
    __slots__ = ("group",)

    def __init__(self, group: FiniteGroup, terms: Dict[CylKey, Scalar] = None):
        if not group.is_finite:
            raise DomainError("cylindrical chains are built over finite groups")
        super().__init__(terms)
        self.group = group

    def _new(self, terms):
        obj = object.__new__(CylChain)
        obj.terms = terms
        obj.group = self.group
        return obj

    def _check_compatible(self, other: "CylChain") -> None:
        if other.group is not self.group:
            raise DomainError("cylindrical chains over different groups")

    @classmethod
    def single(cls, group: FiniteGroup, gs, bs, coef=1) -> "CylChain":
        key = (tuple(gs), tuple(tuple(b) for b in bs))
        return cls(group, {key: Scalar.of(coef)})

    def bidegrees(self):
        return sorted({bidegree(key) for key in self.terms})

    def bidegree_part(self, p: int, q: int) -> "CylChain":
        return self.filter_keys(lambda key: bidegree(key) == (p, q))

    @property
    def zero_mode(self) -> Mode:
        return (0,) * self.group.dim

    # ─── Normalization ───────────────────────────────────────────
    def normalize(self) -> "CylChain":
        zero = self.zero_mode
        return self.filter_keys(
            lambda key: zero not in key[1][1:] and 0 not in key[0][1:]
        )

    def normalize_diagonal(self) -> "CylChain":
        zero = self.zero_mode

        def keep(key):
            gs, bs = key
            return not any(gs[j] == 0 and bs[j] == zero for j in range(1, len(gs)))

        return self.filter_keys(keep)

    # ─── Helpers ─────────────────────────────────────────────────
    def _act_all(self, g: int, bs) -> Tuple[Scalar, Tuple[Mode, ...]]:
        coef = Scalar.of(1)
        out = []
        for b in bs:
            phase, image = self.group.act_mode(g, b)
            coef = coef * phase
            out.append(image)
        return coef, tuple(out)

    def _gamma(self, gs) -> int:
        return self.group.product(gs)

    def _on_keys(self, f) -> "CylChain":
        return self.map_terms(lambda key, c: [(k, c * phase) for k, phase in f(*key)])

    # ─── Horizontal structure ────────────────────────────────────
    def d_h(self, i: int) -> "CylChain":
        def face(gs, bs):
            p = len(bs) - 1
            if p == 0 or not 0 <= i <= p:
                raise IndexOutOfRange(f"horizontal face d_{i} in degree p={p}")
            if i < p:
                return [((gs, bs[:i] + (add_modes(bs[i], bs[i + 1]),) + bs[i + 2:]), Scalar.of(1))]
            coef, (moved,) = self._act_all(self.group.inv(self._gamma(gs)), [bs[p]])
            return [((gs, (add_modes(moved, bs[0]),) + bs[1:p]), coef)]

        return self._on_keys(face)

    def s_h(self, i: int) -> "CylChain":
        zero = self.zero_mode

        def degeneracy(gs, bs):
            if not 0 <= i < len(bs):
                raise IndexOutOfRange(f"horizontal degeneracy s_{i} in degree p={len(bs) - 1}")
            return [((gs, bs[:i + 1] + (zero,) + bs[i + 1:]), Scalar.of(1))]

        return self._on_keys(degeneracy)

    def t_h(self) -> "CylChain":
        def rotate(gs, bs):
            p = len(bs) - 1
            coef, (moved,) = self._act_all(self.group.inv(self._gamma(gs)), [bs[p]])
            return [((gs, (moved,) + bs[:p]), coef)]

        return self._on_keys(rotate)

    def c_h(self) -> "CylChain":
        """Extra degeneracy: a zero mode in front."""
        zero = self.zero_mode
        return self._on_keys(lambda gs, bs: [((gs, (zero,) + bs), Scalar.of(1))])

    # ─── Vertical structure ──────────────────────────────────────
    def d_v(self, i: int) -> "CylChain":
        def face(gs, bs):
            q = len(gs) - 1
            if q == 0 or not 0 <= i <= q:
                raise IndexOutOfRange(f"vertical face d_{i} in degree q={q}")
            if i < q:
                return [((gs[:i] + (self.group.mul(gs[i], gs[i + 1]),) + gs[i + 2:], bs), Scalar.of(1))]
            coef, moved = self._act_all(gs[q], bs)
            return [(((self.group.mul(gs[q], gs[0]),) + gs[1:q], moved), coef)]

        return self._on_keys(face)

    def s_v(self, i: int) -> "CylChain":
        def degeneracy(gs, bs):
            if not 0 <= i < len(gs):
                raise IndexOutOfRange(f"vertical degeneracy s_{i} in degree q={len(gs) - 1}")
            return [((gs[:i + 1] + (0,) + gs[i + 1:], bs), Scalar.of(1))]

        return self._on_keys(degeneracy)

    def t_v(self) -> "CylChain":
        def rotate(gs, bs):
            q = len(gs) - 1
            coef, moved = self._act_all(gs[q], bs)
            return [(((gs[q],) + gs[:q], moved), coef)]

        return self._on_keys(rotate)

    def c_v(self) -> "CylChain":
        return self._on_keys(lambda gs, bs: [(((0,) + gs, bs), Scalar.of(1))])

    # ─── Bicomplex differentials ─────────────────────────────────
    def _per_term(self, f) -> "CylChain":
        out: Dict = {}
        for key, c in self.terms.items():
            p, q = bidegree(key)
            accumulate(f(self._new({key: c}), p, q).terms.items(), out)
        return self._new(out)

    def b_h(self) -> "CylChain":
        def apply(x, p, q):
            out = x.zero()
            if p == 0:
                return out
            for i in range(p + 1):
                out = out + x.d_h(i).scale(sign(i))
            return out

        return self._per_term(apply)

    def b_v(self) -> "CylChain":
        def apply(x, p, q):
            out = x.zero()
            if q == 0:
                return out
            for i in range(q + 1):
                out = out + x.d_v(i).scale(sign(i + p))
            return out

        return self._per_term(apply)

    def B_h(self) -> "CylChain":
        def apply(x, p, q):
            out = x.zero()
            for i in range(p + 1):
                out = out + x.c_h().scale(sign(i * p))
                x = x.t_h()
            return out

        return self._per_term(apply)

    def B_v(self) -> "CylChain":
        def apply(x, p, q):
            out = x.zero()
            for i in range(q + 1):
                out = out + x.c_v().scale(sign(i * q))
                x = x.t_v()
            for _ in range(p + 1):
                out = out.t_h()
            return out.scale(sign(p))

        return self._per_term(apply)

    def T_h(self) -> "CylChain":
        """(t_h)^{p+1}."""
        return self._per_term(lambda x, p, q: _repeat(CylChain.t_h, p + 1, x))

    def T_v(self) -> "CylChain":
        return self._per_term(lambda x, p, q: _repeat(CylChain.t_v, q + 1, x))

    def total_b(self) -> "CylChain":
        return (self.b_h() + self.b_v()).normalize()

    def total_B(self) -> "CylChain":
        return (self.B_h() + self.B_v()).normalize()

    def total_differential(self) -> "CylChain":
        return (self.b_h() + self.b_v() + self.B_h() + self.B_v()).normalize()

    # ─── Diagonal ────────────────────────────────────────────────
    def diagonal_degree(self, key: CylKey) -> int:
        p, q = bidegree(key)
        if p != q:
            raise DomainError(f"bidegree ({p}, {q}) is off the diagonal")
        return p

    def d_diag(self, i: int) -> "CylChain":
        return self.d_v(i).d_h(i)

    def t_diag(self) -> "CylChain":
        return self.t_v().t_h()

    def b_diag(self) -> "CylChain":
        out: Dict = {}
        for key, c in self.terms.items():
            n = self.diagonal_degree(key)
            x = self._new({key: c})
            for i in range(n + 1 if n else 0):
                accumulate(x.d_diag(i).scale(sign(i)).terms.items(), out)
        return self._new(out).normalize_diagonal()

    def B_diag(self) -> "CylChain":
        out: Dict = {}
        for key, c in self.terms.items():
            n = self.diagonal_degree(key)
            x = self._new({key: c})
            for i in range(n + 1):
                accumulate(x.c_v().c_h().scale(sign(i * n)).terms.items(), out)
                x = x.t_diag()
        return self._new(out).normalize_diagonal()


def _repeat(f, times: int, x):
    for _ in range(times):
        x = f(x)
    return x
