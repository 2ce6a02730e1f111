# harness/sampling.py
"""
Seeded generation of check inputs.

Every check draws from its own random.Random seeded by "<seed>:<check id>", so
adding or reordering checks never changes the inputs of another check and
concurrent execution stays deterministic. Coefficients come from a small fixed
set; modes are bounded by the scenario band.
"""
import random
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence

from bundle import EndForm
from errors import UnsupportedOperation
from groups import AlgebraElem
from homology import BarChain, CylChain
from getzler import CircleCochain, CircleCylChain, GetzChain, GetzCochain
from scalars import Scalar
from torus import TangentVector, TorusForm

COEFFICIENTS = (1, -1, 2, -2, 3, Fraction(1, 2), Fraction(-1, 3))


class Sampler:
    def __init__(self, scenario, seed: int, check_id: str):
        self.scenario = scenario
        self.group = scenario.group
        self.dim = scenario.dim
        self.band = scenario.band
        self.rng = random.Random(f"{seed}:{check_id}")

    # ─── Scalars and modes ───────────────────────────────────────
    def coefficient(self) -> Scalar:
        """A small rational, times a random N-th root of unity for conductor N > 1."""
        value = Scalar.of(self.rng.choice(COEFFICIENTS))
        n = self.scenario.conductor
        if n > 1:
            value = value * Scalar.zeta(n, self.rng.randrange(n))
        return value

    def integer(self, low: int, high: int) -> int:
        return self.rng.randint(low, high)

    def choice(self, values: Sequence):
        return self.rng.choice(list(values))

    def mode(self, band: Optional[int] = None) -> tuple:
        band = self.band if band is None else band
        return tuple(self.rng.randint(-band, band) for _ in range(self.dim))

    def nonzero_mode(self) -> tuple:
        if not self.dim or not self.band:
            return self.mode()
        while True:
            k = self.mode()
            if any(k):
                return k

    def indices(self, degree: int) -> tuple:
        return tuple(sorted(self.rng.sample(range(self.dim), degree)))

    def vector(self) -> TangentVector:
        return TangentVector.of(self.rng.randint(-2, 2) for _ in range(self.dim))

    # ─── Forms ───────────────────────────────────────────────────
    def torus_form(self, degree: int, terms: int = 2) -> TorusForm:
        form = TorusForm(self.dim)
        if degree > self.dim:
            return form
        for _ in range(terms):
            form = form + TorusForm.dx(self.dim, *self.indices(degree), coef=self.coefficient(), k=self.mode())
        return form

    def end_form(self, degree: int, terms: int = 2, rank: Optional[int] = None) -> EndForm:
        """End(E)-valued form; the rank defaults to the scenario bundle."""
        rank = self.scenario.bundle.rank if rank is None else rank
        out = EndForm(rank, self.dim)
        for _ in range(terms):
            i, l = self.rng.randrange(rank), self.rng.randrange(rank)
            out = out + EndForm.from_form(rank, self.torus_form(degree, 1), i, l)
        return out

    def form_degree(self, low: int = 0) -> int:
        return self.rng.randint(min(low, self.dim), self.dim)

    # ─── Group ───────────────────────────────────────────────────
    def group_key(self) -> int:
        """Element index for finite groups, Fourier mode for the circle."""
        if self.group.is_finite:
            return self.rng.randrange(self.group.order)
        return self.rng.randint(-self.band - 1, self.band + 1)

    def group_element(self, nonunit: bool = False) -> int:
        if nonunit and self.group.order > 1:
            return self.rng.randrange(1, self.group.order)
        return self.rng.randrange(self.group.order)

    def circle_point(self) -> Fraction:
        """A rational element of R/Z with denominator dividing 4."""
        return Fraction(self.rng.randrange(4), 4)

    def group_point(self):
        return self.group_element() if self.group.is_finite else self.circle_point()

    # ─── Convolution algebra ─────────────────────────────────────
    def basis_element(self) -> AlgebraElem:
        return AlgebraElem.element(self.group, self.group_key(), self.mode(), self.coefficient())

    def algebra_element(self, terms: int = 1, unit: bool = False) -> AlgebraElem:
        out = AlgebraElem(self.group)
        for _ in range(terms):
            out = out + self.basis_element()
        if unit:
            out = out + AlgebraElem.identity(self.group, self.coefficient())
        return out

    def algebra_tuple(self, arity: int) -> List[AlgebraElem]:
        """Basis elements in every slot; the first slot may carry the unit on finite groups."""
        unit = self.group.is_finite and self.rng.random() < 0.25
        return [self.algebra_element(1, unit=(unit and i == 0)) for i in range(arity)]

    # ─── Curved algebra ──────────────────────────────────────────
    def eq_form(self, dga, degree: int, g: Optional[int] = None, terms: int = 2):
        """Homogeneous element of total degree form degree + 2 u-degree."""
        out = dga.zero()
        u_degrees = [j for j in range(degree // 2 + 1) if 0 <= degree - 2 * j <= self.dim]
        if not self.group.is_finite:
            u_degrees = [j for j in u_degrees if j <= self.scenario.jet_order]
        else:
            u_degrees = [j for j in u_degrees if j == 0]
        if not u_degrees:
            return out
        for _ in range(terms):
            j = self.rng.choice(u_degrees)
            key = self.group_key() if g is None else g
            out = out + dga.element(key, self.end_form(degree - 2 * j, 1, dga.rank), j)
        return out

    def inverse_key(self, g: int) -> int:
        if self.group.is_finite:
            return self.group.inv(g)
        return g

    # ─── Chains ──────────────────────────────────────────────────
    def slot(self, allow_unit: bool = True) -> tuple:
        if not allow_unit and self.group.order == 1 and not (self.dim and self.band):
            raise UnsupportedOperation("the scenario has no non-unit algebra slots")
        while True:
            slot = (self.group_element(), self.mode())
            if allow_unit or slot != (0, (0,) * self.dim):
                return slot

    def bar_chain(self, degree: int, terms: int = 2) -> BarChain:
        out = BarChain(self.group)
        for _ in range(terms):
            slots = [self.slot()] + [self.slot(allow_unit=False) for _ in range(degree)]
            out = out + BarChain.single(self.group, slots, self.coefficient())
        return out.normalize()

    def cyl_chain(self, p: int, q: int, terms: int = 2) -> CylChain:
        out = CylChain(self.group)
        for _ in range(terms):
            gs = [self.group_element()] + [self.group_element(nonunit=True) for _ in range(q)]
            bs = [self.mode()] + [self.nonzero_mode() for _ in range(p)]
            out = out + CylChain.single(self.group, gs, bs, self.coefficient())
        return out.normalize()

    def element_tuple(self, q: int) -> tuple:
        return tuple(self.group_element(nonunit=True) for _ in range(q))

    def getz_cochain(self, q: int, degree: int, terms: int = 2) -> GetzCochain:
        out = GetzCochain(self.group)
        for _ in range(terms):
            out = out + out.embed(self.element_tuple(q), self.torus_form(degree, 1))
        return out

    def getz_cochain_full(self, q: int, degree: int, keep=None) -> GetzCochain:
        """A random one-term form at every non-unit q-tuple accepted by keep."""
        out = GetzCochain(self.group)
        for gs in product(range(1, self.group.order), repeat=q):
            if keep is None or keep(gs):
                out = out + out.embed(gs, self.torus_form(degree, 1))
        return out

    def getz_chain(self, q: int, degree: int, terms: int = 2) -> GetzChain:
        out = GetzChain(self.group)
        for _ in range(terms):
            out = out + out.embed(self.element_tuple(q), self.torus_form(degree, 1))
        return out.normalize()

    def circle_cyl_chain(self, p: int, terms: int = 2) -> CircleCylChain:
        out = CircleCylChain(self.group)
        for _ in range(terms):
            bs = [self.mode() for _ in range(p + 1)]
            out = out + CircleCylChain.single(self.group, self.group_key(), bs, self.coefficient())
        return out

    def circle_cochain(self, q: int, j: int, degree: int, order: int, terms: int = 2) -> CircleCochain:
        out = CircleCochain(self.group, order)
        for _ in range(terms):
            ms = tuple(self.group_key() for _ in range(q))
            out = out + CircleCochain.single(self.group, order, ms, j, self.torus_form(degree, 1))
        return out


def basis_elements(group, dim: int, band: int) -> List[AlgebraElem]:
    """Every basis function of the convolution algebra with modes inside the band."""
    keys = list(group.elements()) if group.is_finite else list(range(-band, band + 1))
    modes = list(product(range(-band, band + 1), repeat=dim))
    return [AlgebraElem.element(group, g, k) for g in keys for k in modes]

