# dga/curved.py
"""
The externally curved DGA of equivariant End(E)-valued forms.

Product      (a * b)(g) = int a(h) ^ h^*b(h^-1 g) dh
Differential D a = d_nabla a + (-1)^{|a|} a ^ delta(g) + u iota_v a
Curvature    left and right multiplication by Theta, given in closed form.

The untwisted algebra is the rank 1 trivial bundle with the zero connection;
then delta, F and the charges vanish and the same formulas apply.
"""
import logging
from typing import Dict, Optional

from errors import DomainError, UnsupportedOperation
from bundle import BundleDesc, Connection, EndForm
from groups import AlgebraElem, GroupDesc
from scalars import PolyU, Scalar
from torus import TorusForm

from .eqform import EqForm

logger = logging.getLogger(__name__)


def _merge(out: Dict[int, PolyU], g: int, poly: PolyU) -> None:
    if poly.is_zero():
        return
    out[g] = out[g] + poly if g in out else poly


class CurvedDGA:
    def __init__(self, connection: Connection, twisted: bool = True):
        self.connection = connection
        self.bundle: BundleDesc = connection.bundle
        self.group: GroupDesc = connection.group
        self.twisted = twisted
        self.rank = self.bundle.rank
        self.dim = self.bundle.dim
        self._delta: Optional[Dict[int, EndForm]] = None
        self._pulled_curvature: Optional[Dict[int, PolyU]] = None

    @classmethod
    def untwisted(cls, group: GroupDesc) -> "CurvedDGA":
        return cls(Connection.trivial(BundleDesc.trivial(group)), twisted=False)

    @classmethod
    def with_connection(cls, connection: Connection) -> "CurvedDGA":
        return cls(connection, twisted=True)

    def describe(self) -> str:
        kind = "twisted" if self.twisted else "untwisted"
        return f"{kind} algebra of {self.bundle.describe()}"

    # ─── Elements ────────────────────────────────────────────────
    def zero(self) -> EqForm:
        return EqForm(self)

    def zero_end(self) -> EndForm:
        return EndForm(self.rank, self.dim)

    def unit_element(self, coef=1) -> EqForm:
        return EqForm(self, unit=coef)

    def element(self, g: int, payload, u_degree: int = 0) -> EqForm:
        """A single group slot; torus forms are taken as multiples of the identity."""
        if isinstance(payload, TorusForm):
            payload = EndForm.scalar(self.rank, payload)
        return EqForm(self, {g: PolyU.monomial(u_degree, payload)})

    def embed(self, a: AlgebraElem) -> EqForm:
        """rho(a) = a (x) id_E."""
        if a.group is not self.group:
            raise DomainError("algebra element over a different group")
        out: Dict[int, PolyU] = {}
        for (g, k), c in a.terms.items():
            form = TorusForm.mode(self.dim, k, c)
            _merge(out, g, PolyU.constant(EndForm.scalar(self.rank, form)))
        return EqForm(self, out, a.unit)

    # ─── Connection data ─────────────────────────────────────────
    def curvature(self) -> EndForm:
        return self.connection.curvature()

    def moment(self) -> EndForm:
        return self.connection.moment()

    def delta(self) -> Dict[int, EndForm]:
        """delta as a function of g: per element, or per Fourier mode on the circle."""
        if self._delta is None:
            if self.group.is_finite:
                self._delta = {g: self.connection.delta(g) for g in self.group.elements()}
                self._delta = {g: d for g, d in self._delta.items() if not d.is_zero()}
            else:
                self._delta = self.connection.delta_modes()
        return self._delta

    def pulled_curvature(self) -> Dict[int, PolyU]:
        """g^*(F + u mu) as a function of g."""
        if self._pulled_curvature is None:
            out: Dict[int, PolyU] = {}
            if self.group.is_finite:
                for g in self.group.elements():
                    _merge(out, g, PolyU.constant(self.bundle.end_action(g, self.curvature())))
            else:
                for w, part in self.bundle.end_action_modes(self.curvature()).items():
                    _merge(out, w, PolyU.constant(part))
                for w, part in self.bundle.end_action_modes(self.moment()).items():
                    _merge(out, w, PolyU.monomial(1, part))
            self._pulled_curvature = out
        return self._pulled_curvature

    def _curvature_poly(self) -> PolyU:
        """F + u mu."""
        return PolyU({0: self.curvature(), 1: self.moment()})

    # ─── Product ─────────────────────────────────────────────────
    def _check(self, *elements: EqForm) -> None:
        for a in elements:
            if a.dga is not self:
                raise DomainError("element belongs to a different curved algebra")

    def _pointwise(self, a: EqForm, b: Dict[int, PolyU]) -> Dict[int, PolyU]:
        """(a ^ b)(g) with b a function of g; circle modes add."""
        out: Dict[int, PolyU] = {}
        if self.group.is_finite:
            for g, pa in a.values.items():
                if g in b:
                    _merge(out, g, pa.mul(b[g], EndForm.wedge))
        else:
            for m, pa in a.values.items():
                for w, pb in b.items():
                    _merge(out, m + w, pa.mul(pb, EndForm.wedge))
        return out

    def star(self, a: EqForm, b: EqForm) -> EqForm:
        self._check(a, b)
        out: Dict[int, PolyU] = {}
        bundle = self.bundle
        if self.group.is_finite:
            for h, pa in a.values.items():
                for h2, pb in b.values.items():
                    moved = pb.map(lambda payload: bundle.end_action(h, payload))
                    _merge(out, self.group.mul(h, h2), pa.mul(moved, EndForm.wedge))
        else:
            for m1, pa in a.values.items():
                for m2, pb in b.values.items():
                    w = m2 - m1
                    moved = PolyU({
                        j: bundle.end_action_modes(payload).get(w, self.zero_end())
                        for j, payload in pb.items()
                    })
                    _merge(out, m2, pa.mul(moved, EndForm.wedge))
        if not a.unit.is_zero():
            for g, pb in b.values.items():
                _merge(out, g, pb.scale(a.unit))
        if not b.unit.is_zero():
            for g, pa in a.values.items():
                _merge(out, g, pa.scale(b.unit))
        return EqForm(self, out, a.unit * b.unit)

    # ─── Differential ────────────────────────────────────────────
    def differential(self, a: EqForm) -> EqForm:
        self._check(a)
        connection = self.connection
        out: Dict[int, PolyU] = {}
        for g, poly in a.values.items():
            _merge(out, g, poly.map(connection.d_nabla))
        signed = a.smooth_part().map_payloads(lambda g, j, payload: payload.graded_sign())
        delta = {g: PolyU.constant(d) for g, d in self.delta().items()}
        for g, poly in self._pointwise(signed, delta).items():
            _merge(out, g, poly)
        if not self.group.is_finite:
            v = self.group.vector
            for g, poly in a.values.items():
                _merge(out, g, poly.map(lambda payload: payload.contract(v)).shift(1))
        return EqForm(self, out)

    # ─── Curvature multipliers ───────────────────────────────────
    def _unit_theta(self, a: EqForm) -> EqForm:
        if a.unit.is_zero():
            return self.zero()
        if not self.group.is_finite:
            raise UnsupportedOperation("Theta on the adjoined unit is not band-limited on the circle")
        return self.element(0, self.curvature().scale(a.unit))

    def _phase_term(self, a: EqForm, left: bool) -> Dict[int, PolyU]:
        """tau u (w - m) on the left, -tau u m on the right."""
        out: Dict[int, PolyU] = {}
        bundle = self.bundle
        for m, poly in a.values.items():
            shifted = {}
            for j, payload in poly.items():
                if left:
                    scaled = payload.map_terms(
                        lambda key, c, m=m: [(key, c * Scalar.tau(1, bundle.weight(key) - m))]
                    )
                else:
                    scaled = payload.scale(Scalar.tau(1, -m))
                shifted[j + 1] = scaled
            _merge(out, m, PolyU(shifted))
        return out

    def theta_left(self, a: EqForm) -> EqForm:
        self._check(a)
        out: Dict[int, PolyU] = {}
        if self.group.is_finite:
            curvature = PolyU.constant(self.curvature())
        else:
            curvature = self._curvature_poly()
            for g, poly in self._phase_term(a, left=True).items():
                _merge(out, g, poly)
        for g, poly in a.values.items():
            _merge(out, g, curvature.mul(poly, EndForm.wedge))
        return EqForm(self, out) + self._unit_theta(a)

    def theta_right(self, a: EqForm) -> EqForm:
        self._check(a)
        out = self._pointwise(a.smooth_part(), self.pulled_curvature())
        if not self.group.is_finite:
            for g, poly in self._phase_term(a, left=False).items():
                _merge(out, g, poly)
        return EqForm(self, out) + self._unit_theta(a)

    def theta_commutator(self, a: EqForm) -> EqForm:
        """[Theta, a] = Theta_l a - Theta_r a."""
        return self.theta_left(a) - self.theta_right(a)
