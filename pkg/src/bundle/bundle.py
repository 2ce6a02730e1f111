# bundle/bundle.py
"""
Equivariant bundles T^n x C^r and connections on them.

The group acts on sections by (g.s)(x) = U(g, x) s(x.g), so the cocycle
identity reads U(gh) = U(g) . R_g^*U(h). On End(E)-valued forms
g^*w = U(g) (R_g^* w) U(g)^-1 and the pulled connection is
A_g = U (R_g^* A) U^-1 - (dU) U^-1, with delta(g) = A - A_g.

Circle bundles carry diagonal characters U(g) = diag(e^{tau c_i g}), so a term
at entry (i, l) with mode k has weight k.v + c_i - c_l.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from errors import DomainError, ValidationError
from groups import CircleGroup, FiniteGroup, GroupDesc, GroupFun
from scalars import Scalar

from .endform import EndForm

logger = logging.getLogger(__name__)


def phase(x: Fraction) -> Scalar:
    """e^{2 pi i x} for rational x."""
    x = Fraction(x) % 1
    if not x:
        return Scalar.of(1)
    return Scalar.zeta(x.denominator, x.numerator)


def _invert_monomial(u: EndForm) -> Optional[EndForm]:
    rows, cols = set(), set()
    terms = {}
    for (i, l, I, k), c in u.terms.items():
        if I or i in rows or l in cols:
            return None
        rows.add(i)
        cols.add(l)
        terms[(l, i, (), tuple(-x for x in k))] = c.inverse()
    if len(rows) != u.rank:
        return None
    return EndForm(u.rank, u.dim, terms)


def _invert_constant(u: EndForm) -> EndForm:
    r = u.rank
    zero_mode = (0,) * u.dim
    if any(I or k != zero_mode for (_, _, I, k) in u.terms):
        raise DomainError("cocycle matrix is neither monomial nor constant")
    a: List[List[Scalar]] = [[u.coefficient((i, l, (), zero_mode)) for l in range(r)] for i in range(r)]
    inv: List[List[Scalar]] = [[Scalar.of(int(i == l)) for l in range(r)] for i in range(r)]
    for col in range(r):
        pivot = next((row for row in range(col, r) if not a[row][col].is_zero()), None)
        if pivot is None:
            raise DomainError("cocycle matrix is not invertible")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = a[col][col].inverse()
        a[col] = [x * scale for x in a[col]]
        inv[col] = [x * scale for x in inv[col]]
        for row in range(r):
            if row != col and not a[row][col].is_zero():
                f = a[row][col]
                a[row] = [x - f * y for x, y in zip(a[row], a[col])]
                inv[row] = [x - f * y for x, y in zip(inv[row], inv[col])]
    return EndForm(r, u.dim, {
        (i, l, (), zero_mode): inv[i][l] for i in range(r) for l in range(r) if not inv[i][l].is_zero()
    })


def invert(u: EndForm) -> EndForm:
    return _invert_monomial(u) or _invert_constant(u)


class BundleDesc:
    def __init__(
        self,
        group: GroupDesc,
        rank: int,
        cocycle: Optional[Dict[int, EndForm]] = None,
        charges: Optional[Sequence[int]] = None,
        validate: bool = True,
    ):
        if rank < 1:
            raise ValidationError("bundle rank must be positive")
        self.group = group
        self.rank = rank
        self.dim = group.dim
        if group.is_finite:
            identity = EndForm.identity(rank, self.dim)
            self.cocycle = {g: identity for g in group.elements()} if cocycle is None else dict(cocycle)
            missing = [group.label(g) for g in group.elements() if g not in self.cocycle]
            if missing:
                raise ValidationError(f"cocycle is missing elements {missing}")
            self.inverses = {g: invert(u) for g, u in self.cocycle.items()}
            self.charges = (0,) * rank
            if validate:
                self.validate()
        else:
            self.cocycle = {}
            self.inverses = {}
            self.charges = tuple(int(c) for c in (charges or (0,) * rank))
            if len(self.charges) != rank:
                raise ValidationError(f"{len(self.charges)} charges for a rank {rank} bundle")

    @classmethod
    def trivial(cls, group: GroupDesc, rank: int = 1) -> "BundleDesc":
        return cls(group, rank)

    @classmethod
    def from_generator(cls, group: FiniteGroup, rank: int, images: Dict[str, EndForm]) -> "BundleDesc":
        """Extend the cocycle from generator images through U(g s) = U(g) R_g^*U(s)."""
        words = getattr(group, "generator_words", None)
        if words is None:
            raise ValidationError("group was not built from generators")
        unknown = set(images) - set(words)
        if unknown:
            raise ValidationError(f"cocycle given for unknown generators {sorted(unknown)}")
        identity = EndForm.identity(rank, group.dim)
        gens = {words[name]: images.get(name, identity) for name in words}
        cocycle: Dict[int, EndForm] = {0: identity}
        queue = [0]
        while queue:
            g = queue.pop(0)
            for s, u in gens.items():
                gs = group.mul(g, s)
                if gs not in cocycle:
                    cocycle[gs] = cocycle[g].wedge(u.pullback(group.action(g)))
                    queue.append(gs)
        return cls(group, rank, cocycle)

    # ─── Validation ──────────────────────────────────────────────
    def validate(self) -> None:
        group = self.group
        identity = EndForm.identity(self.rank, self.dim)
        if self.cocycle[0] != identity:
            raise ValidationError("cocycle is not the identity at the unit")
        for u in self.cocycle.values():
            if u.rank != self.rank or u.dim != self.dim:
                raise ValidationError("cocycle matrix has the wrong shape")
            if u.degrees() not in ([], [0]):
                raise ValidationError("cocycle entries must be functions")
        for g in group.elements():
            for h in group.elements():
                lhs = self.cocycle[group.mul(g, h)]
                rhs = self.cocycle[g].wedge(self.cocycle[h].pullback(group.action(g)))
                if lhs != rhs:
                    raise ValidationError(
                        f"cocycle identity fails at ({group.label(g)}, {group.label(h)})"
                    )
        logger.debug(f"validated rank {self.rank} cocycle over {group.describe()}")

    # ─── End(E) action ───────────────────────────────────────────
    def end_action(self, g, omega: EndForm) -> EndForm:
        """g^*omega for a finite element index or a rational circle element."""
        if self.group.is_finite:
            if g == 0:
                return omega
            pulled = omega.pullback(self.group.action(g))
            return self.cocycle[g].wedge(pulled).wedge(self.inverses[g])
        g = Fraction(g)
        return omega.map_terms(lambda key, c: [(key, c * phase(g * self.weight(key)))])

    def end_action_modes(self, omega: EndForm) -> Dict[int, EndForm]:
        """Circle: g^*omega = sum_w e^{tau w g} omega_w."""
        self._require_circle()
        return omega.weight_split(self.group.direction, self.charges)

    def weight(self, key) -> int:
        """Circle weight of an End(E) basis key."""
        i, l, _, k = key
        return self.group.weight(k) + self.charges[i] - self.charges[l]

    def _require_circle(self) -> None:
        if not isinstance(self.group, CircleGroup):
            raise DomainError("operation needs a circle bundle")

    def describe(self) -> str:
        return f"rank {self.rank} bundle over {self.group.describe()}"


class Connection:
    """nabla = d + A in the trivialization; A is a matrix of 1-forms."""

    def __init__(self, bundle: BundleDesc, potential: EndForm):
        if potential.rank != bundle.rank or potential.dim != bundle.dim:
            raise DomainError("connection does not match the bundle")
        if potential.degrees() not in ([], [1]):
            raise ValidationError("connection entries must be 1-forms")
        self.bundle = bundle
        self.potential = potential
        self._curvature: Optional[EndForm] = None
        self._moment: Optional[EndForm] = None

    @classmethod
    def trivial(cls, bundle: BundleDesc) -> "Connection":
        return cls(bundle, EndForm(bundle.rank, bundle.dim))

    @property
    def group(self) -> GroupDesc:
        return self.bundle.group

    def curvature(self) -> EndForm:
        if self._curvature is None:
            a = self.potential
            self._curvature = a.d() + a.wedge(a)
        return self._curvature

    def d_nabla(self, omega: EndForm) -> EndForm:
        """d w + A w - (-1)^{|w|} w A."""
        a = self.potential
        return omega.d() + a.wedge(omega) - omega.graded_sign().wedge(a)

    # ─── Pulled connection and delta ─────────────────────────────
    def pulled(self, g) -> EndForm:
        bundle = self.bundle
        if bundle.group.is_finite:
            if g == 0:
                return self.potential
            du = bundle.cocycle[g].d().wedge(bundle.inverses[g])
            return bundle.end_action(g, self.potential) - du
        return bundle.end_action(g, self.potential)

    def delta(self, g) -> EndForm:
        return self.potential - self.pulled(g)

    def delta_modes(self) -> Dict[int, EndForm]:
        """Circle: delta as a trigonometric polynomial in g."""
        out: Dict[int, EndForm] = {}
        for w, part in self.bundle.end_action_modes(self.potential).items():
            if w == 0:
                continue
            out[0] = out[0] + part if 0 in out else part
            out[w] = -part
        return out

    def moment(self) -> EndForm:
        """mu(X) for X the unit generator: iota_v A - tau diag(c)."""
        if self._moment is None:
            bundle = self.bundle
            if bundle.group.is_finite:
                self._moment = EndForm(bundle.rank, bundle.dim)
            else:
                mu = self.potential.contract(bundle.group.vector)
                diag = EndForm(bundle.rank, bundle.dim, {
                    (i, i, (), (0,) * bundle.dim): Scalar.tau(1, -c)
                    for i, c in enumerate(bundle.charges) if c
                })
                self._moment = mu + diag
        return self._moment

    # ─── Invariance ──────────────────────────────────────────────
    def is_invariant(self) -> bool:
        if self.group.is_finite:
            return all(self.delta(g).is_zero() for g in self.group.elements())
        return not self.delta_modes()

    def average(self) -> "Connection":
        """Haar average of the pulled connections; delta vanishes for the result."""
        zero = EndForm(self.bundle.rank, self.bundle.dim)
        if self.group.is_finite:
            pulled = GroupFun(self.group, {g: self.pulled(g) for g in self.group.elements()})
            averaged = pulled.haar_integrate(zero).scale(Fraction(1, self.group.order))
        else:
            averaged = GroupFun(self.group, self.bundle.end_action_modes(self.potential)).haar_integrate(zero)
        logger.debug(f"averaged connection over {self.group.describe()}")
        return Connection(self.bundle, averaged)


def average_connection(connection: Connection, bundle: BundleDesc = None) -> Connection:
    if bundle is not None and bundle is not connection.bundle:
        raise DomainError("connection belongs to a different bundle")
    return connection.average()

