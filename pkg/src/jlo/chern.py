# jlo/chern.py
"""
Chern characters of the curved algebras as cochains on the crossed product.

jlo_generic expands every e^{-t Theta} into Theta-insertions and integrates the
t-monomials over the simplex. The other code paths are closed forms that must
agree with it on every tuple:

chern_untwisted_top        (1/n!) int (a_0 * da_1 * ... * da_n)(e)
chern_twisted_closed       sum over group tuples with product e of
                           a_0(g_0) (g_0^*F)^i_0 g_0^*Da_1(g_1) ... (finite groups)
chern_invariant_simplified (-1)^m/(k! m!) int tr F^m (a_0 * da_1 * ... * da_k)(e)
"""
import logging
from fractions import Fraction
from itertools import product as tuples
from math import ceil, factorial
from typing import Dict, Optional, Sequence

from errors import DomainError, UnsupportedOperation
from bundle import EndForm
from dga import CurvedDGA, EqForm, default_variant, trace
from groups import AlgebraElem
from scalars import Scalar, ZERO, sign

from .cochain import Cochain
from .simplex import compositions, simplex_integrate

logger = logging.getLogger(__name__)


def _insertions(n: int, q: int, k: int) -> Optional[int]:
    """Number m of Theta insertions reaching total degree n + 2q, None when parity fails."""
    if k < 0 or (n + 2 * q - k) % 2 or k > n + 2 * q:
        return None
    m = (n + 2 * q - k) // 2
    if m > ceil((n + 2 * q) / 2):
        raise DomainError(f"{m} Theta insertions exceed the nilpotency bound")
    return m


def _power(f, times: int, value):
    for _ in range(times):
        value = f(value)
    return value


def jlo_generic(dga: CurvedDGA, k: int, variant: Optional[str] = None, q: int = 0) -> Cochain:
    """
    Ch^k(a_0..a_k) = int_{simplex} trace(a_0 e^{-t_0 Theta} Da_1 e^{-t_1 Theta} ... Da_k e^{-t_k Theta}).
    """
    variant = variant or default_variant(dga)
    n = dga.dim
    m = _insertions(n, q, k)

    def evaluate(xs: Sequence[AlgebraElem]) -> Scalar:
        if m is None:
            return ZERO
        rho = [dga.embed(a) for a in xs]
        total = ZERO
        for powers in compositions(m, k + 1):
            weight = Fraction(sign(m)) * simplex_integrate(powers) / _factorials(powers)
            if k == 0:
                y = _power(dga.theta_right, powers[0], rho[0])
            else:
                y = _power(dga.theta_right, powers[k], dga.differential(rho[k]))
                for s in range(k - 1, -1, -1):
                    y = _power(dga.theta_left, powers[s], y)
                    y = dga.star(rho[0] if s == 0 else dga.differential(rho[s]), y)
            value = trace(y, variant, q)
            if not value.is_zero():
                total = total + value * weight
        return total

    suffix = f", gamma q={q}" if variant == "gamma" else ""
    return Cochain(k + 1, evaluate, f"Ch^{k}[{dga.describe()}{suffix}]")


def _factorials(powers: Sequence[int]) -> int:
    out = 1
    for i in powers:
        out *= factorial(i)
    return out


def _exterior_d(a: EqForm) -> EqForm:
    return a.map_payloads(lambda g, j, payload: payload.d())


def _product_chain(dga: CurvedDGA, xs: Sequence[AlgebraElem]) -> EqForm:
    """a_0 * da_1 * ... * da_k in the algebra."""
    y = dga.embed(xs[0])
    for a in xs[1:]:
        y = dga.star(y, _exterior_d(dga.embed(a)))
    return y


def chern_untwisted_top(dga: CurvedDGA) -> Cochain:
    if dga.twisted:
        raise DomainError("the top-degree closed form needs the untwisted algebra")
    n = dga.dim

    def evaluate(xs: Sequence[AlgebraElem]) -> Scalar:
        return trace(_product_chain(dga, xs), "plain") * Fraction(1, factorial(n))

    return Cochain(n + 1, evaluate, f"Ch^{n}_top[{dga.describe()}]")


def chern_twisted_closed(dga: CurvedDGA, k: int) -> Cochain:
    """Explicit sum over group tuples; finite groups only."""
    group = dga.group
    if not group.is_finite:
        raise UnsupportedOperation("the closed-form twisted character is implemented for finite groups")
    n = dga.dim
    m = _insertions(n, 0, k)
    bundle = dga.bundle
    curvature = dga.curvature()
    identity = EndForm.identity(dga.rank, n)
    delta = {g: dga.connection.delta(g) for g in group.elements()}
    curvature_powers: Dict[int, EndForm] = {0: identity}
    for i in range(1, (m or 0) + 1):
        curvature_powers[i] = curvature_powers[i - 1].wedge(curvature)

    def covariant(a: AlgebraElem, g: int) -> EndForm:
        """Da(g) = da(g) + a(g) delta(g) for a function a."""
        f = EndForm.scalar(dga.rank, a.at(g))
        return f.d() + f.wedge(delta[g])

    def evaluate(xs: Sequence[AlgebraElem]) -> Scalar:
        if m is None:
            return ZERO
        prefactor = Fraction(sign(m), factorial((n + k) // 2))
        unit_part = xs[0].unit
        total = ZERO
        supports = [xs[0].support()] + [a.support() for a in xs[1:]]
        candidates = list(supports)
        if not unit_part.is_zero() and 0 not in candidates[0]:
            candidates[0] = candidates[0] + [0]
        for gs in tuples(*candidates):
            if group.product(gs) != 0:
                continue
            first = EndForm.scalar(dga.rank, xs[0].at(gs[0]))
            if gs[0] == 0 and not unit_part.is_zero():
                first = first + identity.scale(unit_part)
            slots = [first] + [covariant(a, g) for a, g in zip(xs[1:], gs[1:])]
            if any(s.is_zero() for s in slots):
                continue
            for powers in compositions(m, k + 1):
                gamma = 0
                value = slots[0]
                for j in range(k + 1):
                    gamma = group.mul(gamma, gs[j])
                    value = value.wedge(bundle.end_action(gamma, curvature_powers[powers[j]]))
                    if j < k:
                        value = value.wedge(bundle.end_action(gamma, slots[j + 1]))
                total = total + value.integrate_trace()
        return total * prefactor

    return Cochain(k + 1, evaluate, f"Ch^{k}_closed[{dga.describe()}]")


def chern_invariant_simplified(dga: CurvedDGA, k: int) -> Cochain:
    """Valid for a G-invariant connection."""
    if not dga.connection.is_invariant():
        raise DomainError("the simplified character needs an invariant connection")
    n = dga.dim
    m = _insertions(n, 0, k)
    curvature = dga.curvature()
    power = EndForm.identity(dga.rank, n)
    for _ in range(m or 0):
        power = power.wedge(curvature)
    coefficient = Fraction(sign(m or 0), factorial(k) * factorial(m or 0))

    def evaluate(xs: Sequence[AlgebraElem]) -> Scalar:
        if m is None:
            return ZERO
        y = _product_chain(dga, xs)
        total = ZERO
        keys = [0] if dga.group.is_finite else list(y.values)
        for g in keys:
            payload = y.at(g).coefficient(0)
            if payload is not None:
                total = total + power.wedge(payload).integrate_trace()
        if n == 0 and not y.unit.is_zero():
            total = total + y.unit * power.trace().coefficient(((), ()))
        return total * coefficient

    return Cochain(k + 1, evaluate, f"Ch^{k}_invariant[{dga.describe()}]")


def chern_family(dga: CurvedDGA, variant: Optional[str] = None, q: int = 0) -> Dict[int, Cochain]:
    """All nonvanishing components k <= n + 2q of the JLO family."""
    top = dga.dim + 2 * q
    return {k: jlo_generic(dga, k, variant, q) for k in range(top + 1) if (top - k) % 2 == 0}

