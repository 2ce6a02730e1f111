# dga/traces.py
"""
Closed graded traces on the curved algebras.

plain    int_M a(e, 0)              (untwisted algebra)
twisted  int_M tr_E a(e, 0)
gamma    int_M tr_E (d/du)^q a(e, 0) for the invariant polynomial u^q

On the circle evaluation at e sums the Fourier modes. Finite groups only have
the degree 0 invariant polynomial.
"""
from math import factorial

from errors import DomainError
from scalars import Scalar, ZERO

from .eqform import EqForm

VARIANTS = ("plain", "twisted", "gamma")


def _evaluate_at_unit(a: EqForm, j: int) -> Scalar:
    dga = a.dga
    keys = [0] if dga.group.is_finite else list(a.values)
    total = ZERO
    for g in keys:
        payload = a.at(g).coefficient(j)
        if payload is not None:
            total = total + payload.integrate_trace()
    if j == 0 and dga.dim == 0 and not a.unit.is_zero():
        total = total + a.unit * dga.rank
    return total


def trace(a: EqForm, variant: str = "twisted", q: int = 0) -> Scalar:
    if variant not in VARIANTS:
        raise DomainError(f"unknown trace variant {variant!r}")
    dga = a.dga
    if variant == "plain" and dga.twisted:
        raise DomainError("the plain trace lives on the untwisted algebra")
    if variant != "gamma":
        q = 0
    if q < 0:
        raise DomainError("invariant polynomial degree must be nonnegative")
    if q and dga.group.is_finite:
        raise DomainError("finite groups only carry the degree 0 invariant polynomial")
    value = _evaluate_at_unit(a, q)
    return value * factorial(q) if q else value


def default_variant(dga) -> str:
    return "twisted" if dga.twisted else "plain"
