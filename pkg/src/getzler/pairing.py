# getzler/pairing.py
"""
Pairing of equivariant cochains with chains at X = 0, the composite
Psi = sum_m N Psi_3 EZ (B h)^m Psi_1 and the induced map c from equivariant
cochains to cyclic cochains of the crossed product.
"""
import logging
from fractions import Fraction
from typing import Sequence

from errors import DomainError
from groups import AlgebraElem
from homology import BarChain, ez_all, ez_pert_steps
from jlo.cochain import Cochain
from scalars import Scalar, ZERO, sign

from .chains import GetzChain, psi3
from .cochains import GetzCochain

logger = logging.getLogger(__name__)


def pairing_sign(p: int, q: int, n: int) -> int:
    """(-1)^{p(n+q) + p(p+1)/2} for a chain of bidegree (p, q) on T^n."""
    return sign(p * (n + q) + p * (p + 1) // 2)


def pair(alpha: GetzCochain, beta: GetzChain) -> Scalar:
    """Sum over matching tuples of the signed integral of alpha ^ beta in complementary degrees."""
    if alpha.group is not beta.group:
        raise DomainError("pairing across different groups")
    n = alpha.dim
    chain_tuples = set(beta.tuples())
    total = ZERO
    for gs in alpha.tuples():
        if gs not in chain_tuples:
            continue
        a = alpha.form_at(gs)
        b = beta.form_at(gs)
        for p in b.degrees():
            part = a.degree_part(n - p)
            if part.is_zero():
                continue
            value = part.wedge(b.degree_part(p)).integrate_top()
            total = total + value * pairing_sign(p, len(gs), n)
    return total


def perturbation_steps(alpha: GetzCochain, degree: int) -> int:
    """Largest m with a bidegree of alpha meeting Psi of a degree-k chain after m steps."""
    n = alpha.dim
    steps = 0
    for a, q in alpha.bidegrees():
        excess = n - a + q - degree
        if excess >= 0:
            steps = max(steps, excess // 2)
    return steps


def psi(x: BarChain, steps: int) -> GetzChain:
    """sum_{m <= steps} N Psi_3 EZ((B h)^m Psi_1 x)."""
    total = GetzChain(x.group)
    for y in ez_pert_steps(x.psi1(), steps):
        if y.is_zero():
            break
        total = total + psi3(ez_all(y))
    return total.normalize()


def c_map(alpha: GetzCochain, x: BarChain) -> Scalar:
    total = ZERO
    for degree in x.degrees():
        part = x.filter_keys(lambda key, d=degree: len(key) - 1 == d)
        total = total + pair(alpha, psi(part, perturbation_steps(alpha, degree)))
    return total


def c_cochain(alpha: GetzCochain, arity: int) -> Cochain:
    """c(alpha) as a cochain on tuples of algebra elements."""

    def evaluate(xs: Sequence[AlgebraElem]) -> Scalar:
        return c_map(alpha, BarChain.from_elements(xs))

    return Cochain(arity, evaluate, f"c(alpha)^{arity - 1}")


def point_pairing(value: Fraction, a: AlgebraElem) -> Scalar:
    """f(e) P(0) for a constant invariant polynomial on a point."""
    if a.group.dim != 0:
        raise DomainError("the point pairing lives on T^0")
    return a.at(0).coefficient(((), ())) * value + a.unit * value
