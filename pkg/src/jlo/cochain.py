# jlo/cochain.py
"""
Multilinear functionals on the unitalization of the convolution algebra, with
the Hochschild b and Connes B operators.

Cochains are evaluators. A normalized cochain ignores the adjoined-unit part
of every slot after the first.
"""
import logging
from typing import Callable, Sequence

from errors import DomainError
from groups import AlgebraElem
from scalars import Scalar, ZERO, sign

logger = logging.getLogger(__name__)

Evaluator = Callable[[Sequence[AlgebraElem]], Scalar]


class Cochain:
    def __init__(self, arity: int, evaluator: Evaluator, name: str = "cochain", normalized: bool = True):
        if arity < 0:
            raise DomainError("cochain arity must be nonnegative")
        self.arity = arity
        self.evaluator = evaluator
        self.name = name
        self.normalized = normalized

    @property
    def degree(self) -> int:
        return self.arity - 1

    def __call__(self, *elements: AlgebraElem) -> Scalar:
        return self.evaluate(elements)

    def evaluate(self, elements: Sequence[AlgebraElem]) -> Scalar:
        if len(elements) != self.arity:
            raise DomainError(f"{self.name} takes {self.arity} arguments, got {len(elements)}")
        if self.arity == 0:
            return ZERO
        if self.normalized:
            elements = [elements[0]] + [a.smooth_part() for a in elements[1:]]
            if any(a.is_zero() for a in elements[1:]):
                return ZERO
        return self.evaluator(elements)

    def __add__(self, other: "Cochain") -> "Cochain":
        if other.arity != self.arity:
            raise DomainError("cannot add cochains of different arity")
        return Cochain(
            self.arity,
            lambda xs: self.evaluator(xs) + other.evaluator(xs),
            f"({self.name} + {other.name})",
            self.normalized and other.normalized,
        )

    def scale(self, factor) -> "Cochain":
        factor = Scalar.of(factor)
        return Cochain(self.arity, lambda xs: self.evaluator(xs) * factor, f"{factor.to_text()}*{self.name}",
                       self.normalized)

    def __repr__(self) -> str:
        return f"Cochain({self.name}, arity={self.arity})"


def cochain_b(phi: Cochain) -> Cochain:
    """(b phi)(a_0..a_{k+1}) = sum (-1)^i phi(..a_i a_{i+1}..) + (-1)^{k+1} phi(a_{k+1} a_0, a_1..a_k)."""
    k = phi.arity - 1

    def evaluate(xs: Sequence[AlgebraElem]) -> Scalar:
        total = ZERO
        for i in range(k + 1):
            merged = list(xs[:i]) + [xs[i].convolve(xs[i + 1])] + list(xs[i + 2:])
            total = total + phi.evaluate(merged) * sign(i)
        wrapped = [xs[k + 1].convolve(xs[0])] + list(xs[1:k + 1])
        return total + phi.evaluate(wrapped) * sign(k + 1)

    return Cochain(phi.arity + 1, evaluate, f"b({phi.name})", phi.normalized)


def cochain_B(phi: Cochain) -> Cochain:
    """(B phi)(a_0..a_{k-1}) = sum_i (-1)^{(k-1) i} phi(1, a_i..a_{k-1}, a_0..a_{i-1})."""
    if not phi.normalized:
        raise DomainError("B is defined on normalized cochains")
    k = phi.arity - 1
    if k < 1:
        return Cochain(max(phi.arity - 1, 0), lambda xs: ZERO, f"B({phi.name})")

    def evaluate(xs: Sequence[AlgebraElem]) -> Scalar:
        one = AlgebraElem.identity(xs[0].group)
        total = ZERO
        for i in range(k):
            rotated = [one] + list(xs[i:]) + list(xs[:i])
            total = total + phi.evaluate(rotated) * sign((k - 1) * i)
        return total

    return Cochain(k, evaluate, f"B({phi.name})", phi.normalized)
