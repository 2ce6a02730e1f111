# jlo/simplex.py
"""Exact integrals of monomials over standard simplices."""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterator, Sequence, Tuple

from errors import DomainError


def simplex_integrate(exponents: Sequence[int]) -> Fraction:
    """
    int over {t_0 + ... + t_k = 1} of t_0^i_0 ... t_k^i_k dt_1 ... dt_k
    = i_0! ... i_k! / (k + sum i)!.
    """
    if not exponents:
        raise DomainError("simplex needs at least one variable")
    if any(i < 0 for i in exponents):
        raise DomainError(f"negative exponent in {tuple(exponents)}")
    k = len(exponents) - 1
    return Fraction(prod(factorial(i) for i in exponents), factorial(k + sum(exponents)))


def ascending_simplex_integrate(exponents: Sequence[int]) -> Fraction:
    """int over 0 <= t_1 <= ... <= t_q <= 1 of t_1^e_1 ... t_q^e_q."""
    if any(e < 0 for e in exponents):
        raise DomainError(f"negative exponent in {tuple(exponents)}")
    value = Fraction(1)
    running = 0
    for i, e in enumerate(exponents, start=1):
        running += e
        value /= running + i
    return value


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of total into the given number of parts."""
    if parts <= 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class SimplexMonomial:
    exponents: Tuple[int, ...]

    def __post_init__(self):
        if any(i < 0 for i in self.exponents):
            raise DomainError(f"negative exponent in {self.exponents}")

    @property
    def dimension(self) -> int:
        return len(self.exponents) - 1

    def integrate(self) -> Fraction:
        return simplex_integrate(self.exponents)
