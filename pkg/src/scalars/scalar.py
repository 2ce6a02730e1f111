# scalars/scalar.py
"""
Scalars: polynomials in a formal symbol tau (standing for 2*pi*i) with
cyclotomic coefficients.

Canonical text form, used in reports and counterexamples:

    (3/2)*z4^1*tau^2 + -1*tau^3

Every term prints its rational coefficient first, then ``zN^j`` for j > 0 on
the minimal conductor, then ``tau^t`` for t > 0. Terms are sorted by tau
degree and exponent and joined with `` + ``. The zero scalar prints as ``0``.
"""
import re
from fractions import Fraction
from typing import Dict, Iterable, Union

from errors import DomainError, ValidationError

from .cyclotomic import Cyclotomic, Rationalish

ScalarLike = Union["Scalar", Cyclotomic, int, Fraction]


class Scalar:
    """Immutable element of Q(zeta)[tau]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[int, Cyclotomic] = None):
        self.terms = {t: c for t, c in (terms or {}).items() if not c.is_zero()}

    # ─── Constructors ────────────────────────────────────────────
    @classmethod
    def of(cls, value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, Cyclotomic):
            return cls({0: value})
        if isinstance(value, (int, Fraction)):
            if not value:
                return ZERO
            return cls({0: Cyclotomic.rational(value)})
        raise DomainError(f"cannot use {value!r} as a scalar")

    @classmethod
    def tau(cls, power: int = 1, coef: Rationalish = 1) -> "Scalar":
        if power < 0:
            raise DomainError("tau-degree must be nonnegative")
        return cls({power: Cyclotomic.rational(coef)})

    @classmethod
    def zeta(cls, n: int, power: int = 1) -> "Scalar":
        return cls({0: Cyclotomic.zeta(n, power)})

    # ─── Structure ───────────────────────────────────────────────
    def is_zero(self) -> bool:
        return not self.terms

    def tau_degree(self) -> int:
        return max(self.terms) if self.terms else 0

    def tau_part(self, power: int) -> Cyclotomic:
        return self.terms.get(power, Cyclotomic.rational(0))

    def is_constant(self) -> bool:
        return all(t == 0 for t in self.terms)

    def times_tau(self, power: int = 1) -> "Scalar":
        return Scalar({t + power: c for t, c in self.terms.items()})

    def scale(self, factor: Rationalish) -> "Scalar":
        return self * Scalar.of(factor)

    # ─── Arithmetic ──────────────────────────────────────────────
    def __add__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction, Cyclotomic)):
                return NotImplemented
            other = Scalar.of(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for t, c in other.terms.items():
            prev = out.get(t)
            out[t] = c if prev is None else prev + c
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar({t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction, Cyclotomic)):
                return NotImplemented
            other = Scalar.of(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                if not other:
                    return ZERO
                return Scalar({t: c.scale(other) for t, c in self.terms.items()})
            if not isinstance(other, Cyclotomic):
                return NotImplemented
            other = Scalar.of(other)
        if not self.terms or not other.terms:
            return ZERO
        out: Dict[int, Cyclotomic] = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                t = t1 + t2
                prod = c1 * c2
                prev = out.get(t)
                out[t] = prod if prev is None else prev + prod
        return Scalar(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "Scalar":
        """Inverse of a unit; only tau-free nonzero scalars qualify."""
        if not self.terms:
            raise DomainError("division by zero scalar")
        if not self.is_constant():
            raise DomainError(f"{self} is not invertible: it carries tau")
        return Scalar({0: self.terms[0].inverse()})

    def __truediv__(self, other):
        return self * Scalar.of(other).inverse()

    # ─── Comparison ──────────────────────────────────────────────
    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction, Cyclotomic)):
                return NotImplemented
            other = Scalar.of(other)
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset((t, hash(c)) for t, c in self.terms.items()))

    # ─── Text ────────────────────────────────────────────────────
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in sorted(self.terms):
            for coef, conductor, j in self.terms[t].power_terms():
                text = _format_fraction(coef)
                if j > 0:
                    text += f"*z{conductor}^{j}"
                if t > 0:
                    text += f"*tau^{t}"
                parts.append(text)
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Scalar({self.to_text()!r})"


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"({value.numerator}/{value.denominator})"


ZERO = Scalar()
ONE = Scalar.of(1)

_COEF = re.compile(r"^\(?(-?\d+)(?:/(\d+))?\)?$")
_ZETA = re.compile(r"^z(\d+)\^(-?\d+)$")
_TAU = re.compile(r"^tau\^(\d+)$")


def parse_scalar(text: str) -> Scalar:
    """Inverse of Scalar.to_text; also accepts a parenthesized multi-term sum."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")") and " + " in text:
        text = text[1:-1].strip()
    if text == "0":
        return ZERO
    total = ZERO
    for term in text.split(" + "):
        total = total + _parse_term(term.strip(), text)
    return total


def _parse_term(term: str, whole: str) -> Scalar:
    factors = term.split("*")
    match = _COEF.match(factors[0])
    if not match:
        raise ValidationError(f"bad coefficient {factors[0]!r} in scalar {whole!r}")
    coef = Fraction(int(match.group(1)), int(match.group(2) or 1))
    value = Scalar.of(coef)
    for factor in factors[1:]:
        zeta = _ZETA.match(factor)
        tau = _TAU.match(factor)
        if zeta:
            value = value * Scalar.zeta(int(zeta.group(1)), int(zeta.group(2)))
        elif tau:
            value = value.times_tau(int(tau.group(1)))
        else:
            raise ValidationError(f"bad factor {factor!r} in scalar {whole!r}")
    return value


def scalar_sum(values: Iterable[ScalarLike]) -> Scalar:
    total = ZERO
    for value in values:
        total = total + value
    return total


def sign(exponent: int) -> int:
    """(-1)**exponent as an int."""
    return -1 if exponent % 2 else 1


