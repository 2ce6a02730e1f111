# scalars/cyclotomic.py
"""
Exact arithmetic in the cyclotomic fields Q(zeta_N).

A value is the rational coefficient vector of 1, zeta_N, ..., zeta_N^(phi(N)-1)
reduced modulo the N-th cyclotomic polynomial. Operands living in different
conductors are embedded into the field of the lcm conductor first, so the
result of any operation is again canonical.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, List, Optional, Tuple, Union

from sympy import Matrix, Poly, QQ, Rational, cyclotomic_poly, divisors, mobius, symbols, totient

from errors import DomainError

logger = logging.getLogger(__name__)

_z = symbols("z")

Rationalish = Union[int, Fraction]


@lru_cache(maxsize=None)
def _modulus(n: int) -> Tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    poly = Poly(cyclotomic_poly(n, _z), _z)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def field_degree(n: int) -> int:
    """phi(n), the dimension of Q(zeta_n) over Q."""
    return len(_modulus(n)) - 1


def _reduce(n: int, pairs: Iterable[Tuple[int, Fraction]]) -> Tuple[Fraction, ...]:
    """Fold exponents mod n, then long-divide by the monic cyclotomic polynomial."""
    buf = [Fraction(0)] * n
    for j, c in pairs:
        if c:
            buf[j % n] += c
    mod = _modulus(n)
    deg = len(mod) - 1
    for top in range(n - 1, deg - 1, -1):
        c = buf[top]
        if not c:
            continue
        shift = top - deg
        for i, m in enumerate(mod):
            if m:
                buf[shift + i] -= c * m
    return tuple(buf[:deg])


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> Tuple[Fraction, ...]:
    # normalized trace of zeta_n^j is mu(m)/phi(m) with m the order of zeta_n^j
    weights = []
    for j in range(field_degree(n)):
        m = n // gcd(n, j)
        weights.append(Fraction(int(mobius(m)), int(totient(m))))
    return tuple(weights)


@lru_cache(maxsize=None)
def _embedding_matrix(d: int, n: int) -> Matrix:
    """Columns are the images of zeta_d^j, j < phi(d), inside Q(zeta_n)."""
    cols = [_reduce(n, [(j * (n // d), Fraction(1))]) for j in range(field_degree(d))]
    return Matrix(
        field_degree(n),
        len(cols),
        lambda r, c: Rational(cols[c][r].numerator, cols[c][r].denominator),
    )


def _solve_in_subfield(d: int, n: int, coeffs: Tuple[Fraction, ...]) -> Optional[Tuple[Fraction, ...]]:
    target = Matrix([Rational(c.numerator, c.denominator) for c in coeffs])
    try:
        solution, params = _embedding_matrix(d, n).gauss_jordan_solve(target)
    except ValueError:
        return None
    if params.shape[0]:
        return None
    return tuple(Fraction(int(v.p), int(v.q)) for v in solution)


def _as_fraction(value: Rationalish) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise DomainError(f"not an exact rational: {value!r}")


class Cyclotomic:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Tuple[Fraction, ...]):
        if conductor < 1:
            raise DomainError(f"conductor must be positive, got {conductor}")
        if len(coeffs) != field_degree(conductor):
            raise DomainError(f"Q(zeta_{conductor}) needs {field_degree(conductor)} coefficients")
        self.conductor = conductor
        self.coeffs = coeffs

    # ─── Constructors ────────────────────────────────────────────
    @classmethod
    def rational(cls, value: Rationalish, conductor: int = 1) -> "Cyclotomic":
        coeffs = [Fraction(0)] * field_degree(conductor)
        coeffs[0] = _as_fraction(value)
        return cls(conductor, tuple(coeffs))

    @classmethod
    def zeta(cls, n: int, power: int = 1) -> "Cyclotomic":
        """zeta_n ** power."""
        return cls(n, _reduce(n, [(power, Fraction(1))]))

    @classmethod
    def from_powers(cls, n: int, pairs: Iterable[Tuple[int, Rationalish]]) -> "Cyclotomic":
        """Sum of c * zeta_n^j over (j, c) pairs."""
        return cls(n, _reduce(n, ((j, _as_fraction(c)) for j, c in pairs)))

    # ─── Predicates ──────────────────────────────────────────────
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return self.coeffs[0]

    # ─── Conductors ──────────────────────────────────────────────
    def embed(self, conductor: int) -> "Cyclotomic":
        """Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N)."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise DomainError(f"cannot embed Q(zeta_{self.conductor}) into Q(zeta_{conductor})")
        if self.is_rational():
            return Cyclotomic.rational(self.coeffs[0], conductor)
        factor = conductor // self.conductor
        return Cyclotomic(conductor, _reduce(conductor, ((j * factor, c) for j, c in enumerate(self.coeffs))))

    def minimal(self) -> "Cyclotomic":
        """Same value in the smallest Q(zeta_d) that contains it."""
        if self.is_rational():
            return Cyclotomic.rational(self.coeffs[0])
        n = self.conductor
        for d in divisors(n):
            d = int(d)
            if d == n:
                break
            if d % 4 == 2:
                continue  # Q(zeta_d) = Q(zeta_{d/2}) was already tried
            solution = _solve_in_subfield(d, n, self.coeffs)
            if solution is not None:
                return Cyclotomic(d, solution)
        return self

    @staticmethod
    def _lift(a: "Cyclotomic", b: "Cyclotomic") -> Tuple["Cyclotomic", "Cyclotomic"]:
        if a.conductor == b.conductor:
            return a, b
        if a.is_rational():
            return Cyclotomic.rational(a.coeffs[0], b.conductor), b
        if b.is_rational():
            return a, Cyclotomic.rational(b.coeffs[0], a.conductor)
        m = lcm(a.conductor, b.conductor)
        return a.embed(m), b.embed(m)

    @staticmethod
    def _coerce(other) -> Optional["Cyclotomic"]:
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(other)
        return None

    # ─── Arithmetic ──────────────────────────────────────────────
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._lift(self, other)
        return Cyclotomic(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value: Rationalish) -> "Cyclotomic":
        value = _as_fraction(value)
        return Cyclotomic(self.conductor, tuple(x * value for x in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_rational():
            return self.scale(other.coeffs[0])
        if self.is_rational():
            return other.scale(self.coeffs[0])
        a, b = self._lift(self, other)
        pairs = [
            (i + j, x * y)
            for i, x in enumerate(a.coeffs) if x
            for j, y in enumerate(b.coeffs) if y
        ]
        return Cyclotomic(a.conductor, _reduce(a.conductor, pairs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        n = self.conductor
        if self.is_zero():
            raise DomainError(f"division by zero in Q(zeta_{n})")
        nonzero = [(j, c) for j, c in enumerate(self.coeffs) if c]
        if len(nonzero) == 1:
            j, c = nonzero[0]
            return Cyclotomic(n, _reduce(n, [(-j, 1 / c)]))
        num = Poly([Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)], _z, domain=QQ)
        mod = Poly(cyclotomic_poly(n, _z), _z, domain=QQ)
        inv = num.invert(mod)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return Cyclotomic(n, _reduce(n, enumerate(coeffs)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "Cyclotomic":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.rational(1, self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ─── Comparison ──────────────────────────────────────────────
    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        a, b = self._lift(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        return hash(sum((c * w for c, w in zip(self.coeffs, _trace_weights(self.conductor))), Fraction(0)))

    # ─── Text ────────────────────────────────────────────────────
    def power_terms(self) -> List[Tuple[Fraction, int, int]]:
        """(coefficient, conductor, exponent) triples on the minimal conductor."""
        m = self.minimal()
        return [(c, m.conductor, j) for j, c in enumerate(m.coeffs) if c]

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {[str(c) for c in self.coeffs]})"
