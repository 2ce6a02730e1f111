# tests/test_scalars.py
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from errors import DomainError, ValidationError
from scalars import Cyclotomic, ONE, PolyU, Scalar, ZERO, field_degree, parse_scalar, sign

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
conductors = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])


@st.composite
def scalars(draw):
    value = ZERO
    for _ in range(draw(st.integers(1, 3))):
        n = draw(conductors)
        term = Scalar.zeta(n, draw(st.integers(0, n - 1))) * draw(rationals)
        value = value + term.times_tau(draw(st.integers(0, 2)))
    return value


# ─── Cyclotomic arithmetic ───────────────────────────────────────
def test_field_degrees():
    assert [field_degree(n) for n in (1, 2, 3, 4, 5, 8, 12)] == [1, 1, 2, 2, 4, 4, 4]


def test_roots_of_unity_relations():
    assert Scalar.zeta(4) * Scalar.zeta(4) == Scalar.of(-1)
    assert Scalar.zeta(2) == Scalar.of(-1)
    assert ONE + Scalar.zeta(3) + Scalar.zeta(3, 2) == ZERO
    assert Scalar.zeta(8, 2) == Scalar.zeta(4)
    assert Scalar.zeta(6) == -Scalar.zeta(3, 2)


def test_equal_values_hash_equally_across_conductors():
    assert hash(Scalar.zeta(4, 2)) == hash(Scalar.of(-1))
    assert hash(Scalar.zeta(12, 3)) == hash(Scalar.zeta(4))
    assert Cyclotomic.zeta(12, 4) == Cyclotomic.zeta(3)


def test_inverse_of_cyclotomic_unit():
    x = ONE + Scalar.zeta(5)
    assert x * x.inverse() == ONE
    assert Scalar.zeta(7, 3) ** -1 == Scalar.zeta(7, 4)


def test_inverse_rejects_zero_and_tau():
    with pytest.raises(DomainError):
        ZERO.inverse()
    with pytest.raises(DomainError):
        Scalar.tau().inverse()


@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO


def test_sign():
    assert [sign(k) for k in range(-2, 3)] == [1, -1, 1, -1, 1]


# ─── Text ────────────────────────────────────────────────────────
def test_canonical_text():
    value = Scalar.zeta(4) * Fraction(3, 2)
    assert value.times_tau(2).to_text() == "(3/2)*z4^1*tau^2"
    assert ZERO.to_text() == "0"
    assert Scalar.zeta(8, 2).to_text() == "1*z4^1"


@given(scalars())
def test_parse_inverts_text(value):
    assert parse_scalar(value.to_text()) == value


def test_parse_rejects_garbage():
    with pytest.raises(ValidationError):
        parse_scalar("2*w3^1")


# ─── Polynomials in u ────────────────────────────────────────────
def test_polyu_shift_and_gamma_evaluation():
    p = PolyU({0: Scalar.of(1), 2: Scalar.of(3)})
    assert p.shift(1).degree() == 3
    assert p.gamma_evaluate(2) == Scalar.of(6)
    assert p.gamma_evaluate(1) is None


def test_polyu_derivative_over_scalars():
    p = PolyU({1: Scalar.tau(), 3: Scalar.of(Fraction(1, 2))})
    assert p.derivative(1) == PolyU({0: Scalar.tau(), 2: Scalar.of(Fraction(3, 2))})
    assert p.derivative(3) == PolyU({0: Scalar.of(3)})
    assert p.derivative(4).is_zero()
    assert p.gamma_evaluate(3) == Scalar.of(3)


def test_scalar_scale():
    assert Scalar.zeta(4).scale(Fraction(2, 3)) == Scalar.zeta(4) * Fraction(2, 3)
    assert Scalar.tau().scale(0).is_zero()
