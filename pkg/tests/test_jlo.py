# tests/test_jlo.py
from fractions import Fraction

import pytest

from errors import DomainError, UnsupportedOperation
from groups import AlgebraElem
from jlo import (
    Cochain,
    SimplexMonomial,
    ascending_simplex_integrate,
    chern_family,
    chern_invariant_simplified,
    chern_twisted_closed,
    chern_untwisted_top,
    cochain_B,
    cochain_b,
    compositions,
    jlo_generic,
    simplex_integrate,
)
from scalars import Scalar, ZERO


# ─── Simplices ───────────────────────────────────────────────────
def test_simplex_integrals():
    assert simplex_integrate([0, 0, 0]) == Fraction(1, 2)
    assert simplex_integrate([1, 1]) == Fraction(1, 6)
    assert simplex_integrate([2]) == 1
    assert SimplexMonomial((1, 2)).integrate() == Fraction(1, 12)
    assert SimplexMonomial((1, 2)).dimension == 1


def test_ascending_simplex():
    assert ascending_simplex_integrate([0, 0]) == Fraction(1, 2)
    assert ascending_simplex_integrate([1]) == Fraction(1, 2)
    assert ascending_simplex_integrate([]) == 1


def test_simplex_rejects_bad_exponents():
    with pytest.raises(DomainError):
        simplex_integrate([])
    with pytest.raises(DomainError):
        simplex_integrate([1, -1])
    with pytest.raises(DomainError):
        SimplexMonomial((-1,))


def test_compositions():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(1, 0)) == []
    assert len(list(compositions(3, 3))) == 10


# ─── Cochains ────────────────────────────────────────────────────
def test_cochain_arity_and_normalization(z4):
    group = z4.group
    constant = Cochain(2, lambda xs: Scalar.of(1), "one")
    a = AlgebraElem.element(group, 0, (1, 0))
    assert constant(a, a) == Scalar.of(1)
    assert constant(a, AlgebraElem.identity(group)) == ZERO
    with pytest.raises(DomainError):
        constant(a)
    with pytest.raises(DomainError):
        Cochain(-1, lambda xs: ZERO)


def test_b_and_B_shift_arity():
    phi = Cochain(3, lambda xs: ZERO)
    assert cochain_b(phi).arity == 4
    assert cochain_B(phi).arity == 2
    assert cochain_B(Cochain(1, lambda xs: ZERO)).arity == 0
    with pytest.raises(DomainError):
        cochain_B(Cochain(2, lambda xs: ZERO, normalized=False))


def test_cochain_linear_structure(z4):
    a = AlgebraElem.element(z4.group, 0, (0, 0), 3)
    phi = Cochain(1, lambda xs: Scalar.of(2), "two")
    assert (phi + phi.scale(3))(a) == Scalar.of(8)
    with pytest.raises(DomainError):
        phi + Cochain(2, lambda xs: ZERO)


# ─── Characters ──────────────────────────────────────────────────
def untwisted_tuple(scenario):
    group = scenario.group
    return [AlgebraElem.element(group, 0, k) for k in [(-1, -1), (1, 0), (0, 1)]]


def test_untwisted_top_value(trivial):
    dga = trivial.untwisted_dga
    xs = untwisted_tuple(trivial)
    # a_0 da_1 da_2 = tau^2 dx_1 dx_2, divided by 2!
    assert chern_untwisted_top(dga)(*xs) == Scalar.tau(2, Fraction(1, 2))
    assert jlo_generic(dga, 2)(*xs) == Scalar.tau(2, Fraction(1, 2))


def test_untwisted_top_needs_untwisted_algebra(trivial):
    with pytest.raises(DomainError):
        chern_untwisted_top(trivial.twisted_dga)


def test_wrong_parity_vanishes(trivial):
    xs = untwisted_tuple(trivial)[:2]
    assert jlo_generic(trivial.twisted_dga, 1)(*xs) == ZERO


def test_untwisted_character_is_concentrated(trivial):
    a = AlgebraElem.element(trivial.group, 0, (0, 0), 5)
    assert jlo_generic(trivial.untwisted_dga, 0)(a) == ZERO


def test_family_degrees(z4, circle):
    assert sorted(chern_family(z4.twisted_dga)) == [0, 2]
    assert sorted(chern_family(circle.twisted_dga, "gamma", 1)) == [0, 2, 4]


def test_closed_form_is_finite_only(circle):
    with pytest.raises(UnsupportedOperation):
        chern_twisted_closed(circle.twisted_dga, 2)


def test_simplified_character_needs_invariance(z4):
    with pytest.raises(DomainError):
        chern_invariant_simplified(z4.twisted_dga, 2)
    assert chern_invariant_simplified(z4.invariant_dga, 2).arity == 3


def test_point_character_is_the_trace(z4_point):
    dga = z4_point.twisted_dga
    a = AlgebraElem.element(z4_point.group, 0, (), 3) + AlgebraElem.identity(z4_point.group, 2)
    assert jlo_generic(dga, 0)(a) == Scalar.of(5)
    assert chern_twisted_closed(dga, 0)(a) == Scalar.of(5)


# ─── Suite ───────────────────────────────────────────────────────
@pytest.mark.parametrize("name", ["z2_point", "z4_point"])
def test_jlo_suite_on_points(request, check_results, name):
    results = check_results(request.getfixturevalue(name), "jlo")
    assert set(results) == {"jlo.cocycle-k0", "jlo.untwisted-top"}
    assert all(r.status == "pass" for r in results.values())


@pytest.mark.slow
def test_jlo_suite_on_z4(check_results, z4):
    results = check_results(z4, "jlo")
    assert set(results) == {"jlo.cocycle-k0", "jlo.cocycle-k2", "jlo.concentration-k0", "jlo.untwisted-top"}
    assert all(r.status == "pass" for r in results.values())
