# tests/test_torus.py
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from errors import DomainError, ValidationError
from scalars import Scalar, ZERO
from torus import AffineMap, TangentVector, TorusForm, parse_form

DIM = 2
modes = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
coefs = st.sampled_from([1, -1, 2, Fraction(1, 2), Fraction(-1, 3)])
index_sets = st.sampled_from([(), (0,), (1,), (0, 1)])


@st.composite
def forms(draw, degree=None):
    form = TorusForm(DIM)
    for _ in range(draw(st.integers(1, 3))):
        indices = draw(index_sets) if degree is None else draw(
            st.sampled_from([I for I in [(), (0,), (1,), (0, 1)] if len(I) == degree])
        )
        form = form + TorusForm.dx(DIM, *indices, coef=draw(coefs), k=draw(modes))
    return form


vectors = st.builds(lambda a, b: TangentVector.of([a, b]), st.integers(-2, 2), st.integers(-2, 2))
rotation = AffineMap.of([[0, -1], [1, 0]])
shear = AffineMap.of([[1, 1], [0, 1]], ["1/2", "1/3"])


# ─── Exterior calculus ───────────────────────────────────────────
@given(forms())
def test_d_squares_to_zero(w):
    assert w.d().d().is_zero()


@given(forms(degree=1), forms())
def test_d_is_a_graded_derivation(a, b):
    assert a.wedge(b).d() == a.d().wedge(b) - a.wedge(b.d())


@given(forms(), vectors)
def test_cartan_formula(w, v):
    assert w.lie(v) == w.contract(v).d() + w.d().contract(v)


def test_wedge_anticommutes_on_one_forms():
    dx1, dx2 = TorusForm.dx(DIM, 0), TorusForm.dx(DIM, 1)
    assert dx1.wedge(dx2) == -dx2.wedge(dx1)
    assert dx1.wedge(dx1).is_zero()


def test_d_of_a_mode():
    e = TorusForm.mode(DIM, (1, -2))
    expected = TorusForm.dx(DIM, 0, coef=Scalar.tau(), k=(1, -2)) + TorusForm.dx(DIM, 1, coef=Scalar.tau(1, -2), k=(1, -2))
    assert e.d() == expected


@given(forms(degree=1))
def test_exact_top_forms_integrate_to_zero(w):
    assert w.d().integrate_top() == ZERO


def test_volume_form_integrates_to_one():
    assert TorusForm.dx(DIM, 0, 1).integrate_top() == Scalar.of(1)
    assert TorusForm.dx(DIM, 0, 1, k=(1, 0)).integrate_top() == ZERO


# ─── Affine maps ─────────────────────────────────────────────────
@pytest.mark.parametrize("f", [rotation, shear])
@given(w=forms())
def test_pullback_commutes_with_d(f, w):
    assert f.pullback(w.d()) == f.pullback(w).d()


@given(forms(), forms())
def test_pullback_is_multiplicative(a, b):
    assert shear.pullback(a.wedge(b)) == shear.pullback(a).wedge(shear.pullback(b))


@given(forms())
def test_composition_pulls_back_in_order(w):
    assert rotation.then(shear).pullback(w) == rotation.pullback(shear.pullback(w))


@given(forms(), vectors)
def test_contraction_with_pushed_vector(w, v):
    assert rotation.pullback(w).contract(v) == rotation.pullback(w.contract(rotation.push_vector(v)))


def test_half_translation_phase():
    half = AffineMap.of([[1, 0], [0, 1]], ["1/2", "0"])
    assert half.act_mode((1, 0)) == (Scalar.of(-1), (1, 0))
    assert half.act_mode((2, 5)) == (Scalar.of(1), (2, 5))
    assert half.conductor == 2


def test_rotation_has_order_four():
    g = rotation
    for _ in range(3):
        g = g.then(rotation)
    assert g == AffineMap.identity(DIM)


def test_rejects_non_invertible_and_orientation_reversing():
    with pytest.raises(DomainError):
        AffineMap.of([[2, 0], [0, 1]])
    with pytest.raises(DomainError):
        AffineMap.of([[0, 1], [1, 0]])


# ─── Text ────────────────────────────────────────────────────────
def test_form_text():
    w = TorusForm.dx(DIM, 0, 1, coef=Fraction(1, 2), k=(1, 0)) + TorusForm.mode(DIM, (0, 0), 3)
    assert w.to_text() == "3 * e[0,0] * dx{}\n(1/2) * e[1,0] * dx{1,2}"
    assert parse_form(DIM, w.to_text()) == w


def test_parse_form_errors():
    with pytest.raises(ValidationError):
        parse_form(DIM, "1 * e[1] * dx{1}")
    with pytest.raises(ValidationError):
        parse_form(DIM, "one * e[1,0]")
