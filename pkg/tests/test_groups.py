# tests/test_groups.py
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from errors import ValidationError
from groups import AlgebraElem, CircleGroup, FiniteGroup, GroupFun
from scalars import Scalar, ZERO
from torus import AffineMap, TorusForm

rotation = AffineMap.of([[0, -1], [1, 0]])
z4 = FiniteGroup.generated_by(2, {"r": rotation})

elements = st.integers(0, 3)
modes = st.tuples(st.integers(-1, 1), st.integers(-1, 1))
coefs = st.sampled_from([1, -1, 2, Fraction(1, 2)])


@st.composite
def algebra_elements(draw, unit=False):
    a = AlgebraElem(z4)
    for _ in range(draw(st.integers(1, 2))):
        a = a + AlgebraElem.element(z4, draw(elements), draw(modes), draw(coefs))
    if unit:
        a = a + AlgebraElem.identity(z4, draw(coefs))
    return a


# ─── Finite groups ───────────────────────────────────────────────
def test_generated_group():
    assert z4.order == 4
    assert z4.labels == ("e", "r", "r*r", "r*r*r")
    assert z4.is_abelian()
    r = z4.index("r")
    assert z4.product([r, r, r, r]) == 0
    assert z4.inv(r) == z4.index("r*r*r")
    assert z4.generator_words == {"r": r}


def test_trivial_group():
    g = FiniteGroup.trivial(3)
    assert g.order == 1 and g.dim == 3
    assert g.conductor == 1


def test_conductor_of_half_translation():
    g = FiniteGroup.generated_by(2, {"t": AffineMap.of([[1, 0], [0, 1]], ["1/2", "0"])})
    assert g.order == 2
    assert g.conductor == 2


def test_non_associative_table_is_rejected():
    table = [[0, 1, 2], [1, 0, 1], [2, 2, 0]]
    with pytest.raises(ValidationError, match="not associative"):
        FiniteGroup(["e", "a", "b"], table, [AffineMap.identity(1)] * 3)


def test_action_must_be_a_homomorphism():
    table = [[0, 1], [1, 0]]
    with pytest.raises(ValidationError, match="homomorphism"):
        FiniteGroup(["e", "s"], table, [AffineMap.identity(2), rotation])


def test_unknown_label():
    with pytest.raises(ValidationError):
        z4.index("q")


def test_group_action_on_forms():
    r = z4.index("r")
    w = TorusForm.dx(2, 0, k=(1, 0))
    # dx_1 -> dx_2 and e_(1,0) -> e_(0,1) under the rotation
    assert z4.act(r, w) == TorusForm.dx(2, 1, k=(0, 1))


# ─── Convolution algebra ─────────────────────────────────────────
@given(algebra_elements(unit=True), algebra_elements(), algebra_elements(unit=True))
def test_convolution_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(algebra_elements())
def test_adjoined_unit(a):
    one = AlgebraElem.identity(z4)
    assert one * a == a
    assert a * one == a


def test_basis_product_twists_by_the_action():
    r = z4.index("r")
    a = AlgebraElem.element(z4, r, (0, 0))
    b = AlgebraElem.element(z4, r, (1, 0))
    product = a * b
    assert product.support() == [z4.index("r*r")]
    assert product.at(z4.index("r*r")) == TorusForm.mode(2, (0, 1))


def test_circle_convolution_selects_matching_modes():
    circle = CircleGroup([1, 1])
    a = AlgebraElem.element(circle, 1, (0, 0))
    b = AlgebraElem.element(circle, 0, (1, 0))
    c = AlgebraElem.element(circle, 0, (0, 0))
    # g - h + weight(b) = 1 - 0 + 1 = 2, the inner integral vanishes
    assert (a * b).is_zero()
    assert (a * c).is_zero()
    assert AlgebraElem.element(circle, 1, (0, 0)) * AlgebraElem.element(circle, 2, (1, 0)) == \
        AlgebraElem.element(circle, 2, (1, 0))


def test_circle_weights():
    circle = CircleGroup([1, 1])
    assert circle.weight((2, -1)) == 1
    with pytest.raises(ValidationError):
        CircleGroup([0, 0])


def test_smooth_part_drops_unit():
    a = AlgebraElem.identity(z4, 3) + AlgebraElem.element(z4, 1, (1, 1))
    assert a.smooth_part() == AlgebraElem.element(z4, 1, (1, 1))
    assert a.unit == Scalar.of(3)
    assert a.smooth_part().unit == ZERO


def test_circle_symbolic_action_matches_the_translation():
    circle = CircleGroup([1, 1])
    w = TorusForm.mode(2, (1, 0)) + TorusForm.dx(2, 1, k=(1, 1))
    parts = circle.act_symbolic(w)
    assert parts == {1: TorusForm.mode(2, (1, 0)), 2: TorusForm.dx(2, 1, k=(1, 1))}
    # at g = 1/4 the weights 1 and 2 pick up i and -1
    expected = parts[1].scale(Scalar.zeta(4, 1)) + parts[2].scale(-1)
    assert circle.act_at(Fraction(1, 4), w) == expected
    assert circle.act_at(Fraction(0), w) == w


# ─── Haar integration ────────────────────────────────────────────
def test_haar_integral_of_a_constant_on_z2():
    z2 = FiniteGroup.generated_by(2, {"s": AffineMap.of([[-1, 0], [0, -1]])})
    c = TorusForm.mode(2, (1, 0), 3)
    f = GroupFun(z2, {g: c for g in z2.elements()})
    assert f.haar_integrate() == c.scale(2)
    assert GroupFun(z2).haar_integrate(ZERO) == ZERO


def test_circle_haar_integral_keeps_the_zero_mode():
    circle = CircleGroup([1, 0])
    f = GroupFun(circle, {0: Scalar.of(5), 2: Scalar.of(7), -1: Scalar.of(1)})
    assert f.haar_integrate(ZERO) == Scalar.of(5)
    assert GroupFun(circle, {3: Scalar.of(1)}).haar_integrate(ZERO) == ZERO


@given(st.dictionaries(elements, coefs.map(Scalar.of), max_size=4))
def test_haar_integral_is_invariant_under_inversion(values):
    f = GroupFun(z4, values)
    assert f.invert_argument().haar_integrate(ZERO) == f.haar_integrate(ZERO)
    assert f.invert_argument().invert_argument() == f


def test_circle_inversion_flips_the_modes():
    circle = CircleGroup([1, 1])
    f = GroupFun(circle, {0: Scalar.of(2), 1: Scalar.of(3)})
    flipped = f.invert_argument()
    assert flipped.at(-1) == Scalar.of(3)
    assert flipped.haar_integrate(ZERO) == f.haar_integrate(ZERO) == Scalar.of(2)
