# tests/test_getzler.py
from fractions import Fraction

import pytest

from errors import DomainError, UnsupportedOperation
from getzler import (
    CircleCylChain,
    GetzChain,
    GetzCochain,
    c_cochain,
    chern_weil,
    getzler_chern,
    hkr,
    is_cyclically_normalized,
    pair,
    pairing_sign,
    point_pairing,
    psi,
    psi3,
    psi3_circle,
    series_coefficients,
)
from groups import AlgebraElem
from harness import build_suite, run_check
from homology import BarChain, CylChain
from scalars import Scalar
from torus import TorusForm


# ─── HKR and Psi_3 ───────────────────────────────────────────────
def test_hkr():
    assert hkr(2, [(1, 0), (0, 1)]) == TorusForm.dx(2, 1, coef=Scalar.tau(), k=(1, 1))
    assert hkr(2, [(0, 0), (1, 0), (0, 1)]) == TorusForm.dx(2, 0, 1, coef=Scalar.tau(2, Fraction(1, 2)), k=(1, 1))
    assert hkr(2, [(2, 0)], 3) == TorusForm.mode(2, (2, 0), 3)


def test_psi3_keeps_tuples_with_product_e(z4):
    group = z4.group
    r, r3 = group.index("r"), group.index("r*r*r")
    image = psi3(CylChain.single(group, (r, r3), ((1, 0), (0, 1))))
    assert image.tuples() == [(r3,)]
    assert image.form_at((r3,)) == TorusForm.dx(2, 1, coef=Scalar.tau(), k=(1, 1))
    assert psi3(CylChain.single(group, (r, r), ((1, 0), (0, 1)))).is_zero()


def test_psi_of_trivial_group_is_hkr(trivial):
    group = trivial.group
    modes = [(-1, -1), (1, 0), (0, 1)]
    x = BarChain.single(group, [(0, k) for k in modes])
    assert psi(x, 0).form_at(()) == hkr(2, modes)


# ─── Characters ──────────────────────────────────────────────────
def test_chern_weil_of_line_bundle(trivial):
    # F = d(e_(0,1) dx_1) = -tau e_(0,1) dx_1 dx_2
    expected = TorusForm.constant(2) + TorusForm.dx(2, 0, 1, coef=Scalar.tau(1, -1), k=(0, 1))
    assert chern_weil(trivial.connection) == expected
    assert getzler_chern(trivial.connection).form_at(()) == expected


def test_invariant_connection_character_is_normalized(z4):
    character = getzler_chern(z4.invariant_connection)
    assert is_cyclically_normalized(character) == (True, None)
    assert is_cyclically_normalized(character, include_empty=True) == (False, ())
    assert character.has_cyclic_form()


def test_getzler_character_is_finite_only(circle):
    with pytest.raises(DomainError):
        getzler_chern(circle.connection)


# ─── Pairing ─────────────────────────────────────────────────────
def test_pairing_sign():
    assert pairing_sign(0, 3, 2) == 1
    assert pairing_sign(1, 0, 2) == -1
    assert pairing_sign(2, 1, 2) == -1
    assert pairing_sign(2, 0, 2) == -1


def test_pair_matches_complementary_degrees(z4):
    group = z4.group
    r = group.index("r")
    alpha = GetzCochain(group).embed((r,), TorusForm.dx(2, 1, coef=2))
    beta = GetzChain(group).embed((r,), TorusForm.dx(2, 0, k=(0, 0)))
    # 2 dx_2 ^ dx_1 = -2 dx_1 dx_2, sign (-1)^{1 (2 + 1) + 1} = 1
    assert pair(alpha, beta) == Scalar.of(-2)
    assert pair(alpha, GetzChain(group).embed((0,), TorusForm.dx(2, 0))) == Scalar.of(0)


def test_pair_rejects_mixed_groups(z4, trivial):
    with pytest.raises(DomainError):
        pair(GetzCochain(z4.group), GetzChain(trivial.group))


def test_point_pairing(z2_point, z4):
    group = z2_point.group
    f = AlgebraElem.element(group, 0, (), 3) + AlgebraElem.identity(group)
    assert point_pairing(Fraction(2), f) == Scalar.of(8)
    character = getzler_chern(z2_point.connection)
    assert c_cochain(character, 1)(f) == Scalar.of(4)
    with pytest.raises(DomainError):
        point_pairing(Fraction(1), AlgebraElem.identity(z4.group))


# ─── Unreduced cochains ──────────────────────────────────────────
def test_unreduced_cochains_keep_unit_slots(z4):
    group = z4.group
    terms = {((0,), (0,), (1, 0)): Scalar.of(1), ((1,), (0,), (1, 0)): Scalar.of(2)}
    alpha = GetzCochain(group, terms)
    assert alpha.tuples() == [(1,)]
    full = GetzCochain(group, terms, normalized=False)
    assert full.tuples() == [(0,), (1,)]
    assert alpha.unreduced().terms == alpha.terms
    assert not alpha.unreduced().normalized
    with pytest.raises(DomainError):
        alpha + full


def test_unreduced_d_bar_squares_to_zero(z4):
    full = GetzCochain(z4.group, normalized=False).embed((0,), TorusForm.dx(2, 1, k=(1, 0)))
    once = full.d_bar()
    # the faces at (e, e) leave one copy of the form
    assert once.form_at((0, 0)) == TorusForm.dx(2, 1, k=(1, 0))
    assert once.d_bar().is_zero()
    assert (full.d().d_bar() + full.d_bar().d()).is_zero()


def test_unreduced_square_check(config, z2_flip):
    check = next(c for c in build_suite(z2_flip, "bridge") if c.check_id == "bridge.unreduced-square")
    assert run_check(check, z2_flip, 5, config).status == "pass"


# ─── Circle jets ─────────────────────────────────────────────────
def test_series_coefficients():
    assert series_coefficients(0, [], 2) == [1, 0, 0]
    assert series_coefficients(1, [], 2) == [1, 1, Fraction(1, 2)]
    assert series_coefficients(0, [1], 1) == [1, Fraction(-1, 2)]


def test_circle_psi3_intertwines_horizontal_operators(circle):
    group = circle.group
    x = CircleCylChain.single(group, 1, [(1, 0), (0, 1)]) + CircleCylChain.single(group, 0, [(1, -1), (1, 1)], 2)
    for order in (1, 2):
        assert psi3_circle(x, order).b_h() == psi3_circle(x.b_h(), order)
        assert psi3_circle(x, order).B_h() == psi3_circle(x.B_h(), order)


def test_circle_vertical_B_is_unsupported(circle):
    x = CircleCylChain.single(circle.group, 0, [(1, 0), (0, 1)])
    with pytest.raises(UnsupportedOperation):
        psi3_circle(x, 1).B_v()


# ─── Suites ──────────────────────────────────────────────────────
@pytest.mark.slow
def test_bridge_suite_on_z4(check_results, z4):
    results = check_results(z4, "bridge")
    for check_id in ("bridge.psi3", "bridge.total-square", "bridge.pairing", "bridge.c-map", "bridge.unreduced-square"):
        assert results[check_id].status == "pass"
    assert results["bridge.circle-psi3"].status == "skipped"


def test_bridge_suite_on_the_circle(check_results, circle):
    results = check_results(circle, "bridge")
    assert results["bridge.circle-psi3"].status == "pass"
    assert results["bridge.circle-vertical-B"].status == "skipped"
    assert results["bridge.psi3"].status == "skipped"


def test_reductions_on_the_trivial_group(check_results, trivial):
    results = check_results(trivial, "reductions")
    for check_id in ("reductions.trivial-hkr", "reductions.trivial-chern-weil", "reductions.trivial-pairing"):
        assert results[check_id].status == "pass"
    assert results["reductions.point-trace"].status == "skipped"


@pytest.mark.parametrize("name", ["z2_point", "z4_point"])
def test_reductions_on_points(request, check_results, name):
    results = check_results(request.getfixturevalue(name), "reductions")
    assert results["reductions.point-trace"].status == "pass"
    assert results["reductions.point-pairing"].status == "pass"
    assert results["reductions.trivial-hkr"].status == "skipped"
