# tests/test_dga.py
import pytest

from dga import CurvedDGA, trace
from errors import DomainError, UnsupportedOperation
from groups import AlgebraElem
from scalars import Scalar, ZERO
from torus import TorusForm


def test_embedding_is_multiplicative(z4):
    dga = z4.untwisted_dga
    group = z4.group
    r = group.index("r")
    a = AlgebraElem.element(group, r, (1, 0)) + AlgebraElem.identity(group, 2)
    b = AlgebraElem.element(group, r, (0, -1), 3) + AlgebraElem.element(group, 0, (1, 1))
    assert dga.embed(a * b) == dga.embed(a) * dga.embed(b)


def test_embedding_rejects_foreign_elements(z4, trivial):
    with pytest.raises(DomainError):
        z4.untwisted_dga.embed(AlgebraElem.element(trivial.group, 0, (0, 0)))


def test_unit_element(z4):
    dga = z4.twisted_dga
    a = dga.element(z4.group.index("r"), TorusForm.dx(2, 0, k=(1, 0)))
    assert dga.unit_element() * a == a
    assert a * dga.unit_element() == a


def test_differential_of_the_unit_vanishes(z4):
    dga = z4.twisted_dga
    assert dga.differential(dga.unit_element()).is_zero()


def test_theta_on_the_unit_is_the_curvature(z4):
    dga = z4.twisted_dga
    one = dga.unit_element()
    curvature = dga.element(0, dga.curvature())
    assert dga.theta_left(one) == curvature
    assert dga.theta_right(one) == curvature


def test_theta_on_the_circle_unit_is_unsupported(circle):
    dga = circle.twisted_dga
    with pytest.raises(UnsupportedOperation):
        dga.theta_left(dga.unit_element())


def test_untwisted_dga_is_flat(z4):
    dga = z4.untwisted_dga
    assert dga.curvature().is_zero()
    assert not dga.delta()
    a = dga.element(1, TorusForm.dx(2, 1, k=(0, 1)))
    assert dga.theta_commutator(a).is_zero()


def test_theta_on_the_untwisted_circle_algebra(circle):
    dga = circle.untwisted_dga
    form = TorusForm.dx(2, 0, k=(1, 0))
    a = dga.element(2, form)
    # g-mode 2, weight (1, 0).(1, 1) = 1
    assert dga.theta_right(a) == dga.element(2, form.scale(Scalar.tau(1, -2)), u_degree=1)
    assert dga.theta_left(a) == dga.element(2, form.scale(Scalar.tau(1, -1)), u_degree=1)
    assert dga.theta_commutator(a) == dga.element(2, form.scale(Scalar.tau(1, 1)), u_degree=1)


def test_describe(z4):
    assert z4.twisted_dga.describe().startswith("twisted algebra")
    assert CurvedDGA.untwisted(z4.group).describe().startswith("untwisted algebra")


# ─── Traces ──────────────────────────────────────────────────────
def test_trace_variants_are_checked(z4, circle):
    a = z4.twisted_dga.unit_element()
    with pytest.raises(DomainError):
        trace(a, "plain")
    with pytest.raises(DomainError):
        trace(a, "gamma", 1)
    with pytest.raises(DomainError):
        trace(a, "nonsense")
    with pytest.raises(DomainError):
        trace(circle.twisted_dga.zero(), "gamma", -1)


def test_twisted_trace_reads_the_unit_component(z4):
    dga = z4.twisted_dga
    top = dga.element(0, TorusForm.dx(2, 0, 1, coef=3))
    moved = dga.element(z4.group.index("r"), TorusForm.dx(2, 0, 1, coef=3))
    assert trace(top) == Scalar.of(3)
    assert trace(moved) == ZERO


def test_point_trace_counts_the_unit(z2_point):
    dga = z2_point.twisted_dga
    assert trace(dga.unit_element(5)) == Scalar.of(5)


def test_gamma_trace_differentiates_in_u(circle):
    dga = circle.twisted_dga
    a = dga.element(0, TorusForm.dx(2, 0, 1), u_degree=1)
    # rank 2 identity, one u-derivative
    assert trace(a, "gamma", 1) == Scalar.of(2)
    assert trace(a, "gamma", 0) == ZERO


def test_gamma_trace_of_degree_one_on_a_line_bundle(circle):
    dga = circle.untwisted_dga
    a = dga.element(0, TorusForm.dx(2, 0, 1), u_degree=1)
    assert trace(a, "gamma", 1) == Scalar.of(1)
    assert trace(dga.element(1, TorusForm.dx(2, 0, 1)), "gamma", 1) == ZERO


# ─── Suites on finite scenarios ──────────────────────────────────
@pytest.mark.slow
@pytest.mark.parametrize("name", ["z4", "z2_flip", "z2_shift"])
def test_dga_suite_passes_on_finite_scenarios(request, check_results, name):
    results = check_results(request.getfixturevalue(name), "dga")
    assert {r.status for r in results.values()} == {"pass"}
    assert "dga.untwisted.flat" in results


def test_traces_suite_passes_on_z4(check_results, z4):
    results = check_results(z4, "traces")
    assert set(results) == {
        f"traces.{tag}.{variant}.{kind}"
        for tag, variant in (("untwisted", "plain"), ("twisted", "twisted"))
        for kind in ("graded", "closed", "theta")
    }
    assert all(r.status == "pass" for r in results.values())


def test_dga_suite_on_the_circle(check_results, circle):
    results = check_results(circle, "dga")
    assert {r.status for r in results.values()} == {"pass", "skipped"}
    assert all(results[f"dga.untwisted.{kind}"].status == "pass"
               for kind in ("leibniz", "square", "bianchi-left", "bianchi-right", "associativity", "unit"))
    assert results["dga.twisted.unit"].status == "pass"
    assert results["dga.untwisted.unit"].status == "pass"
    assert results["dga.untwisted.flat"].status == "skipped"


def test_plain_traces_on_the_circle(check_results, circle):
    results = check_results(circle, "traces")
    for kind in ("graded", "closed", "theta"):
        assert results[f"traces.untwisted.plain.{kind}"].status == "pass"
