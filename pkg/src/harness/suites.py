# harness/suites.py
"""
The verification suites. Each builder returns the checks of one suite for a
scenario; check functions yield Cases and never compare approximately.
"""
import logging
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterator, List

from bundle import EndForm, phase
from dga import trace
from errors import UnsupportedOperation
from getzler import (
    GetzChain,
    GetzCochain,
    c_cochain,
    c_map,
    chern_weil,
    getzler_chern,
    hkr,
    is_cyclically_normalized,
    pair,
    point_pairing,
    psi,
    psi3,
    psi3_circle,
)
from groups import AlgebraElem
from homology import ez_all, ez_homotopy, ez_pert, shuffle_nabla
from jlo import (
    chern_invariant_simplified,
    chern_twisted_closed,
    chern_untwisted_top,
    cochain_B,
    cochain_b,
    jlo_generic,
)
from scalars import Scalar, ZERO, sign
from torus import TangentVector, TorusForm

from .checks import Case, Check, CheckContext, tuple_label

logger = logging.getLogger(__name__)

PERTURBATION_STEPS = 2


# ─── Shared helpers ──────────────────────────────────────────────
def _dga(scenario, tag: str):
    return {
        "untwisted": scenario.untwisted_dga,
        "twisted": scenario.twisted_dga,
        "invariant": scenario.invariant_dga,
    }[tag]


def _top_degree(ctx: CheckContext) -> int:
    """Largest total degree sampled in the curved algebras."""
    return ctx.scenario.dim + (0 if ctx.scenario.is_finite else 2)


def _even_degrees(n: int) -> List[int]:
    """Cochain degrees k <= n of the parity of n."""
    return [k for k in range(n + 1) if (n - k) % 2 == 0]


def _vector(scenario) -> TangentVector:
    """Generator of the infinitesimal action; zero for finite groups."""
    if scenario.is_finite:
        return TangentVector.of([0] * scenario.dim)
    return scenario.group.vector


def _push(scenario, g, v: TangentVector) -> TangentVector:
    if scenario.is_finite:
        return scenario.group.push_vector(g, v)
    return v


def _group_derivative(scenario, omega: EndForm) -> EndForm:
    """Infinitesimal End(E) action: tau times the circle weight of each term."""
    if scenario.is_finite:
        return omega.zero()
    bundle = scenario.bundle
    return omega.map_terms(lambda key, c: [(key, c * Scalar.tau(1, bundle.weight(key)))])


def _cochain_cases(ctx: CheckContext, arity: int, lhs: Callable, rhs: Callable) -> Iterator[Case]:
    for xs in ctx.tuples(arity):
        yield Case(tuple_label(xs), lhs(xs), rhs(xs))


# ─── dga ─────────────────────────────────────────────────────────
def _dga_checks(tag: str) -> List[Check]:
    def pairs(ctx):
        s = ctx.sampler
        dga = _dga(ctx.scenario, tag)
        top = _top_degree(ctx)
        for _ in range(ctx.samples()):
            p, q = s.integer(0, top), s.integer(0, top)
            yield dga, p, s.eq_form(dga, p), q, s.eq_form(dga, q)

    def leibniz(ctx):
        for dga, p, a, _, b in pairs(ctx):
            D = dga.differential
            yield Case(f"a = {a.to_text()} ; b = {b.to_text()}",
                       D(a * b), D(a) * b + (a * D(b)).scale(sign(p)))

    def square(ctx):
        for dga, _, a, _, _ in pairs(ctx):
            yield Case(f"a = {a.to_text()}", dga.differential(dga.differential(a)), dga.theta_commutator(a))

    def bianchi_left(ctx):
        for dga, _, a, _, _ in pairs(ctx):
            yield Case(f"a = {a.to_text()}",
                       dga.differential(dga.theta_left(a)), dga.theta_left(dga.differential(a)))

    def bianchi_right(ctx):
        for dga, _, a, _, _ in pairs(ctx):
            yield Case(f"a = {a.to_text()}",
                       dga.differential(dga.theta_right(a)), dga.theta_right(dga.differential(a)))

    def associativity(ctx):
        s = ctx.sampler
        for dga, _, a, _, b in pairs(ctx):
            c = s.eq_form(dga, s.integer(0, _top_degree(ctx)))
            yield Case(f"a = {a.to_text()} ; b = {b.to_text()} ; c = {c.to_text()}", (a * b) * c, a * (b * c))

    def unit(ctx):
        for dga, _, a, _, _ in pairs(ctx):
            one = dga.unit_element()
            yield Case(f"1 * a, a = {a.to_text()}", one * a, a)
            yield Case(f"a * 1, a = {a.to_text()}", a * one, a)

    def flat(ctx):
        for dga, _, a, _, _ in pairs(ctx):
            yield Case(f"Theta_l a, a = {a.to_text()}", dga.theta_left(a), dga.zero())
            yield Case(f"Theta_r a, a = {a.to_text()}", dga.theta_right(a), dga.zero())
        dga = _dga(ctx.scenario, tag)
        yield Case("moment", dga.moment(), dga.zero_end())

    prefix = f"dga.{tag}"
    checks = [
        Check(f"{prefix}.leibniz", "curved algebra: D is a graded derivation of the convolution product", leibniz),
        Check(f"{prefix}.square", "curved algebra: D^2 = [Theta, -]", square),
        Check(f"{prefix}.bianchi-left", "curved algebra: D commutes with left Theta multiplication", bianchi_left),
        Check(f"{prefix}.bianchi-right", "curved algebra: D commutes with right Theta multiplication", bianchi_right),
        Check(f"{prefix}.associativity", "curved algebra: the convolution product is associative", associativity),
        Check(f"{prefix}.unit", "curved algebra: the adjoined unit is a two-sided unit", unit),
    ]
    if tag == "untwisted":
        checks.append(Check(f"{prefix}.flat", "untwisted algebra of a finite group: Theta and mu vanish",
                            flat, requires="finite"))
    return checks


def dga_suite(scenario) -> List[Check]:
    return _dga_checks("untwisted") + _dga_checks("twisted")


# ─── traces ──────────────────────────────────────────────────────
def _trace_checks(tag: str, variant: str, q: int) -> List[Check]:
    def tr(a):
        return trace(a, variant, q)

    def total(ctx):
        return ctx.scenario.dim + 2 * q

    def graded(ctx):
        s = ctx.sampler
        dga = _dga(ctx.scenario, tag)
        for _ in range(ctx.samples()):
            p = s.integer(0, total(ctx))
            g = s.group_key()
            a = s.eq_form(dga, p, g)
            b = s.eq_form(dga, total(ctx) - p, s.inverse_key(g))
            yield Case(f"a = {a.to_text()} ; b = {b.to_text()}",
                       tr(a * b), tr(b * a) * sign(p * (total(ctx) - p)))

    def closed(ctx):
        s = ctx.sampler
        dga = _dga(ctx.scenario, tag)
        if total(ctx) < 1:
            return
        for _ in range(ctx.samples()):
            a = s.eq_form(dga, total(ctx) - 1, 0 if s.integer(0, 1) else None)
            yield Case(f"a = {a.to_text()}", tr(dga.differential(a)), ZERO)

    def theta(ctx):
        s = ctx.sampler
        dga = _dga(ctx.scenario, tag)
        if total(ctx) < 2:
            return
        for _ in range(ctx.samples()):
            a = s.eq_form(dga, total(ctx) - 2, 0 if s.integer(0, 1) else None)
            yield Case(f"a = {a.to_text()}", tr(dga.theta_left(a)), tr(dga.theta_right(a)))

    prefix = f"traces.{tag}.{variant}" + (f"-q{q}" if variant == "gamma" else "")
    requires = "circle" if variant == "gamma" else "any"
    return [
        Check(f"{prefix}.graded", f"{variant} trace vanishes on graded commutators", graded, requires),
        Check(f"{prefix}.closed", f"{variant} trace vanishes on the image of D", closed, requires),
        Check(f"{prefix}.theta", f"{variant} trace does not see the side of Theta", theta, requires),
    ]


def traces_suite(scenario) -> List[Check]:
    if scenario.is_finite:
        return _trace_checks("untwisted", "plain", 0) + _trace_checks("twisted", "twisted", 0)
    checks = _trace_checks("untwisted", "plain", 0)
    for q in range(3):
        checks += _trace_checks("twisted", "gamma", q)
    return checks


# ─── claims ──────────────────────────────────────────────────────
def claims_suite(scenario) -> List[Check]:
    def forms(ctx, low: int = 0):
        s = ctx.sampler
        for _ in range(ctx.samples()):
            yield s.end_form(s.form_degree(low))

    def contraction(ctx):
        sc, s = ctx.scenario, ctx.sampler
        bundle = sc.bundle
        for omega in forms(ctx, 1):
            g = s.group_point()
            v = s.vector() if sc.is_finite else _vector(sc)
            yield Case(f"g = {g}, v = {v.components}, w = {omega.to_text()}",
                       bundle.end_action(g, omega).contract(v),
                       bundle.end_action(g, omega.contract(_push(sc, g, v))))

    def delta_cocycle(ctx):
        sc, s = ctx.scenario, ctx.sampler
        connection, bundle = sc.connection, sc.bundle
        for _ in range(ctx.samples()):
            g, h = s.group_point(), s.group_point()
            hg = sc.group.mul(h, g) if sc.is_finite else h + g
            yield Case(f"h = {h}, g = {g}", connection.delta(hg),
                       connection.delta(h) + bundle.end_action(h, connection.delta(g)))

    def covariant_action(ctx):
        sc, s = ctx.scenario, ctx.sampler
        connection, bundle = sc.connection, sc.bundle
        for omega in forms(ctx):
            g = s.group_point()
            moved = bundle.end_action(g, omega)
            yield Case(f"g = {g}, w = {omega.to_text()}", connection.d_nabla(moved),
                       bundle.end_action(g, connection.d_nabla(omega)) + connection.delta(g).commutator(moved))

    def covariant_square(ctx):
        connection = ctx.scenario.connection
        curvature = connection.curvature()
        for omega in forms(ctx):
            yield Case(f"w = {omega.to_text()}", connection.d_nabla(connection.d_nabla(omega)),
                       curvature.wedge(omega) - omega.wedge(curvature))

    def pulled_curvature(ctx):
        sc, s = ctx.scenario, ctx.sampler
        connection = sc.connection
        curvature = connection.curvature()
        for _ in range(ctx.samples()):
            g = s.group_point()
            delta = connection.delta(g)
            yield Case(f"g = {g}", sc.bundle.end_action(g, curvature),
                       curvature - connection.d_nabla(delta) + delta.wedge(delta))

    def moment_cartan(ctx):
        sc = ctx.scenario
        connection = sc.connection
        v = _vector(sc)
        mu = connection.moment()
        for omega in forms(ctx):
            d = connection.d_nabla
            yield Case(f"w = {omega.to_text()}",
                       d(omega.contract(v)) + d(omega).contract(v) - _group_derivative(sc, omega),
                       mu.wedge(omega) - omega.wedge(mu))

    def moment_action(ctx):
        sc, s = ctx.scenario, ctx.sampler
        connection = sc.connection
        mu = connection.moment()
        for _ in range(ctx.samples()):
            g = s.group_point()
            yield Case(f"g = {g}", sc.bundle.end_action(g, mu),
                       mu - connection.delta(g).contract(_vector(sc)))

    def eq_pairs(ctx):
        s = ctx.sampler
        dga = ctx.scenario.twisted_dga
        top = _top_degree(ctx)
        for _ in range(ctx.samples()):
            yield dga, s.eq_form(dga, s.integer(0, top)), s.eq_form(dga, s.integer(0, top))

    def theta_left(ctx):
        for dga, a, b in eq_pairs(ctx):
            label = f"a = {a.to_text()} ; b = {b.to_text()}"
            yield Case(label, dga.theta_left(a * b), dga.theta_left(a) * b)
            if ctx.scenario.is_finite:
                yield Case(label, dga.theta_left(a), dga.element(0, dga.curvature()) * a)

    def theta_right(ctx):
        for dga, a, b in eq_pairs(ctx):
            label = f"a = {a.to_text()} ; b = {b.to_text()}"
            yield Case(label, dga.theta_right(a * b), a * dga.theta_right(b))
            yield Case(label, dga.theta_right(a) * b, a * dga.theta_left(b))
            if ctx.scenario.is_finite:
                yield Case(label, dga.theta_right(a), a * dga.element(0, dga.curvature()))

    def covariant_leibniz(ctx):
        s = ctx.sampler
        connection = ctx.scenario.connection
        d = connection.d_nabla
        for _ in range(ctx.samples()):
            p = s.form_degree()
            omega, eta = s.end_form(p), s.end_form(s.form_degree())
            yield Case(f"w = {omega.to_text()} ; h = {eta.to_text()}",
                       d(omega.wedge(eta)), d(omega).wedge(eta) + omega.wedge(d(eta)).scale(sign(p)))

    def delta_derivative(ctx):
        sc = ctx.scenario
        connection = sc.connection
        lhs = EndForm(sc.bundle.rank, sc.dim)
        if not sc.is_finite:
            for w, part in connection.delta_modes().items():
                lhs = lhs + part.scale(Scalar.tau(1, w))
        rhs = -connection.d_nabla(connection.moment()) - connection.curvature().contract(_vector(sc))
        yield Case("derivative of delta at the unit", lhs, rhs)

    def circle_action(ctx):
        sc, s = ctx.scenario, ctx.sampler
        group = sc.group
        for _ in range(ctx.samples()):
            form = s.torus_form(s.form_degree())
            g = s.circle_point()
            moved = TorusForm(sc.dim)
            for w, part in group.act_symbolic(form).items():
                moved = moved + part.scale(phase(w * g))
            yield Case(f"g = {g}, w = {form.to_text()}", group.act_at(g, form), moved)

    return [
        Check("claims.contraction", "contraction intertwines with the End(E) action", contraction),
        Check("claims.delta-cocycle", "delta(hg) = delta(h) + h^*delta(g)", delta_cocycle),
        Check("claims.covariant-action", "d_nabla(g^*w) = g^*(d_nabla w) + [delta(g), g^*w]", covariant_action),
        Check("claims.covariant-square", "d_nabla^2 w = F w - w F", covariant_square),
        Check("claims.pulled-curvature", "g^*F = F - d_nabla delta(g) + delta(g)^2", pulled_curvature),
        Check("claims.moment-cartan", "covariant Cartan formula with the moment", moment_cartan),
        Check("claims.moment-action", "g^*mu = mu - iota_v delta(g)", moment_action),
        Check("claims.theta-left", "left Theta multiplication is a left module map", theta_left),
        Check("claims.theta-right", "right Theta multiplication is a right module map", theta_right),
        Check("claims.covariant-leibniz", "d_nabla is a graded derivation of the wedge product", covariant_leibniz),
        Check("claims.delta-derivative", "derivative of delta at the unit is -d_nabla mu - iota_v F", delta_derivative),
        Check("claims.circle-action", "g^*w is the sum of the weight parts w_k times e^{2 pi i k g}", circle_action,
              requires="circle"),
    ]


# ─── jlo ─────────────────────────────────────────────────────────
def jlo_suite(scenario) -> List[Check]:
    n = scenario.dim

    def cocycle(k: int, variant=None, q: int = 0):
        def fn(ctx):
            dga = ctx.scenario.twisted_dga
            tag = f"{variant or 'default'}.q{q}"
            b_part = cochain_b(jlo_generic(dga, k, variant, q))
            big_b_part = cochain_B(jlo_generic(dga, k + 2, variant, q))
            yield from _cochain_cases(
                ctx, k + 2,
                lambda xs: ctx.evaluate(f"bCh{k}.{tag}", b_part, xs)
                + ctx.evaluate(f"BCh{k + 2}.{tag}", big_b_part, xs),
                lambda xs: ZERO,
            )
        return fn

    def concentration(k: int):
        def fn(ctx):
            ch = jlo_generic(ctx.scenario.untwisted_dga, k)
            yield from _cochain_cases(ctx, k + 1, lambda xs: ctx.evaluate(f"Ch{k}.untwisted", ch, xs),
                                      lambda xs: ZERO)
        return fn

    def top(ctx):
        dga = ctx.scenario.untwisted_dga
        generic, closed = jlo_generic(dga, n), chern_untwisted_top(dga)
        yield from _cochain_cases(ctx, n + 1, lambda xs: ctx.evaluate(f"Ch{n}.untwisted", generic, xs),
                                  closed.evaluate)

    checks = [
        Check(f"jlo.cocycle-k{k}", "JLO family: b Ch^k + B Ch^(k+2) = 0", cocycle(k), cost=4)
        for k in _even_degrees(n)
    ]
    checks += [
        Check(f"jlo.concentration-k{k}", "untwisted character is concentrated in degree n", concentration(k), cost=2)
        for k in _even_degrees(n) if k < n
    ]
    checks.append(Check("jlo.untwisted-top", "untwisted top component is (1/n!) int a_0 da_1 .. da_n", top, cost=2))
    if not scenario.is_finite:
        checks += [
            Check(f"jlo.gamma-cocycle-k{k}", "JLO family for the degree 1 invariant polynomial is a cocycle",
                  cocycle(k, "gamma", 1), requires="circle", cost=8)
            for k in _even_degrees(n + 2)
        ]
    return checks


# ─── chern-compare ───────────────────────────────────────────────
def chern_compare_suite(scenario) -> List[Check]:
    n = scenario.dim

    def closed_form(k: int):
        def fn(ctx):
            dga = ctx.scenario.twisted_dga
            generic, closed = jlo_generic(dga, k), chern_twisted_closed(dga, k)
            yield from _cochain_cases(ctx, k + 1, lambda xs: ctx.evaluate(f"Ch{k}.twisted", generic, xs),
                                      lambda xs: ctx.evaluate(f"Ch{k}.closed", closed, xs))
        return fn

    def simplified(k: int):
        def fn(ctx):
            dga = ctx.scenario.invariant_dga
            generic, short = jlo_generic(dga, k), chern_invariant_simplified(dga, k)
            yield from _cochain_cases(ctx, k + 1, lambda xs: ctx.evaluate(f"Ch{k}.invariant", generic, xs),
                                      short.evaluate)
        return fn

    def main_theorem(k: int):
        def fn(ctx):
            if n % 2:
                raise UnsupportedOperation("odd-dimensional tori carry no even character to compare")
            sc = ctx.scenario
            image = c_cochain(getzler_chern(sc.invariant_connection), k + 1)
            generic = jlo_generic(sc.invariant_dga, k)
            yield from _cochain_cases(
                ctx, k + 1,
                lambda xs: ctx.evaluate(f"cCh{k}.invariant", image, xs),
                lambda xs: ctx.evaluate(f"Ch{k}.invariant", generic, xs) * sign(n // 2),
            )
        return fn

    def independence(ctx):
        sc, s = ctx.scenario, ctx.sampler
        twisted = jlo_generic(sc.twisted_dga, n)
        invariant = jlo_generic(sc.invariant_dga, n)
        for _ in range(ctx.samples()):
            modes = [s.mode() for _ in range(n)]
            first = tuple(-sum(k[i] for k in modes) for i in range(n))
            xs = [AlgebraElem.element(sc.group, 0, k, s.coefficient()) for k in [first] + modes]
            yield Case(tuple_label(xs), ctx.evaluate(f"Ch{n}.twisted", twisted, xs),
                       ctx.evaluate(f"Ch{n}.invariant", invariant, xs))

    def normalization(ctx):
        sc = ctx.scenario
        character = getzler_chern(sc.invariant_connection)
        ok, witness = is_cyclically_normalized(character)
        yield Case("cyclic normalization", (ok, witness), (True, None))
        if sc.group.is_abelian():
            yield Case("cyclic form", character.has_cyclic_form(), True)

    degrees = _even_degrees(n)
    checks = [Check(f"chern-compare.closed-form-k{k}", "closed-form twisted character equals the JLO formula",
                    closed_form(k), "finite", cost=4) for k in degrees]
    checks += [Check(f"chern-compare.invariant-k{k}",
                     "invariant-connection character equals (-1)^m/(k! m!) int tr F^m a_0 da_1 .. da_k",
                     simplified(k), "finite", cost=4) for k in degrees]
    checks += [Check(f"chern-compare.main-k{k}",
                     "c(Ch_G(E, nabla)) = (-1)^(n/2) Ch of the twisted algebra for invariant nabla",
                     main_theorem(k), "finite", cost=10) for k in degrees]
    checks.append(Check("chern-compare.independence", "top component does not depend on the connection",
                        independence, "finite", cost=4))
    checks.append(Check("chern-compare.normalization", "Getzler character is cyclically normalized",
                        normalization, "finite"))
    return checks


# ─── complexes ───────────────────────────────────────────────────
def complexes_suite(scenario) -> List[Check]:
    def bidegrees(ctx):
        s = ctx.sampler
        for _ in range(ctx.samples()):
            yield s.integer(0, 2), s.integer(0, 2)

    def cylindrical(ctx):
        s = ctx.sampler
        for p, q in bidegrees(ctx):
            x = s.cyl_chain(p, q)
            zero = x.zero()
            label = f"({p}, {q}) {x!r}"
            yield Case(f"b_h^2 {label}", x.b_h().b_h().normalize(), zero)
            yield Case(f"b_v^2 {label}", x.b_v().b_v().normalize(), zero)
            yield Case(f"B_h^2 {label}", x.B_h().B_h().normalize(), zero)
            yield Case(f"B_v^2 {label}", x.B_v().B_v().normalize(), zero)
            yield Case(f"[b_h, b_v] {label}", (x.b_h().b_v() + x.b_v().b_h()).normalize(), zero)
            yield Case(f"[B_h, B_v] {label}", (x.B_h().B_v() + x.B_v().B_h()).normalize(), zero)
            yield Case(f"[b_h, B_v] {label}", (x.b_h().B_v() + x.B_v().b_h()).normalize(), zero)
            yield Case(f"[b_v, B_h] {label}", (x.b_v().B_h() + x.B_h().b_v()).normalize(), zero)
            yield Case(f"[b_h, B_h] {label}", (x.b_h().B_h() + x.B_h().b_h()).normalize(),
                       (x - x.T_h()).normalize())
            yield Case(f"[b_v, B_v] {label}", (x.b_v().B_v() + x.B_v().b_v()).normalize(),
                       (x.T_h() - x).normalize())
            yield Case(f"T_h T_v {label}", x.T_v().T_h().normalize(), x)
            yield Case(f"(b + B)^2 {label}", x.total_differential().total_differential(), zero)

    def diagonal(ctx):
        s = ctx.sampler
        for _ in range(ctx.samples()):
            k = s.integer(0, 2)
            x = s.bar_chain(k)
            yield k, x

    def eilenberg_zilber(ctx):
        for k, bar in diagonal(ctx):
            x = bar.psi1()
            y = ez_all(x)
            zero = x.zero()
            h = ez_homotopy
            label = f"psi1 of {bar.to_text()}"
            yield Case(f"EZ b {label}", ez_all(x.b_diag()), y.total_b())
            yield Case(f"nabla b {label}", shuffle_nabla(y.total_b()), shuffle_nabla(y).b_diag())
            yield Case(f"nabla EZ - 1 {label}", shuffle_nabla(y) - x, h(x).b_diag() + h(x.b_diag()))
            yield Case(f"EZ nabla {label}", ez_all(shuffle_nabla(y)), y)
            yield Case(f"h h {label}", h(h(x)), zero)
            yield Case(f"EZ h {label}", ez_all(h(x)), zero)
            yield Case(f"h nabla {label}", h(shuffle_nabla(y)), zero)

    def psi1_chain_map(ctx):
        for _, x in diagonal(ctx):
            label = x.to_text()
            yield Case(f"b {label}", x.b().psi1(), x.psi1().b_diag())
            yield Case(f"B {label}", x.B().psi1(), x.psi1().B_diag())

    def perturbed(ctx):
        for _, bar in diagonal(ctx):
            x = bar.psi1()
            yield Case(f"psi1 of {bar.to_text()}",
                       ez_pert(x, PERTURBATION_STEPS).total_differential(),
                       ez_pert(x.b_diag() + x.B_diag(), PERTURBATION_STEPS))

    def circle_square(ctx):
        sc, s = ctx.scenario, ctx.sampler
        order = sc.jet_order
        for _ in range(ctx.samples()):
            q, j, p = s.integer(0, 2), s.integer(0, order), s.form_degree()
            alpha = s.circle_cochain(q, j, p, order)
            yield Case(alpha.to_text(), alpha.total_differential().total_differential(), alpha.zero())

    return [
        Check("complexes.cylindrical", "cylindrical complex: squares, anticommutators and cyclic orders",
              cylindrical, "finite", cost=4),
        Check("complexes.eilenberg-zilber", "EZ and shuffle maps: chain maps, EZ nabla = 1, nabla EZ - 1 = bh + hb",
              eilenberg_zilber, "finite", cost=4),
        Check("complexes.psi1", "Psi_1 is a chain map for b and B", psi1_chain_map, "finite", cost=2),
        Check("complexes.ez-pert", "perturbed EZ map is a chain map for b + B", perturbed, "finite", cost=8),
        Check("complexes.circle-cochains", "circle Getzler cochains: (iota + iota_bar + d + d_bar)^2 = 0",
              circle_square, "circle"),
    ]


# ─── bridge ──────────────────────────────────────────────────────
def bridge_suite(scenario) -> List[Check]:
    def intertwining(ctx):
        s = ctx.sampler
        for _ in range(ctx.samples()):
            p, q = s.integer(0, 2), s.integer(0, 2)
            x = s.cyl_chain(p, q)
            label = f"({p}, {q}) {x!r}"
            image = psi3(x)
            yield Case(f"b_h {label}", psi3(x.b_h()), image.zero())
            yield Case(f"B_h {label}", psi3(x.B_h()), image.B_h().normalize())
            yield Case(f"b_v {label}", psi3(x.b_v()), image.b_v().normalize())
            yield Case(f"B_v {label}", psi3(x.B_v()), image.B_v().normalize())

    def total_square(ctx):
        s = ctx.sampler
        for _ in range(ctx.samples()):
            c = s.getz_chain(s.integer(0, 2), s.form_degree())
            yield Case(c.to_text(), c.total_differential().total_differential(), c.zero())

    def pairing(ctx):
        sc, s = ctx.scenario, ctx.sampler
        n, group = sc.dim, sc.group
        for _ in range(ctx.samples()):
            q = s.integer(0, 2)
            p = s.integer(0, n - 1) if n else 0
            alpha = s.getz_cochain_full(q, max(n - 1 - p, 0))
            beta = s.getz_chain(q, p)
            label = f"alpha = {alpha.to_text()} ; beta = {beta.to_text()}"
            yield Case(f"iota {label}", alpha.iota(), alpha.zero())
            yield Case(f"b_h {label}", beta.b_h(), beta.zero())
            if n:
                yield Case(f"d against B_h {label}", pair(alpha.d(), beta), -pair(alpha, beta.B_h()))
            a = s.form_degree()
            upper = s.getz_chain(q + 1, n - a)
            lower = s.getz_cochain_full(q, a)
            if group.is_abelian():
                yield Case(f"d_bar against b_v alpha = {lower.to_text()} ; beta = {upper.to_text()}",
                           pair(lower.d_bar(), upper), pair(lower, upper.b_v()))
            normalized = s.getz_cochain_full(q + 1, a, keep=lambda gs: group.product(gs) != 0)
            yield Case(f"B_v annihilation alpha = {normalized.to_text()} ; beta = {beta.to_text()}",
                       pair(normalized, s.getz_chain(q, n - a).B_v()), ZERO)

    def c_compatibility(ctx):
        sc, s = ctx.scenario, ctx.sampler
        group = sc.group
        if not group.is_abelian():
            raise UnsupportedOperation("c-map compatibility is checked for abelian groups")
        for _ in range(ctx.samples()):
            alpha = GetzCochain(group)
            for q in (1, 2):
                alpha = alpha + s.getz_cochain_full(q, s.form_degree(), keep=lambda gs: group.product(gs) != 0)
            x = s.bar_chain(s.integer(0, 2))
            yield Case(f"alpha = {alpha.to_text()} ; x = {x.to_text()}",
                       c_map(alpha.d_bar() - alpha.d(), x), c_map(alpha, x.total_differential()))

    def unreduced_square(ctx):
        s = ctx.sampler
        for _ in range(ctx.samples()):
            q = s.integer(0, 2)
            alpha = s.getz_cochain(q, s.form_degree())
            full = alpha.unreduced()
            # one value on an arbitrary tuple, units allowed
            full = full + full.embed(tuple(s.group_element() for _ in range(q)), s.torus_form(s.form_degree(), 1))
            label = full.to_text()
            yield Case(f"d_bar^2 {label}", full.d_bar().d_bar(), full.zero())
            yield Case(f"d d_bar + d_bar d {label}", full.d().d_bar() + full.d_bar().d(), full.zero())
            yield Case(f"normalized part {alpha.to_text()}", alpha.unreduced().d_bar().normalize(), alpha.d_bar())

    def circle_intertwining(ctx):
        sc, s = ctx.scenario, ctx.sampler
        for _ in range(ctx.samples()):
            p = s.integer(0, 2)
            x = s.circle_cyl_chain(p)
            for order in range(1, sc.jet_order + 1):
                label = f"J = {order}, {x!r}"
                yield Case(f"b_h {label}", psi3_circle(x, order).b_h(), psi3_circle(x.b_h(), order))
                yield Case(f"B_h {label}", psi3_circle(x, order).B_h(), psi3_circle(x.B_h(), order))

    def circle_vertical(ctx):
        x = ctx.sampler.circle_cyl_chain(1)
        image = psi3_circle(x, ctx.scenario.jet_order)
        yield Case(f"{x!r}", image.B_v(), image.zero())

    return [
        Check("bridge.psi3", "Psi_3 intertwines b_h, B_h, b_v and B_v with the equivariant operators",
              intertwining, "finite", cost=2),
        Check("bridge.total-square", "equivariant chains: (b_v + B_h + B_v)^2 = 0", total_square, "finite"),
        Check("bridge.pairing", "pairing lemma with sign (-1)^(p(n+q) + p(p+1)/2)", pairing, "finite", cost=2),
        Check("bridge.c-map", "c((d_bar - d) alpha) = c(alpha)(b + B) for cyclically normalized alpha",
              c_compatibility, "finite", cost=10),
        Check("bridge.unreduced-square", "unreduced cochains: d_bar^2 = 0 and d d_bar + d_bar d = 0",
              unreduced_square, "finite", cost=2),
        Check("bridge.circle-psi3", "circle Psi_3 intertwines b_h and B_h at every jet order",
              circle_intertwining, "circle", cost=2),
        Check("bridge.circle-vertical-B", "circle Psi_3 and vertical B", circle_vertical, "circle"),
    ]


# ─── reductions ──────────────────────────────────────────────────
def reductions_suite(scenario) -> List[Check]:
    def trivial_hkr(ctx):
        sc, s = ctx.scenario, ctx.sampler
        for _ in range(ctx.samples()):
            x = s.bar_chain(s.integer(0, sc.dim))
            expected = GetzChain(sc.group)
            for key, c in x.terms.items():
                expected = expected + expected.embed((), hkr(sc.dim, [k for _, k in key], c))
            yield Case(x.to_text(), psi(x, 0), expected.normalize())

    def trivial_chern_weil(ctx):
        connection = ctx.scenario.connection
        yield Case("character at the empty tuple", getzler_chern(connection).form_at(()), chern_weil(connection))

    def trivial_pairing(ctx):
        sc = ctx.scenario
        n = sc.dim
        if n % 2:
            raise UnsupportedOperation("odd-dimensional tori carry no even character to compare")
        character = getzler_chern(sc.connection)
        forms = chern_weil(sc.connection)
        for k in _even_degrees(n):
            m = (n - k) // 2
            image = c_cochain(character, k + 1)
            weight = Fraction(sign(n // 2 + m), factorial(k))

            def classical(xs, m=m, weight=weight):
                form = xs[0].at(0) + TorusForm.constant(n, xs[0].unit)
                for a in xs[1:]:
                    form = form.wedge(a.at(0).d())
                return forms.degree_part(2 * m).wedge(form).integrate_top() * weight

            yield from _cochain_cases(ctx, k + 1, lambda xs, k=k, image=image: ctx.evaluate(f"cCh{k}", image, xs),
                                      classical)

    def point_value(a: AlgebraElem) -> Scalar:
        return a.at(0).coefficient(((), ())) + a.unit

    def point_trace(ctx):
        sc, s = ctx.scenario, ctx.sampler
        ch = jlo_generic(sc.untwisted_dga, 0)
        for _ in range(ctx.samples()):
            f, g = s.algebra_element(2, unit=True), s.algebra_element(2)
            label = f"f = {f.to_text()} ; g = {g.to_text()}"
            yield Case(f"trace {label}", point_value(f * g), point_value(g * f))
            yield Case(f"Ch^0 {label}", ch(f), point_value(f))

    def point_pairing_check(ctx):
        sc, s = ctx.scenario, ctx.sampler
        character = getzler_chern(sc.connection)
        value = character.form_at(()).coefficient(((), ()))
        image = c_cochain(character, 1)
        for _ in range(ctx.samples()):
            f = s.algebra_element(2, unit=True)
            yield Case(f.to_text(), image(f), point_pairing(value, f))

    return [
        Check("reductions.trivial-hkr", "trivial group: Psi is the classical HKR map", trivial_hkr, "trivial"),
        Check("reductions.trivial-chern-weil", "trivial group: the character is sum_i (1/i!) tr F^i",
              trivial_chern_weil, "trivial"),
        Check("reductions.trivial-pairing", "trivial group: c(Ch) pairs the Chern-Weil form with a_0 da_1 .. da_k",
              trivial_pairing, "trivial", cost=4),
        Check("reductions.point-trace", "point: f -> f(e) is a trace and equals Ch^0", point_trace, "point"),
        Check("reductions.point-pairing", "point: c(P)(f) = f(e) P(0)", point_pairing_check, "point"),
    ]


SUITE_BUILDERS: Dict[str, Callable] = {
    "dga": dga_suite,
    "traces": traces_suite,
    "claims": claims_suite,
    "jlo": jlo_suite,
    "complexes": complexes_suite,
    "bridge": bridge_suite,
    "chern-compare": chern_compare_suite,
    "reductions": reductions_suite,
}


def build_suite(scenario, suite: str) -> List[Check]:
    checks = SUITE_BUILDERS[suite](scenario)
    logger.debug(f"suite {suite}: {len(checks)} checks for {scenario.name}")
    return checks
