# getzler/chern_simons.py
"""
Chern-Simons forms of several connections and Getzler's equivariant Chern
character at X = 0.

cs(A_0..A_q) integrates tr exp(sum_i dt_i (A_{i-1} - A_i) + F(t)) over the
simplex 0 <= t_1 <= ... <= t_q <= 1, with A(t) = A_q + sum_i t_i (A_{i-1} - A_i)
and F(t) its curvature on the torus. Elements of Omega(simplex) (x) Omega(T^n, End E)
are kept as dicts keyed by (dt indices, t exponents) with the dt's in front.
"""
import logging
from fractions import Fraction
from itertools import product as tuples
from math import factorial
from typing import Dict, Sequence, Tuple

from bundle import Connection, EndForm
from errors import DomainError
from jlo.simplex import ascending_simplex_integrate
from scalars import sign
from torus import TorusForm, merge_indices

from .cochains import GetzCochain

logger = logging.getLogger(__name__)

SimplexKey = Tuple[Tuple[int, ...], Tuple[int, ...]]
SimplexForm = Dict[SimplexKey, EndForm]


def _add(out: SimplexForm, key: SimplexKey, value: EndForm) -> None:
    if value.is_zero():
        return
    total = out[key] + value if key in out else value
    if total.is_zero():
        out.pop(key, None)
    else:
        out[key] = total


def _multiply(left: SimplexForm, right: SimplexForm) -> SimplexForm:
    """(dt_S a)(dt_T b) = (-1)^{|a||T|} dt_S dt_T a b."""
    out: SimplexForm = {}
    for (s, e), a in left.items():
        for (t, f), b in right.items():
            merged = merge_indices(s, t)
            if merged is None:
                continue
            sgn, u = merged
            moved = a.graded_sign() if len(t) % 2 else a
            product = moved.wedge(b)
            if sgn < 0:
                product = -product
            _add(out, (u, tuple(x + y for x, y in zip(e, f))), product)
    return out


def _exponential(x: SimplexForm, one: SimplexForm, cap: int) -> SimplexForm:
    """sum_k x^k / k!, stopping once a power vanishes or k exceeds cap."""
    out: SimplexForm = dict(one)
    power = one
    for k in range(1, cap + 1):
        power = _multiply(power, x)
        if not power:
            break
        for key, value in power.items():
            _add(out, key, value.scale(Fraction(1, factorial(k))))
    return out


def chern_simons(connections: Sequence[Connection]) -> TorusForm:
    if not connections:
        raise DomainError("chern_simons needs at least one connection")
    bundle = connections[0].bundle
    if any(c.bundle is not bundle for c in connections):
        raise DomainError("connections live on different bundles")
    q = len(connections) - 1
    n = bundle.dim
    zero_exps = (0,) * q
    potentials = [c.potential for c in connections]

    # A(t) as a polynomial in t: constant A_q, coefficient of t_i is A_{i-1} - A_i
    path: Dict[Tuple[int, ...], EndForm] = {zero_exps: potentials[q]}
    for i in range(1, q + 1):
        exps = tuple(int(j == i - 1) for j in range(q))
        path[exps] = potentials[i - 1] - potentials[i]

    integrand: SimplexForm = {}
    for exps, a in path.items():
        _add(integrand, ((), exps), a.d())
    for (e1, a), (e2, b) in tuples(path.items(), repeat=2):
        _add(integrand, ((), tuple(x + y for x, y in zip(e1, e2))), a.wedge(b))
    for i in range(1, q + 1):
        _add(integrand, ((i - 1,), zero_exps), potentials[i - 1] - potentials[i])

    one = {((), zero_exps): EndForm.identity(bundle.rank, n)}
    exponential = _exponential(integrand, one, n + q)
    top = tuple(range(q))
    total = TorusForm(n)
    for (s, exps), value in exponential.items():
        if s != top:
            continue
        total = total + value.trace().scale(ascending_simplex_integrate(exps))
    logger.debug(f"chern_simons of {len(connections)} connections on T^{n}")
    return total


def chern_weil(connection: Connection) -> TorusForm:
    """sum_i (1/i!) tr F^i."""
    curvature = connection.curvature()
    bundle = connection.bundle
    power = EndForm.identity(bundle.rank, bundle.dim)
    total = power.trace()
    for i in range(1, bundle.dim // 2 + 1):
        power = power.wedge(curvature)
        total = total + power.trace().scale(Fraction(1, factorial(i)))
    return total


def getzler_chern(connection: Connection, max_q: int = None) -> GetzCochain:
    """
    Ch(g_1..g_q)_[p] = (-1)^{p+q} cs(gamma_1^* nabla, .., gamma_q^* nabla, nabla)_[p]
    with gamma_i = g_i .. g_q, for every tuple of non-unit elements and q <= max_q.
    """
    group = connection.group
    if not group.is_finite:
        raise DomainError("Getzler's character at X = 0 is built for finite groups")
    bundle = connection.bundle
    n = bundle.dim
    max_q = n if max_q is None else max_q
    out = GetzCochain(group)
    pulled = {g: Connection(bundle, connection.pulled(g)) for g in group.elements()}
    for q in range(max_q + 1):
        for gs in tuples(range(1, group.order), repeat=q):
            chain = [pulled[group.product(gs[i:])] for i in range(q)] + [connection]
            form = chern_simons(chain)
            for p in form.degrees():
                out = out + out.embed(gs, form.degree_part(p), sign(p + q))
    logger.info(f"Getzler character of {bundle.describe()} up to q={max_q}: {len(out)} terms")
    return out
