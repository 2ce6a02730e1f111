# homology/eilenberg_zilber.py
"""
Eilenberg-Zilber data between the diagonal and the total complex of the
cylindrical complex: the Alexander-Whitney map EZ, the shuffle map nabla, the
interchange homotopy and the perturbed map sum_m EZ((B h)^m).
"""
from functools import lru_cache
from typing import Dict, List, Tuple

from scalars import sign
from scalars.lincomb import accumulate

from .cylindrical import CylChain

Shuffle = Tuple[Tuple[int, ...], Tuple[int, ...], int]


@lru_cache(maxsize=None)
def shuffles(p: int, q: int) -> Tuple[Shuffle, ...]:
    """(p, q)-shuffles as (mu, nu, sign) with mu, nu the increasing position lists."""
    out: List[Shuffle] = []
    n = p + q

    def walk(i: int, mu: Tuple[int, ...], nu: Tuple[int, ...]):
        if i == n:
            inversions = sum(m - a for a, m in enumerate(mu))
            out.append((mu, nu, sign(inversions)))
            return
        if len(mu) < p:
            walk(i + 1, mu + (i,), nu)
        if len(nu) < q:
            walk(i + 1, mu, nu + (i,))

    walk(0, (), ())
    return tuple(out)


def _diagonal_terms(x: CylChain):
    for key, c in x.terms.items():
        yield x.diagonal_degree(key), x._new({key: c})


def ez(x: CylChain, p: int) -> CylChain:
    """Diagonal degree n to bidegree (p, n - p): d^h_{p+1} .. d^h_n then (d^v_0)^p."""
    out: Dict = {}
    for n, y in _diagonal_terms(x):
        if not 0 <= p <= n:
            continue
        for j in range(n, p, -1):
            y = y.d_h(j)
        for _ in range(p):
            y = y.d_v(0)
        accumulate(y.terms.items(), out)
    return x._new(out).normalize()


def ez_all(x: CylChain) -> CylChain:
    """EZ into every bidegree of the total degree."""
    out: Dict = {}
    for n, y in _diagonal_terms(x):
        for p in range(n + 1):
            accumulate(ez(y, p).terms.items(), out)
    return x._new(out)


def shuffle_nabla(x: CylChain) -> CylChain:
    """Signed sum over (p, q)-shuffles of vertical and horizontal degeneracies."""
    out: Dict = {}
    for key, c in x.terms.items():
        gs, bs = key
        p, q = len(bs) - 1, len(gs) - 1
        for mu, nu, s in shuffles(p, q):
            y = x._new({key: c})
            for m in mu:
                y = y.s_v(m)
            for v in nu:
                y = y.s_h(v)
            accumulate(y.scale(s).terms.items(), out)
    return x._new(out).normalize_diagonal()


def interchange(x: CylChain) -> CylChain:
    """The interchange (shuffle) homotopy on the diagonal, degree +1."""
    out: Dict = {}
    for n, one in _diagonal_terms(x):
        for q in range(n):
            for p in range(n - q):
                m = n - p - q
                for alpha, beta, s in shuffles(p + 1, q):
                    y = one
                    for j in range(n, n - q, -1):
                        y = y.d_h(j)
                    y = y.s_h(m - 1)
                    for b in beta:
                        y = y.s_h(b + m)
                    for j in range(n - q - 1, m - 1, -1):
                        y = y.d_v(j)
                    for a in alpha:
                        y = y.s_v(a + m)
                    accumulate(y.scale(sign(m) * s).terms.items(), out)
    return x._new(out).normalize_diagonal()


def ez_homotopy(x: CylChain) -> CylChain:
    """h with nabla EZ - id = b h + h b."""
    return -interchange(x)


def ez_pert_steps(x: CylChain, steps: int) -> List[CylChain]:
    """[y_0 .. y_steps] with y_0 = x and y_{m+1} = B h y_m on the diagonal."""
    out = [x]
    for _ in range(steps):
        out.append(ez_homotopy(out[-1]).B_diag())
    return out


def ez_pert(x: CylChain, steps: int) -> CylChain:
    """sum_{m <= steps} EZ((B h)^m x) over all bidegrees."""
    total = x._new({})
    for y in ez_pert_steps(x, steps):
        total = total + ez_all(y)
    return total
