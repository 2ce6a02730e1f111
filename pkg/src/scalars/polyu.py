# scalars/polyu.py
"""
Polynomials in one even formal variable u with arbitrary linear payloads.

This houses Sym(g*) for the circle (g = R). A payload is anything with
``+``, unary ``-``, ``scale`` and ``is_zero``: Scalar-like LinCombs,
torus forms, End(E)-valued forms.
"""
from math import factorial
from operator import mul as _default_product
from typing import Any, Callable, Dict, Iterator, Optional, Tuple


class PolyU:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[int, Any] = None):
        self.coeffs = {j: p for j, p in (coeffs or {}).items() if not p.is_zero()}

    @classmethod
    def constant(cls, payload: Any) -> "PolyU":
        return cls({0: payload})

    @classmethod
    def monomial(cls, degree: int, payload: Any) -> "PolyU":
        return cls({degree: payload})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def items(self) -> Iterator[Tuple[int, Any]]:
        return iter(sorted(self.coeffs.items()))

    def coefficient(self, degree: int, default: Any = None) -> Any:
        return self.coeffs.get(degree, default)

    def at_zero(self, default: Any = None) -> Any:
        return self.coeffs.get(0, default)

    # ─── Linear structure ────────────────────────────────────────
    def __add__(self, other: "PolyU") -> "PolyU":
        out = dict(self.coeffs)
        for j, p in other.coeffs.items():
            out[j] = p if j not in out else out[j] + p
        return PolyU(out)

    def __neg__(self) -> "PolyU":
        return PolyU({j: -p for j, p in self.coeffs.items()})

    def __sub__(self, other: "PolyU") -> "PolyU":
        return self + (-other)

    def scale(self, factor) -> "PolyU":
        return PolyU({j: p.scale(factor) for j, p in self.coeffs.items()})

    def map(self, f: Callable[[Any], Any]) -> "PolyU":
        return PolyU({j: f(p) for j, p in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyU):
            return NotImplemented
        return self.coeffs == other.coeffs

    # ─── Ring structure ──────────────────────────────────────────
    def mul(self, other: "PolyU", product: Callable[[Any, Any], Any] = _default_product) -> "PolyU":
        out: Dict[int, Any] = {}
        for i, p in self.coeffs.items():
            for j, q in other.coeffs.items():
                term = product(p, q)
                out[i + j] = term if i + j not in out else out[i + j] + term
        return PolyU(out)

    def shift(self, k: int) -> "PolyU":
        """Multiply by u**k."""
        return PolyU({j + k: p for j, p in self.coeffs.items()})

    def truncate(self, order: int) -> "PolyU":
        return PolyU({j: p for j, p in self.coeffs.items() if j <= order})

    def derivative(self, q: int = 1) -> "PolyU":
        """q-th derivative in u."""
        return PolyU({
            j - q: p.scale(factorial(j) // factorial(j - q))
            for j, p in self.coeffs.items() if j >= q
        })

    def gamma_evaluate(self, q: int, default: Optional[Any] = None) -> Any:
        """(d/du)^q at u = 0, i.e. q! times the u^q coefficient."""
        payload = self.coeffs.get(q)
        if payload is None:
            return default
        return payload.scale(factorial(q))

    def __repr__(self) -> str:
        return "PolyU(" + ", ".join(f"u^{j}: {p!r}" for j, p in self.items()) + ")"
