# scalars/lincomb.py
"""
Finite linear combinations of hashable basis keys with Scalar coefficients.

Every chain, cochain and form type in the engine is a LinComb over its own
basis keys. Subclasses that carry metadata (a torus dimension, a group)
override ``_new`` so that arithmetic keeps it.
"""
from typing import Callable, Dict, Hashable, Iterable, Iterator, Tuple

from .scalar import ONE, ZERO, Scalar, ScalarLike

Term = Tuple[Hashable, Scalar]


def accumulate(pairs: Iterable[Term], into: Dict[Hashable, Scalar] = None) -> Dict[Hashable, Scalar]:
    """Sum coefficients per key, dropping anything that cancels."""
    out = {} if into is None else into
    for key, coef in pairs:
        if coef.is_zero():
            continue
        prev = out.get(key)
        if prev is None:
            out[key] = coef
            continue
        total = prev + coef
        if total.is_zero():
            del out[key]
        else:
            out[key] = total
    return out


class LinComb:
    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Hashable, Scalar] = None):
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    def _new(self, terms: Dict[Hashable, Scalar]) -> "LinComb":
        obj = object.__new__(type(self))
        obj.terms = terms
        return obj

    def _check_compatible(self, other: "LinComb") -> None:
        pass

    # ─── Construction ────────────────────────────────────────────
    def from_pairs(self, pairs: Iterable[Term]) -> "LinComb":
        """New combination of the same kind and metadata."""
        return self._new(accumulate(pairs))

    def zero(self) -> "LinComb":
        return self._new({})

    def basis(self, key: Hashable, coef: ScalarLike = 1) -> "LinComb":
        coef = Scalar.of(coef)
        return self._new({} if coef.is_zero() else {key: coef})

    # ─── Inspection ──────────────────────────────────────────────
    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[Term]:
        return iter(self.terms.items())

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, key: Hashable) -> Scalar:
        return self.terms.get(key, ZERO)

    def split(self) -> Iterator["LinComb"]:
        """One single-term combination per basis key."""
        for key, coef in self.terms.items():
            yield self._new({key: coef})

    # ─── Linear structure ────────────────────────────────────────
    def __add__(self, other: "LinComb") -> "LinComb":
        self._check_compatible(other)
        if not other.terms:
            return self
        return self._new(accumulate(other.terms.items(), dict(self.terms)))

    def __sub__(self, other: "LinComb") -> "LinComb":
        self._check_compatible(other)
        if not other.terms:
            return self
        return self._new(accumulate(((k, -c) for k, c in other.terms.items()), dict(self.terms)))

    def __neg__(self) -> "LinComb":
        return self._new({k: -c for k, c in self.terms.items()})

    def scale(self, factor: ScalarLike) -> "LinComb":
        factor = Scalar.of(factor)
        if factor.is_zero():
            return self._new({})
        if factor == ONE:
            return self
        scaled = ((k, c * factor) for k, c in self.terms.items())
        return self._new({k: c for k, c in scaled if not c.is_zero()})

    def __rmul__(self, factor: ScalarLike) -> "LinComb":
        return self.scale(factor)

    def map_terms(self, f: Callable[[Hashable, Scalar], Iterable[Term]]) -> "LinComb":
        """Apply a basis-level linear map: f(key, coef) yields output terms."""
        out: Dict[Hashable, Scalar] = {}
        for key, coef in self.terms.items():
            accumulate(f(key, coef), out)
        return self._new(out)

    def filter_keys(self, keep: Callable[[Hashable], bool]) -> "LinComb":
        return self._new({k: c for k, c in self.terms.items() if keep(k)})

    # ─── Comparison ──────────────────────────────────────────────
    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kc: repr(kc[0]))

    def __repr__(self) -> str:
        inner = " + ".join(f"{c.to_text()}*{k!r}" for k, c in self.sorted_terms())
        return f"{type(self).__name__}({inner or '0'})"
