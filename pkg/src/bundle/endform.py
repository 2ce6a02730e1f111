# bundle/endform.py
"""
End(E)-valued forms on the torus for a trivialized bundle of rank r.

A basis key ``(i, l, I, k)`` is the matrix unit E_il times e_k dx_I. The matrix
product is combined with the wedge product of the form parts.
"""
from typing import Dict, Sequence, Tuple

from errors import DomainError
from scalars import LinComb, Scalar
from scalars.lincomb import accumulate
from torus import AffineMap, TangentVector, TorusForm, add_modes, merge_indices, pairing

EndKey = Tuple[int, int, Tuple[int, ...], Tuple[int, ...]]


class EndForm(LinComb):
    __slots__ = ("rank", "dim")

    def __init__(self, rank: int, dim: int, terms: Dict[EndKey, Scalar] = None):
        super().__init__(terms)
        self.rank = rank
        self.dim = dim

    def _new(self, terms):
        obj = object.__new__(EndForm)
        obj.terms = terms
        obj.rank = self.rank
        obj.dim = self.dim
        return obj

    def _check_compatible(self, other: "EndForm") -> None:
        if other.rank != self.rank or other.dim != self.dim:
            raise DomainError(
                f"End(E) forms of rank {self.rank} on T^{self.dim} and rank {other.rank} on T^{other.dim}"
            )

    # ─── Constructors ────────────────────────────────────────────
    @classmethod
    def zero_form(cls, rank: int, dim: int) -> "EndForm":
        return cls(rank, dim)

    @classmethod
    def from_form(cls, rank: int, form: TorusForm, i: int = 0, l: int = 0) -> "EndForm":
        if not (0 <= i < rank and 0 <= l < rank):
            raise DomainError(f"matrix entry ({i}, {l}) outside rank {rank}")
        return cls(rank, form.dim, {(i, l, I, k): c for (I, k), c in form.terms.items()})

    @classmethod
    def from_entries(cls, rank: int, dim: int, entries: Dict[Tuple[int, int], TorusForm]) -> "EndForm":
        out = cls(rank, dim)
        for (i, l), form in entries.items():
            out = out + cls.from_form(rank, form, i, l)
        return out

    @classmethod
    def scalar(cls, rank: int, form: TorusForm) -> "EndForm":
        """form times the identity matrix."""
        return cls.from_entries(rank, form.dim, {(i, i): form for i in range(rank)})

    @classmethod
    def identity(cls, rank: int, dim: int) -> "EndForm":
        return cls.scalar(rank, TorusForm.constant(dim))

    # ─── Entries ─────────────────────────────────────────────────
    def entries(self) -> Dict[Tuple[int, int], TorusForm]:
        parts: Dict[Tuple[int, int], Dict] = {}
        for (i, l, I, k), c in self.terms.items():
            parts.setdefault((i, l), {})[(I, k)] = c
        return {il: TorusForm(self.dim, terms) for il, terms in parts.items()}

    def entry(self, i: int, l: int) -> TorusForm:
        return TorusForm(self.dim, {(I, k): c for (a, b, I, k), c in self.terms.items() if (a, b) == (i, l)})

    def entrywise(self, op) -> "EndForm":
        """Apply a linear map of torus forms to every entry."""
        out = self.zero()
        for (i, l), form in self.entries().items():
            out = out + EndForm.from_form(self.rank, op(form), i, l)
        return out

    # ─── Grading ─────────────────────────────────────────────────
    def degrees(self):
        return sorted({len(key[2]) for key in self.terms})

    def degree_part(self, p: int) -> "EndForm":
        return self.filter_keys(lambda key: len(key[2]) == p)

    def graded_sign(self) -> "EndForm":
        return self._new({key: (-c if len(key[2]) % 2 else c) for key, c in self.terms.items()})

    # ─── Algebra ─────────────────────────────────────────────────
    def wedge(self, other: "EndForm") -> "EndForm":
        self._check_compatible(other)
        by_row: Dict[int, list] = {}
        for (l, j, J, m), d in other.terms.items():
            by_row.setdefault(l, []).append((j, J, m, d))
        out: Dict[EndKey, Scalar] = {}
        for (i, l, I, k), c in self.terms.items():
            for j, J, m, d in by_row.get(l, ()):
                merged = merge_indices(I, J)
                if merged is None:
                    continue
                s, K = merged
                coef = c * d
                accumulate([((i, j, K, add_modes(k, m)), -coef if s < 0 else coef)], out)
        return self._new(out)

    def commutator(self, other: "EndForm") -> "EndForm":
        """Graded commutator [a, b] = a b - (-1)^{|a||b|} b a on homogeneous parts."""
        out = self.zero()
        for p in self.degrees():
            a = self.degree_part(p)
            for q in other.degrees():
                b = other.degree_part(q)
                ba = b.wedge(a)
                out = out + a.wedge(b) - (-ba if (p * q) % 2 else ba)
        return out

    def d(self) -> "EndForm":
        return self.entrywise(TorusForm.d)

    def contract(self, v: TangentVector) -> "EndForm":
        return self.entrywise(lambda form: form.contract(v))

    def lie(self, v: TangentVector) -> "EndForm":
        return self.entrywise(lambda form: form.lie(v))

    def times_tau(self, power: int = 1) -> "EndForm":
        return self._new({key: c.times_tau(power) for key, c in self.terms.items()})

    def pullback(self, f: AffineMap) -> "EndForm":
        return self.entrywise(f.pullback)

    def weight_split(self, v: Sequence[int], charges: Sequence[int]) -> Dict[int, "EndForm"]:
        """Decompose by k.v + c_i - c_l, the circle weight of each term."""
        parts: Dict[int, Dict[EndKey, Scalar]] = {}
        for (i, l, I, k), c in self.terms.items():
            w = pairing(v, k) + charges[i] - charges[l]
            parts.setdefault(w, {})[(i, l, I, k)] = c
        return {w: self._new(terms) for w, terms in parts.items()}

    # ─── Trace ───────────────────────────────────────────────────
    def trace(self) -> TorusForm:
        return TorusForm(self.dim, accumulate(((I, k), c) for (i, l, I, k), c in self.terms.items() if i == l))

    def integrate_trace(self) -> Scalar:
        return self.trace().integrate_top()

    def to_text(self) -> str:
        blocks = []
        for (i, l), form in sorted(self.entries().items()):
            body = form.to_text().replace("\n", "\n    ")
            blocks.append(f"[{i + 1},{l + 1}]\n    {body}")
        return "\n".join(blocks) or "0"
