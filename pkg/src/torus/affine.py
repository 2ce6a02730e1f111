# torus/affine.py
"""
Orientation-preserving affine maps of the torus, acting on the right:
x . f = x A + b with x a row vector.

Pullback sends the mode e_k to e^{2 pi i k.b} e_{A k} and dx_i to
sum_j A_ji dx_j. For the group product f then g (x . f . g) the matrices
multiply as A_f A_g and pullbacks compose as (f g)^* = f^* g^*.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, Sequence, Tuple

from errors import DomainError
from scalars import Scalar
from scalars.lincomb import accumulate

from .forms import FormKey, Mode, TangentVector, TorusForm, merge_indices

Matrix = Tuple[Tuple[int, ...], ...]


def _det(a: Matrix) -> int:
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in a[1:])
        total += (-1) ** j * a[0][j] * _det(minor)
    return total


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][l] * b[l][j] for l in range(n)) for j in range(n)) for i in range(n))


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class AffineMap:
    matrix: Matrix
    translation: Tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix) or len(self.translation) != n:
            raise DomainError("affine map needs a square matrix and a matching translation")
        det = _det(self.matrix)
        if det == 0 or abs(det) != 1:
            raise DomainError(f"matrix {self.matrix} is not invertible over Z")
        if det != 1:
            raise DomainError(f"matrix {self.matrix} reverses orientation (det = {det})")
        object.__setattr__(self, "translation", tuple(_mod1(Fraction(b)) for b in self.translation))

    @classmethod
    def of(cls, matrix: Iterable[Iterable[int]], translation: Iterable = None) -> "AffineMap":
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        b = tuple(Fraction(x) for x in translation) if translation is not None else (Fraction(0),) * len(rows)
        return cls(rows, b)

    @classmethod
    def identity(cls, dim: int) -> "AffineMap":
        return cls.of([[int(i == j) for j in range(dim)] for i in range(dim)])

    @classmethod
    def translation_by(cls, v: Sequence, g: Fraction) -> "AffineMap":
        """x -> x + g v, the circle element g acting through direction v."""
        dim = len(v)
        return cls.of(
            [[int(i == j) for j in range(dim)] for i in range(dim)],
            [Fraction(g) * Fraction(x) for x in v],
        )

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def conductor(self) -> int:
        """Smallest N with b in (1/N) Z^n."""
        return lcm(1, *(b.denominator for b in self.translation))

    def then(self, other: "AffineMap") -> "AffineMap":
        """The map x -> (x . self) . other."""
        a = _matmul(self.matrix, other.matrix)
        n = self.dim
        b = tuple(
            sum(self.translation[l] * other.matrix[l][j] for l in range(n)) + other.translation[j]
            for j in range(n)
        )
        return AffineMap(a, b)

    # ─── Pullback ────────────────────────────────────────────────
    def act_mode(self, k: Mode) -> Tuple[Scalar, Mode]:
        """Phase and image mode of e_k under pullback."""
        n = self.dim
        image = tuple(sum(self.matrix[i][j] * k[j] for j in range(n)) for i in range(n))
        phase = sum((kb * b for kb, b in zip(k, self.translation)), Fraction(0))
        phase = _mod1(phase)
        if not phase:
            return Scalar.of(1), image
        return Scalar.zeta(phase.denominator, phase.numerator), image

    def _pull_dx(self, indices: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
        forms: Dict[Tuple[int, ...], int] = {(): 1}
        for i in indices:
            nxt: Dict[Tuple[int, ...], int] = {}
            for J, c in forms.items():
                for j in range(self.dim):
                    a = self.matrix[j][i]
                    if not a:
                        continue
                    merged = merge_indices(J, (j,))
                    if merged is None:
                        continue
                    s, K = merged
                    nxt[K] = nxt.get(K, 0) + s * c * a
            forms = {K: c for K, c in nxt.items() if c}
        return forms

    def pullback(self, form: TorusForm) -> TorusForm:
        if form.dim != self.dim:
            raise DomainError(f"dimension mismatch: map on T^{self.dim}, form on T^{form.dim}")
        out: Dict[FormKey, Scalar] = {}
        cache: Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]] = {}
        for (I, k), c in form.terms.items():
            phase, image = self.act_mode(k)
            if I not in cache:
                cache[I] = self._pull_dx(I)
            coef = c * phase
            accumulate((((K, image), coef * m) for K, m in cache[I].items()), out)
        return form._new(out)

    def push_vector(self, v: TangentVector) -> TangentVector:
        """Differential of the map on a constant field: v -> v A."""
        n = self.dim
        return TangentVector(tuple(
            sum(v.components[i] * self.matrix[i][j] for i in range(n)) for j in range(n)
        ))
