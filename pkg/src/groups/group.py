# groups/group.py
"""
Unimodular groups acting on the torus from the right.

FiniteGroup  - multiplication table plus an action through orientation
               preserving affine maps; Haar measure is counting measure.
CircleGroup  - R/Z acting by x . g = x + g v for an integer direction v;
               Haar measure has mass 1.

Group elements of a finite group are table indices with the unit at 0. Circle
functions are handled through their Fourier modes m (e^{2 pi i m g}).
"""
import logging
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Dict, Iterable, List, Sequence, Tuple

from errors import ValidationError
from scalars import Scalar
from torus import AffineMap, TangentVector, TorusForm, pairing

logger = logging.getLogger(__name__)


class GroupDesc:
    """Common surface of the supported groups."""

    kind = "abstract"

    def __init__(self, dim: int):
        self.dim = dim

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def unit(self) -> int:
        return 0

    @property
    def conductor(self) -> int:
        return 1

    def describe(self) -> str:
        raise NotImplementedError


class FiniteGroup(GroupDesc):
    kind = "finite"

    def __init__(
        self,
        labels: Sequence[str],
        table: Sequence[Sequence[int]],
        actions: Sequence[AffineMap],
        validate: bool = True,
    ):
        if not actions:
            raise ValidationError("group needs an action on the torus")
        super().__init__(actions[0].dim)
        self.labels = tuple(labels)
        self.table = tuple(tuple(row) for row in table)
        self.actions = tuple(actions)
        if validate:
            self.validate()
        self.inverses = tuple(self.table[g].index(0) for g in range(self.order))

    # ─── Constructors ────────────────────────────────────────────
    @classmethod
    def trivial(cls, dim: int) -> "FiniteGroup":
        return cls(["e"], [[0]], [AffineMap.identity(dim)])

    @classmethod
    def generated_by(cls, dim: int, generators: Dict[str, AffineMap], limit: int = 64) -> "FiniteGroup":
        """Close the generators under composition; labels are shortest words."""
        identity = AffineMap.identity(dim)
        maps: List[AffineMap] = [identity]
        words: List[str] = ["e"]
        index = {identity: 0}
        frontier = 0
        while frontier < len(maps):
            for name, gen in generators.items():
                if gen.dim != dim:
                    raise ValidationError(f"generator {name} does not act on T^{dim}")
                image = maps[frontier].then(gen)
                if image not in index:
                    if len(maps) >= limit:
                        raise ValidationError(f"generators produce more than {limit} elements")
                    index[image] = len(maps)
                    maps.append(image)
                    base = words[frontier]
                    words.append(name if base == "e" else f"{base}*{name}")
            frontier += 1
        table = [[index[a.then(b)] for b in maps] for a in maps]
        group = cls(words, table, maps)
        group.generator_words = {name: index[gen] for name, gen in generators.items()}
        return group

    # ─── Structure ───────────────────────────────────────────────
    @property
    def order(self) -> int:
        return len(self.labels)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverses[g]

    def product(self, elements: Iterable[int]) -> int:
        out = 0
        for g in elements:
            out = self.table[out][g]
        return out

    def label(self, g: int) -> str:
        return self.labels[g]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown group element {label!r}") from None

    @property
    def conductor(self) -> int:
        return lcm(1, *(a.conductor for a in self.actions))

    def is_abelian(self) -> bool:
        return all(self.mul(g, h) == self.mul(h, g) for g in self.elements() for h in self.elements())

    def describe(self) -> str:
        return f"finite group of order {self.order} on T^{self.dim}"

    # ─── Action ──────────────────────────────────────────────────
    def action(self, g: int) -> AffineMap:
        return self.actions[g]

    def act(self, g: int, form: TorusForm) -> TorusForm:
        """g^* form."""
        if g == 0:
            return form
        return self.actions[g].pullback(form)

    def act_mode(self, g: int, k: Tuple[int, ...]) -> Tuple[Scalar, Tuple[int, ...]]:
        return self.actions[g].act_mode(k)

    def push_vector(self, g: int, v: TangentVector) -> TangentVector:
        return self.actions[g].push_vector(v)

    # ─── Validation ──────────────────────────────────────────────
    def validate(self) -> None:
        n = len(self.labels)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValidationError("multiplication table is not square")
        if len(self.actions) != n:
            raise ValidationError("every group element needs an action")
        if any(x not in range(n) for row in self.table for x in row):
            raise ValidationError("multiplication table refers to unknown elements")
        if any(self.table[0][g] != g or self.table[g][0] != g for g in range(n)):
            raise ValidationError("element 0 is not a unit")
        for g in range(n):
            if 0 not in self.table[g] or self.table[self.table[g].index(0)][g] != 0:
                raise ValidationError(f"element {self.labels[g]} has no inverse")
        for a, b, c in product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ValidationError(
                    f"not associative at ({self.labels[a]}, {self.labels[b]}, {self.labels[c]})"
                )
        dims = {a.dim for a in self.actions}
        if len(dims) != 1:
            raise ValidationError("actions live on tori of different dimensions")
        for g, h in product(range(n), repeat=2):
            if self.actions[g].then(self.actions[h]) != self.actions[self.table[g][h]]:
                raise ValidationError(
                    f"action is not a homomorphism at ({self.labels[g]}, {self.labels[h]})"
                )
        if self.actions[0] != AffineMap.identity(self.actions[0].dim):
            raise ValidationError("unit does not act trivially")
        logger.debug(f"validated group of order {n}")


class CircleGroup(GroupDesc):
    kind = "circle"

    def __init__(self, direction: Sequence[int]):
        direction = tuple(int(x) for x in direction)
        super().__init__(len(direction))
        if not any(direction):
            raise ValidationError("circle direction must be nonzero")
        self.direction = direction

    @property
    def vector(self) -> TangentVector:
        return TangentVector.of(self.direction)

    def weight(self, k: Tuple[int, ...]) -> int:
        """k . v: the g-mode picked up by e_k under translation by g v."""
        return pairing(self.direction, k)

    def act_at(self, g: Fraction, form: TorusForm) -> TorusForm:
        """Pullback by the concrete element g in R/Z."""
        return AffineMap.translation_by(self.direction, Fraction(g)).pullback(form)

    def act_symbolic(self, form: TorusForm) -> Dict[int, TorusForm]:
        """g^* form = sum_w e^{2 pi i w g} form_w."""
        return form.weight_split(self.direction)

    def describe(self) -> str:
        return f"circle acting along {list(self.direction)} on T^{self.dim}"
