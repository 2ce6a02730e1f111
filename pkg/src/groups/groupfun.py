# groups/groupfun.py
"""Functions on a supported group with linear payloads."""
from typing import Any, Callable, Dict, Iterator, Tuple

from errors import DomainError

from .group import GroupDesc


class GroupFun:
    """
    Finite group: element index -> payload.
    Circle: Fourier mode m -> payload, standing for sum_m e^{tau m g} payload_m.
    """

    __slots__ = ("group", "values")

    def __init__(self, group: GroupDesc, values: Dict[int, Any] = None):
        self.group = group
        self.values = {g: p for g, p in (values or {}).items() if not p.is_zero()}

    def items(self) -> Iterator[Tuple[int, Any]]:
        return iter(sorted(self.values.items()))

    def at(self, g: int, default: Any = None) -> Any:
        return self.values.get(g, default)

    def is_zero(self) -> bool:
        return not self.values

    def _check(self, other: "GroupFun") -> None:
        if other.group is not self.group:
            raise DomainError("group functions over different groups")

    def __add__(self, other: "GroupFun") -> "GroupFun":
        self._check(other)
        out = dict(self.values)
        for g, p in other.values.items():
            out[g] = p if g not in out else out[g] + p
        return GroupFun(self.group, out)

    def __neg__(self) -> "GroupFun":
        return GroupFun(self.group, {g: -p for g, p in self.values.items()})

    def __sub__(self, other: "GroupFun") -> "GroupFun":
        return self + (-other)

    def map(self, f: Callable[[int, Any], Any]) -> "GroupFun":
        return GroupFun(self.group, {g: f(g, p) for g, p in self.values.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupFun):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    def haar_integrate(self, zero: Any = None) -> Any:
        """Counting measure for finite groups, the zero Fourier coefficient on the circle."""
        if self.group.is_finite:
            total = zero
            for _, p in self.items():
                total = p if total is None else total + p
            return total
        return self.values.get(0, zero)

    def invert_argument(self) -> "GroupFun":
        """g -> f(g^-1)."""
        if self.group.is_finite:
            return GroupFun(self.group, {self.group.inv(g): p for g, p in self.values.items()})
        return GroupFun(self.group, {-m: p for m, p in self.values.items()})
