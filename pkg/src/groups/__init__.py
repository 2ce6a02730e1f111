from .algebra import AlgebraElem
from .group import CircleGroup, FiniteGroup, GroupDesc
from .groupfun import GroupFun

__all__ = [
    "AlgebraElem",
    "CircleGroup",
    "FiniteGroup",
    "GroupDesc",
    "GroupFun",
]
