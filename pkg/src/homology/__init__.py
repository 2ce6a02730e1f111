from .bar import BarChain
from .cylindrical import CylChain, bidegree
from .eilenberg_zilber import (
    ez,
    ez_all,
    ez_homotopy,
    ez_pert,
    ez_pert_steps,
    interchange,
    shuffle_nabla,
    shuffles,
)

__all__ = [
    "BarChain",
    "CylChain",
    "bidegree",
    "ez",
    "ez_all",
    "ez_homotopy",
    "ez_pert",
    "ez_pert_steps",
    "interchange",
    "shuffle_nabla",
    "shuffles",
]
