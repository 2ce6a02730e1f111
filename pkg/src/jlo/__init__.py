from .chern import (
    chern_family,
    chern_invariant_simplified,
    chern_twisted_closed,
    chern_untwisted_top,
    jlo_generic,
)
from .cochain import Cochain, cochain_b, cochain_B
from .simplex import SimplexMonomial, ascending_simplex_integrate, compositions, simplex_integrate

__all__ = [
    "Cochain",
    "SimplexMonomial",
    "ascending_simplex_integrate",
    "chern_family",
    "chern_invariant_simplified",
    "chern_twisted_closed",
    "chern_untwisted_top",
    "cochain_B",
    "cochain_b",
    "compositions",
    "jlo_generic",
    "simplex_integrate",
]
