from .affine import AffineMap
from .forms import TangentVector, TorusForm, add_modes, merge_indices, pairing, parse_form

__all__ = [
    "AffineMap",
    "TangentVector",
    "TorusForm",
    "add_modes",
    "merge_indices",
    "pairing",
    "parse_form",
]
