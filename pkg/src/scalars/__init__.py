from .cyclotomic import Cyclotomic, field_degree
from .lincomb import LinComb, accumulate
from .polyu import PolyU
from .scalar import ONE, ZERO, Scalar, parse_scalar, scalar_sum, sign

__all__ = [
    "Cyclotomic",
    "field_degree",
    "LinComb",
    "accumulate",
    "PolyU",
    "Scalar",
    "ZERO",
    "ONE",
    "parse_scalar",
    "scalar_sum",
    "sign",
]
