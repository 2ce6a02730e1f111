from .curved import CurvedDGA
from .eqform import EqForm
from .traces import VARIANTS, default_variant, trace

__all__ = [
    "CurvedDGA",
    "EqForm",
    "VARIANTS",
    "default_variant",
    "trace",
]
