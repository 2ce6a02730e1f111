from .bundle import BundleDesc, Connection, average_connection, invert, phase
from .endform import EndForm

__all__ = [
    "BundleDesc",
    "Connection",
    "EndForm",
    "average_connection",
    "invert",
    "phase",
]
