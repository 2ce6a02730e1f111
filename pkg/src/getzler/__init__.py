from .chains import GetzChain, hkr, psi3
from .chern_simons import chern_simons, chern_weil, getzler_chern
from .cochains import CircleCochain, GetzCochain, is_cyclically_normalized
from .jets import CircleCylChain, JetChain, psi3_circle, series_coefficients
from .pairing import c_cochain, c_map, pair, pairing_sign, perturbation_steps, point_pairing, psi

__all__ = [
    "CircleCochain",
    "CircleCylChain",
    "GetzChain",
    "GetzCochain",
    "JetChain",
    "c_cochain",
    "c_map",
    "chern_simons",
    "chern_weil",
    "getzler_chern",
    "hkr",
    "is_cyclically_normalized",
    "pair",
    "pairing_sign",
    "perturbation_steps",
    "point_pairing",
    "psi",
    "psi3",
    "psi3_circle",
    "series_coefficients",
]
