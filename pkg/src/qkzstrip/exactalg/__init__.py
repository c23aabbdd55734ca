"""Exact arithmetic kernel: polynomial rings over the integers."""

from .bipoly import BiPoly
from .laurent import Q, QINV, TAU_Q, LaurentScalar, tau_to_q, u_q
from .multipoly import MultiPoly
from .ops import antisymmetrize, bareiss_det, cofactor_det, leibniz_det, perm_sign, poly_exact_div
from .taupoly import TAU, ExactDivisionError, TauPoly, cheb_u, cheb_u_ext

__all__ = [
    "BiPoly",
    "ExactDivisionError",
    "LaurentScalar",
    "MultiPoly",
    "Q",
    "QINV",
    "TAU",
    "TAU_Q",
    "TauPoly",
    "antisymmetrize",
    "bareiss_det",
    "cheb_u",
    "cheb_u_ext",
    "cofactor_det",
    "leibniz_det",
    "perm_sign",
    "poly_exact_div",
    "tau_to_q",
    "u_q",
]
