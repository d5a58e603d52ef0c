"""Exact Coulomb-gas computations for W3 conformal field theory.

sl3 representation data, Kac-indexed vertex charges, rational models,
fusion rules of degenerate fields, the spin-field constraint solver and a
Virasoro baseline. Everything algebraic is exact over the rationals.
"""
__version__ = "0.1.0"

from .charges import KacCharge, central_charge, classify, h_of, w_of
from .kernels import BACKEND
from .laurent import LaurentPoly
from .rational import RationalModel, kac_table
from .sl3 import Weight, tensor_decompose, weight_system
from .spin import ConstraintSpec, solve

__all__ = [
    "BACKEND",
    "ConstraintSpec",
    "KacCharge",
    "LaurentPoly",
    "RationalModel",
    "Weight",
    "central_charge",
    "classify",
    "h_of",
    "kac_table",
    "solve",
    "tensor_decompose",
    "w_of",
    "weight_system",
]
