"""Double and dual Schur functions with exact polynomial coefficients."""

from .algebra import ASpec, Poly, format_poly, parse_poly, parse_spec
from .basis import DoubleSym, dual_lr, expand_in_double_schur, lr_polynomial
from .double import XPoly, double_schur, skew_double_schur
from .errors import DoubleSymError
from .series import SchurSeries, dual_schur, schur_to_dual
from .shapes import Partition, SkewShape

__all__ = [
    "ASpec", "Poly", "format_poly", "parse_poly", "parse_spec",
    "DoubleSym", "dual_lr", "expand_in_double_schur", "lr_polynomial",
    "XPoly", "double_schur", "skew_double_schur",
    "DoubleSymError",
    "SchurSeries", "dual_schur", "schur_to_dual",
    "Partition", "SkewShape",
]

__version__ = "0.1.0"
