"""Exact zeta and L-functions of odd-degree hyperelliptic curves y^2 = f(x) over F_p,
with finite-set witnesses for the factorization Z(C) = Z(P^1) * L(C)."""

from __future__ import annotations

from .curve import CurveSpec, point_table, splitting_summary, validate_curve
from .zeta import LPoly, l_polynomial, zeta_euler_product, zeta_from_counts

__all__ = [
    "CurveSpec",
    "LPoly",
    "l_polynomial",
    "point_table",
    "splitting_summary",
    "validate_curve",
    "zeta_euler_product",
    "zeta_from_counts",
]
__version__ = "0.1.0"
