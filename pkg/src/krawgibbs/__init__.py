"""Exact Krawtchouk Fourier approximation of the sign function.

Submodules:

``combinat``    binomials, Catalan / super Catalan numbers, forward differences
``poly``        exact rational polynomials
``krawtchouk``  Krawtchouk family, weights, norms, Hermite limit
``approx``      the approximation ``F_N`` built three ways, kernel checks
``steepident``  exact steepness and the identity ladder
``gibbs``       critical point isolation, overshoot, reference constants
``cli``         command-line entry point
"""

from .approx import FourierApprox, build_closed_form, build_direct, lagrange_interpolant, sign_interpolant
from .gibbs import DecimalValue, OvershootResult, gibbs_constant, overshoot, smallest_critical_point
from .krawtchouk import KrawtchoukFamily, shifted_k
from .poly import Poly
from .steepident import steepness_exact

__version__ = "0.1.0"

__all__ = [
    "DecimalValue",
    "FourierApprox",
    "KrawtchoukFamily",
    "OvershootResult",
    "Poly",
    "build_closed_form",
    "build_direct",
    "gibbs_constant",
    "lagrange_interpolant",
    "overshoot",
    "shifted_k",
    "sign_interpolant",
    "smallest_critical_point",
    "steepness_exact",
]
