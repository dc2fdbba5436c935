"""Motivic classes of Hilbert schemes of points on P^2 and the stable-range
cohomology of moduli spaces of one-dimensional sheaves on P^2."""

import logging

from .hilb import HilbCache, betti_hilb, euler_oracle, hilb_class, hilb_classes
from .lpoly import L, LPoly, eq_mod
from .moduli import (
    betti_tail,
    chi0,
    duality_symmetry,
    motivic_tail,
    params,
    rho,
    verify_chi_independence,
)
from .qseries import QSeries

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "HilbCache",
    "L",
    "LPoly",
    "QSeries",
    "betti_hilb",
    "betti_tail",
    "chi0",
    "duality_symmetry",
    "eq_mod",
    "euler_oracle",
    "hilb_class",
    "hilb_classes",
    "motivic_tail",
    "params",
    "rho",
    "verify_chi_independence",
]
