"""Nodal surfaces of degree 3n built from shifted A2 folding polynomials."""

from ._nodal import *  # noqa: F401,F403
from ._nodal import VerificationError  # noqa: F401

__version__ = "0.1.0"
