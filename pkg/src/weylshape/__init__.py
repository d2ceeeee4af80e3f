"""Exact arithmetic in fractional Weyl algebras, Newton-polygon geometry of supports,
the (rho,sigma)-bracket machinery, and a corner-configuration checker."""

from .errors import *  # noqa: F401,F403
from .geometry import Direction, NEG_INF, directions, en, leading, st, v_deg
from .kernel import Rational, UniPoly
from .weyl import LaurentElement, WeylElement, commutator, mul, parse, parse_laurent

__version__ = "0.1.0"
