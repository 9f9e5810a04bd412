"""Exact Wronskian Appell polynomials over the rationals."""

from .appell import AppellSpec, appell_poly, dual, parse_spec, preset
from .exactpoly import Poly
from .partition import Partition
from .wapoly import wap

__version__ = "0.1.0"
