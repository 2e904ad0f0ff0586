"""Largeness of maximal subgroups of finite simple groups, computed exactly."""

from .arith import FactoredNat, PrimePower, factorial, gcd, lcm, p_part, zsigmondy
from .orders import Alt, Classical, Exceptional, GroupId, InvalidGroup, Sporadic, order_simple

__version__ = "0.1.0"

__all__ = [
    "Alt",
    "Classical",
    "Exceptional",
    "FactoredNat",
    "GroupId",
    "InvalidGroup",
    "PrimePower",
    "Sporadic",
    "factorial",
    "gcd",
    "lcm",
    "order_simple",
    "p_part",
    "zsigmondy",
]
