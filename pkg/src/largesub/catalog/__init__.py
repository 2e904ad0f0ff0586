"""Maximal-subgroup catalogues for every family of finite simple groups."""

from __future__ import annotations

from ..orders import Alt, Classical, Exceptional, GroupId, Sporadic
from .almost import almost_simple_table
from .alternating import PRIMITIVE_TABLE_MAX_N, alt_subgroup_types
from .classical import c5_largeness_f, classical_geometric
from .descriptor import GL, ConditionReport, SubgroupDescriptor, ambient_order
from .exceptional import COMPLETE_TYPES, exceptional_table
from .gln import gln_catalog, gln_expected
from .s_collection import a_collection_ambient, liebeck_bound_holds, s_collection
from .sporadic import sporadic_maximals

__all__ = [
    "COMPLETE_TYPES",
    "ConditionReport",
    "GL",
    "PRIMITIVE_TABLE_MAX_N",
    "SubgroupDescriptor",
    "a_collection_ambient",
    "almost_simple_table",
    "alt_subgroup_types",
    "ambient_order",
    "c5_largeness_f",
    "catalog_for",
    "classical_geometric",
    "exceptional_table",
    "gln_catalog",
    "gln_expected",
    "liebeck_bound_holds",
    "s_collection",
    "sporadic_maximals",
]


def catalog_for(G: GroupId) -> list[SubgroupDescriptor]:
    """Every catalogued maximal-subgroup descriptor of the simple group ``G``."""
    if isinstance(G, Alt):
        return alt_subgroup_types(G.n)
    if isinstance(G, Classical):
        return classical_geometric(G) + s_collection(G)
    if isinstance(G, Exceptional):
        return exceptional_table(G)
    if isinstance(G, Sporadic):
        return sporadic_maximals(G)
    raise TypeError(f"not a simple group identifier: {G!r}")
