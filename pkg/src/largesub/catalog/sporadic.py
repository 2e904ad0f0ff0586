"""Maximal subgroups of the sporadic groups, read from ``data/sporadic_maximals.tsv``."""

from __future__ import annotations

from functools import lru_cache

from ..data import read_rows
from ..orders import InvalidGroup, SPORADIC_NAMES, Sporadic
from ..structure import order_of
from .descriptor import SubgroupDescriptor

__all__ = ["sporadic_maximals"]


@lru_cache(maxsize=None)
def _table() -> dict[str, tuple[tuple[str, bool, bool], ...]]:
    out: dict[str, list[tuple[str, bool, bool]]] = {}
    for group, structure, maximal, provisional in read_rows("sporadic_maximals.tsv")[1:]:
        out.setdefault(group, []).append((structure, maximal == "1", provisional == "1"))
    return {k: tuple(v) for k, v in out.items()}


def sporadic_maximals(G: Sporadic | str) -> list[SubgroupDescriptor]:
    """One descriptor per conjugacy class of maximal subgroups of ``G``.

    Rows flagged provisional (candidate maximals of the Monster known only
    up to their socle) carry ``provisional=1`` in ``params`` and the
    order of that socle.
    """
    if isinstance(G, str):
        if G not in SPORADIC_NAMES:
            raise InvalidGroup(f"unknown sporadic group {G!r}")
        G = Sporadic(G)
    rows = _table().get(G.name)
    if rows is None:
        raise InvalidGroup(f"no maximal subgroup data for {G.name}")
    out = []
    for structure, maximal, provisional in rows:
        params = (("provisional", 1),) if provisional else ()
        out.append(SubgroupDescriptor(
            "TableEntry", G, structure, params, order_of(structure), maximal,
            "sporadic maximal subgroups",
        ))
    return out
