"""Large subgroups of almost simple groups, read from ``data/almost_simple_table.tsv``.

For socles of Lie type the rows are novelty subgroups ``H`` with
``|H cap G0|^3 >= |G0|``; the descriptor order is ``|H cap G0|`` and the
``index`` parameter is 1.  For alternating and sporadic socles the order is
``|H|`` itself and ``index`` is ``|G : G0|``, so largeness compares
``|H|^3`` with ``index * |G0|``.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Any, NamedTuple

from ..data import read_rows
from ..orders import (
    Alt,
    Classical,
    Exceptional,
    GroupId,
    Sporadic,
    order_exceptional_generic,
    order_gl,
    order_gu,
    order_sl,
    order_sp,
)
from ..structure import order_of
from .descriptor import SubgroupDescriptor
from .expr import evaluate_expression

__all__ = ["AlmostRow", "almost_rows", "almost_simple_table"]


def _spin_plus(n: int, q: int) -> int:
    m = n // 2
    out = q ** (m * (m - 1)) * (q**m - 1)
    for i in range(1, m):
        out *= q ** (2 * i) - 1
    return out


_FUNCTIONS = {
    "GL": lambda n, q: int(order_gl(n, q)),
    "SL": lambda n, q: int(order_sl(n, q)),
    "GU": lambda n, q: int(order_gu(n, q)),
    "Sp": lambda n, q: int(order_sp(n, q)),
    "G2": lambda q: int(order_exceptional_generic("G2", q)),
    "D34": lambda q: int(order_exceptional_generic("3D4", q)),
    "Spinp": _spin_plus,
    "S": lambda text: int(order_of(text)),
    "gcd": gcd,
}


class AlmostRow(NamedTuple):
    source: str
    socle: str
    condition: str
    G: str
    index: int
    H: str
    order: str
    exact: bool
    large: bool


@lru_cache(maxsize=None)
def _rows(source: str) -> tuple[AlmostRow, ...]:
    out = []
    for src, socle, cond, G, index, H, order, exact, large in read_rows("almost_simple_table.tsv")[1:]:
        out.append(AlmostRow(src, socle, cond, G, int(index), H, order, exact == "1", large == "1"))
    return tuple(out)


def almost_rows() -> tuple[AlmostRow, ...]:
    from ..data import read_text

    return _rows(read_text("almost_simple_table.tsv"))


def _socle_key(G0: GroupId) -> tuple[str, int, int]:
    """(socle pattern name, n, q) for matching rows."""
    if isinstance(G0, Alt):
        return "A", G0.n, 0
    if isinstance(G0, Classical):
        return G0.family, G0.n, G0.q
    if isinstance(G0, Exceptional):
        return G0.kind, 0, G0.q
    if isinstance(G0, Sporadic):
        return G0.name, 0, 0
    raise TypeError(f"not a simple group: {G0!r}")


def _matches(pattern: str, name: str, n: int) -> bool:
    if ":" not in pattern:
        return pattern == name
    fam, dim = pattern.split(":")
    return fam == name and (dim == "*" or int(dim) == n)


def almost_simple_table(G0: GroupId) -> list[SubgroupDescriptor]:
    """Rows of the almost simple table whose socle is ``G0``."""
    name, n, q = _socle_key(G0)
    p = 0
    if q:
        p = next(d for d in range(2, q + 1) if q % d == 0)
    out = []
    for row in almost_rows():
        if not _matches(row.socle, name, n):
            continue
        env: dict[str, Any] = {"n": n, "q": q, "p": p}
        if not evaluate_expression(row.condition, env, _FUNCTIONS):
            continue
        ms = range(1, (n + 1) // 2) if "m" in row.order else (None,)
        for m in ms:
            if m is not None:
                env["m"] = m
            order = evaluate_expression(row.order, env, _FUNCTIONS)
            params: tuple[tuple[str, Any], ...] = (("G", row.G), ("index", row.index), ("source", row.source))
            if m is not None:
                params += (("m", m),)
            out.append(SubgroupDescriptor(
                "TableEntry", G0, row.H, params, order, True, "almost simple table",
                asserted_large=row.large, order_exact=row.exact,
            ))
    return out
