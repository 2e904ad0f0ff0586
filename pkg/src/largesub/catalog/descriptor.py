"""Subgroup descriptors shared by every catalog family."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Union

from ..arith import FactoredNat
from ..orders import GroupId, order_gl

__all__ = ["COLLECTIONS", "ConditionReport", "GL", "SubgroupDescriptor", "ambient_order", "ambient_label"]

COLLECTIONS = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "S", "A", "Parabolic", "Subfield", "TableEntry")


@dataclass(frozen=True, order=True)
class GL:
    """The general linear group ``GL_n(q)``; not simple, but catalogued."""

    n: int
    q: int

    @property
    def label(self) -> str:
        return f"GL{self.n}({self.q})"


Ambient = Union[GroupId, GL]


def ambient_order(G: Ambient) -> FactoredNat:
    from ..orders import order_simple

    if isinstance(G, GL):
        return order_gl(G.n, G.q)
    return order_simple(G)


def ambient_label(G: Ambient) -> str:
    return G.label


@dataclass(frozen=True)
class SubgroupDescriptor:
    """A maximal-subgroup candidate of ``ambient``.

    ``params`` is an ordered tuple of ``(name, value)`` pairs.  ``order``
    is the order of ``H`` itself (for an almost simple ambient, of its
    intersection with the socle).  When ``asserted_large`` is set the row
    comes from a published table whose largeness is recorded rather than
    recomputed; ``order_exact`` says whether ``order`` is the true order
    or a documented normalization of it.
    """

    collection: str
    ambient: Ambient
    type_label: str
    params: tuple[tuple[str, Any], ...]
    order: FactoredNat
    maximal: bool = True
    provenance: str = ""
    asserted_large: Optional[bool] = None
    order_exact: bool = True
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.collection not in COLLECTIONS:
            raise ValueError(f"unknown collection {self.collection!r}")
        if not isinstance(self.order, FactoredNat):
            object.__setattr__(self, "order", FactoredNat(int(self.order)))

    def param(self, name: str, default: Any = None) -> Any:
        for k, v in self.params:
            if k == name:
                return v
        return default

    @property
    def param_dict(self) -> dict[str, Any]:
        return dict(self.params)

    def params_text(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.params)

    def sort_key(self) -> tuple[str, str, str]:
        return (self.collection, self.type_label, self.params_text())

    def __str__(self) -> str:
        extra = f" [{self.params_text()}]" if self.params else ""
        return f"{self.ambient.label}: {self.collection} {self.type_label}{extra} |H|={self.order}"


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the largeness test for one descriptor."""

    descriptor: SubgroupDescriptor
    is_large: bool
    margin: int
    reasons: tuple[str, ...]
    decided_by: str = "Order"

    def to_json(self) -> dict[str, Any]:
        d = self.descriptor
        return {
            "collection": d.collection,
            "type_label": d.type_label,
            "params": {k: str(v) for k, v in d.params},
            "order": str(d.order.value),
            "maximal": d.maximal,
            "is_large": self.is_large,
            "margin": self.margin,
            "decided_by": self.decided_by,
            "provenance": d.provenance,
            "reasons": list(self.reasons),
        }
