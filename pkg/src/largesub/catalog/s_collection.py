"""Large maximal subgroups of classical groups outside the geometric classes.

The rows live in ``data/s_collection.tsv``.  Each row names an ambient
family and dimension, a condition id on ``q`` and the socle of ``H`` as a
structure string in which ``q`` and ``q0`` are substituted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from ..arith import prime_power
from ..data import read_rows
from ..orders import Classical
from ..structure import order_of
from .descriptor import SubgroupDescriptor

__all__ = [
    "A5_FIELDS",
    "SRow",
    "a_collection_ambient",
    "liebeck_bound_holds",
    "s_collection",
    "s_rows",
]

# q for which A_5 is a large maximal subgroup of L_2(q)
A5_FIELDS = frozenset({9, 11, 19, 29, 31, 41, 49, 59, 61, 71})


def _root(q: int, k: int) -> Optional[int]:
    p, a = prime_power(q)
    return p ** (a // k) if a % k == 0 else None


def _p2_odd_log(q: int) -> bool:
    p, a = prime_power(q)
    return p == 2 and a > 1 and a % 2 == 1


_CONDITIONS: dict[str, Callable[[int], bool]] = {
    "any": lambda q: True,
    "p_odd": lambda q: q % 2 == 1,
    "p_even": lambda q: q % 2 == 0,
    "q_square": lambda q: _root(q, 2) is not None,
    "q_cube_p_odd": lambda q: q % 2 == 1 and _root(q, 3) is not None,
    "p2_odd_log_gt1": _p2_odd_log,
    "a5_remark": lambda q: q in A5_FIELDS,
    "0": lambda q: False,
    "1": lambda q: True,
}


def condition_holds(cond: str, q: int) -> bool:
    """Evaluate a condition id; ``q=a,b,...`` lists admissible fields."""
    if cond.startswith("q="):
        return q in {int(x) for x in cond[2:].split(",")}
    try:
        return _CONDITIONS[cond](q)
    except KeyError:
        raise ValueError(f"unknown condition id {cond!r}") from None


@dataclass(frozen=True)
class SRow:
    family: str
    n: int
    condition: str
    label: str
    socle: str
    ext: int
    acoll: str

    def applies(self, G: Classical) -> bool:
        return G.family == self.family and G.n == self.n and condition_holds(self.condition, G.q)

    def socle_text(self, q: int) -> str:
        text = self.socle
        if "q0" in text:
            k = 2 if "POmega" in text else 3
            text = text.replace("q0", str(_root(q, k)))
        return text.replace("(q)", f"({q})")


@lru_cache(maxsize=None)
def _rows(source: str) -> tuple[SRow, ...]:
    out = []
    for fam, n, cond, label, socle, ext, acoll in read_rows("s_collection.tsv")[1:]:
        out.append(SRow(fam, int(n), cond, label, socle, int(ext), acoll))
    return tuple(out)


def s_rows() -> tuple[SRow, ...]:
    from ..data import read_text

    return _rows(read_text("s_collection.tsv"))


def s_collection(G: Classical) -> list[SubgroupDescriptor]:
    """The large maximal S-collection subgroups of ``G``, one per table row."""
    out = []
    for row in s_rows():
        if not row.applies(G):
            continue
        socle = row.socle_text(G.q)
        in_a = condition_holds(row.acoll, G.q)
        out.append(SubgroupDescriptor(
            "A" if in_a else "S", G, row.label, (("socle", socle),),
            order_of(socle) * row.ext, True,
            "S-collection table", asserted_large=True,
        ))
    return out


def liebeck_bound_holds(desc: SubgroupDescriptor) -> bool:
    """``|H| < q^(3un)`` with ``u = 2`` for unitary ambients, else 1.

    Only meaningful for S-collection subgroups outside the A-collection.
    """
    if desc.collection != "S":
        raise ValueError("the bound applies to S-collection descriptors outside the A-collection")
    G = desc.ambient
    u = 2 if G.family == "U" else 1
    return int(desc.order) < G.q ** (3 * u * G.n)


def a_collection_ambient(d: int, p: int) -> str:
    """Ambient orthogonal/symplectic group of ``A_d`` on its deleted permutation module."""
    if d < 5 or prime_power(p) is None or prime_power(p)[1] != 1:
        raise ValueError("need d >= 5 and p prime")
    if p == 2:
        if d % 4 == 2:
            return f"Sp_{d - 2}(2)"
        if d % 4 == 0:
            return f"Omega_{d - 2}^{'+' if d % 8 == 0 else '-'}(2)"
        return f"Omega_{d - 1}^{'+' if d % 8 in (1, 7) else '-'}(2)"
    dim = d - 1 if d % p else d - 2
    return f"POmega_{dim}^eps({p})" if dim % 2 == 0 else f"Omega_{dim}({p})"
