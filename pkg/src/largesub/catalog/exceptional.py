"""Maximal subgroups of the finite exceptional groups.

Three sources are combined:

* maximal parabolic subgroups, with ``|P| = |G| / |G : P|`` and the index
  computed from the Levi factor;
* the rows of ``data/exceptional_table.tsv``, whose orders and conditions
  are small Python expressions evaluated by :func:`evaluate`;
* subfield subgroups of prime index, generated here.

For ``G2``, ``2B2``, ``2G2``, ``3D4`` and ``2F4`` the rows are the full
list of maximal subgroup types.  For the larger types they are the large
non-parabolic subgroups together with the non-large ones that sit closest
to the bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod
from typing import Any, Callable

from ..arith import FactoredNat, prime_power
from ..data import read_rows
from ..orders import (
    Exceptional,
    InvalidGroup,
    exceptional_center,
    order_exceptional_generic,
    order_exceptional_subfield,
    order_simple,
    order_sl,
    order_sp,
    order_su,
)
from ..structure import order_of
from .descriptor import SubgroupDescriptor
from .expr import evaluate_expression

__all__ = [
    "COMPLETE_TYPES",
    "ExceptionalRow",
    "evaluate",
    "exceptional_rows",
    "exceptional_table",
    "parabolic_index",
    "parabolics",
]

# types whose catalogue lists every maximal subgroup
COMPLETE_TYPES = frozenset({"G2", "2B2", "2G2", "3D4", "2F4"})

_DEGREES = {
    "G2": (2, 6),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}

# Levi types of the maximal parabolics P_1, ..., P_n (Bourbaki numbering)
_LEVIS = {
    "G2": ("A1", "A1"),
    "F4": ("C3", "A1A2", "A2A1", "B3"),
    "E6": ("D5", "A5", "A1A4", "A1A2A2", "A4A1", "D5"),
    "E7": ("D6", "A6", "A1A5", "A1A2A3", "A4A2", "D5A1", "E6"),
    "E8": ("D7", "A7", "A1A6", "A1A2A4", "A4A3", "D5A2", "E6A1", "E7"),
}


def _component_degrees(label: str) -> list[int]:
    out: list[int] = []
    i = 0
    while i < len(label):
        kind, j = label[i], i + 1
        while j < len(label) and label[j].isdigit():
            j += 1
        m = int(label[i + 1:j])
        if kind == "A":
            out += range(2, m + 2)
        elif kind in "BC":
            out += range(2, 2 * m + 1, 2)
        elif kind == "D":
            out += list(range(2, 2 * m - 1, 2)) + [m]
        elif kind == "E":
            out += _DEGREES[f"E{m}"]
        else:
            raise ValueError(f"bad Levi label {label!r}")
        i = j
    return out


def _poly_prod(q: int, factors) -> int:
    return prod(q**d + c for d, c in factors)


def _twisted_indices(kind: str, q: int) -> list[tuple[str, int]]:
    """(Levi label, index) pairs for the twisted types."""
    if kind == "2E6":
        g = _poly_prod(q, [(2, -1), (5, 1), (6, -1), (8, -1), (9, 1), (12, -1)])
        levis = [
            ("A5^-T1", _poly_prod(q, [(2, -1), (3, 1), (4, -1), (5, 1), (6, -1), (1, -1)])),
            ("A2(q^2)A1T1", _poly_prod(q, [(4, -1), (6, -1), (2, -1), (1, -1)])),
            ("A1(q^2)A2T2", _poly_prod(q, [(4, -1), (2, -1), (3, -1), (2, -1)])),
            ("D4^-T2", _poly_prod(q, [(2, -1), (4, -1), (6, -1), (4, 1), (2, -1)])),
        ]
        out = []
        for label, levi in levis:
            if g % levi:
                raise ArithmeticError(f"non-integral parabolic index for 2E6 {label}")
            out.append((label, g // levi))
        return out
    if kind == "3D4":
        c = q**8 + q**4 + 1
        return [("A1(q^3)T1", c * (q + 1)), ("A1(q)T1", c * (q**3 + 1))]
    if kind == "2F4":
        c = q**6 + 1
        return [("2B2T1", c * (q + 1) * (q**3 + 1)), ("A1T1", c * (q**2 + 1) * (q**3 + 1))]
    if kind == "2G2":
        return [("T1", q**3 + 1)]
    if kind == "2B2":
        return [("T1", q**2 + 1)]
    raise InvalidGroup(f"unknown exceptional type {kind!r}")


def parabolic_index(kind: str, q: int) -> list[tuple[str, int]]:
    """``(Levi type, |G : P_i|)`` for each maximal parabolic ``P_i``.

    For untwisted types the index is
    ``prod_G (q^d - 1) / (prod_L (q^d - 1) * (q - 1))`` over the degrees of
    the Weyl groups of ``G`` and of the Levi factor ``L``.
    """
    if kind not in _DEGREES:
        return _twisted_indices(kind, q)
    top = prod(q**d - 1 for d in _DEGREES[kind])
    out = []
    for label in _LEVIS[kind]:
        bottom = prod(q**d - 1 for d in _component_degrees(label)) * (q - 1)
        if top % bottom:
            raise ArithmeticError(f"non-integral parabolic index for {kind} {label}")
        out.append((label, top // bottom))
    return out


def parabolics(G: Exceptional) -> list[SubgroupDescriptor]:
    g = order_simple(G)
    out = []
    for i, (levi, index) in enumerate(parabolic_index(G.kind, G.q), start=1):
        out.append(SubgroupDescriptor(
            "Parabolic", G, f"P_{i}", (("i", i), ("levi", levi)), g.exact_div(index), True,
            "parabolic: |G|/|G:P|",
        ))
    return out


# expression evaluation

def _spin_plus(n: int, q: int) -> int:
    m = n // 2
    return q ** (m * (m - 1)) * (q**m - 1) * prod(q ** (2 * i) - 1 for i in range(1, m))


def _spin_minus(n: int, q: int) -> int:
    m = n // 2
    return q ** (m * (m - 1)) * (q**m + 1) * prod(q ** (2 * i) - 1 for i in range(1, m))


def _generic(kind: str) -> Callable[[int], int]:
    return lambda q: int(order_exceptional_generic(kind, q))


_FUNCTIONS: dict[str, Callable[..., int]] = {
    "SL": lambda n, q: int(order_sl(n, q)),
    "SU": lambda n, q: int(order_su(n, q)),
    "Sp": lambda n, q: int(order_sp(n, q)),
    "Spin": lambda n, q: int(order_sp(n - 1, q)),
    "Spinp": _spin_plus,
    "Spinm": _spin_minus,
    "G2": _generic("G2"),
    "F4": _generic("F4"),
    "E6": _generic("E6"),
    "E6m": _generic("2E6"),
    "E7": _generic("E7"),
    "E8": _generic("E8"),
    "D34": _generic("3D4"),
    "Sz": _generic("2B2"),
    "Ree": _generic("2G2"),
    "F4t": _generic("2F4"),
    "S": lambda text: int(order_of(text)),
    "gcd": gcd,
}

def _environment(kind: str, q: int) -> dict[str, Any]:
    p, a = prime_power(q)
    e = -1 if kind == "2E6" else 1
    s = 0
    if kind in ("2B2", "2F4"):
        s = isqrt(2 * q)
    elif kind == "2G2":
        s = isqrt(3 * q)
    return {"q": q, "p": p, "a": a, "e": e, "s": s, "z": exceptional_center(kind, q)}


def evaluate(text: str, kind: str, q: int) -> Any:
    """Evaluate a table expression for the group ``kind(q)``.

    Only arithmetic, comparisons, boolean operators, tuples and the order
    functions listed in the data file header are accepted.
    """
    env = _environment(kind, q)
    env["SLe"] = lambda n, x: int(order_sl(n, x) if env["e"] == 1 else order_su(n, x))
    env["E6e"] = _FUNCTIONS["E6"] if env["e"] == 1 else _FUNCTIONS["E6m"]
    return evaluate_expression(text, env, _FUNCTIONS)


@dataclass(frozen=True)
class ExceptionalRow:
    kinds: tuple[str, ...]
    condition: str
    label: str
    order: str
    exact: bool
    large: str

    def applies(self, G: Exceptional) -> bool:
        return G.kind in self.kinds and bool(evaluate(self.condition, G.kind, G.q))


@lru_cache(maxsize=None)
def _rows(source: str) -> tuple[ExceptionalRow, ...]:
    out = []
    for kinds, cond, label, order, exact, large in read_rows("exceptional_table.tsv")[1:]:
        out.append(ExceptionalRow(tuple(kinds.split("|")), cond, label, order, exact == "1", large))
    return tuple(out)


def exceptional_rows() -> tuple[ExceptionalRow, ...]:
    from ..data import read_text

    return _rows(read_text("exceptional_table.tsv"))


def _label_twist(kind: str, label: str) -> str:
    if "^e" not in label:
        return label
    return label.replace("^e", "" if kind == "E6" else "^-")


def _prime_divisors(n: int) -> list[int]:
    return [r for r in range(2, n + 1) if n % r == 0 and all(r % d for d in range(2, r))]


def _subfields(G: Exceptional) -> list[SubgroupDescriptor]:
    """Subfield subgroups ``X(q0)`` with ``q = q0^r``, ``r`` prime."""
    kind, q = G.kind, G.q
    p, a = prime_power(q)
    out = []
    for r in sorted(set(_prime_divisors(a))):
        q0 = p ** (a // r)
        if kind in ("2B2", "2F4", "2G2"):
            if r == 2:
                continue
            if kind == "2B2" and q0 < 8:
                continue
        if kind == "2E6" and r == 2:
            continue
        if kind == "3D4" and r == 3:
            continue
        if kind == "E6" and r == 2:
            for sub in ("E6", "2E6"):
                order = order_simple(Exceptional(sub, q0))
                out.append(SubgroupDescriptor(
                    "Subfield", G, f"{'^2' if sub == '2E6' else ''}E_6({q0})", (("r", 2), ("twist", sub)),
                    order, True, "subfield", asserted_large=True, order_exact=False,
                    notes=("order of the simple group over the subfield",),
                ))
            continue
        order = order_exceptional_subfield(kind, q0, r)
        if kind in ("E6", "2E6"):
            eps = 1 if kind == "E6" else -1
            large = r == 3 and (q0 - eps) % 3 == 0
        else:
            large = r == 2
        label = {"2B2": "^2B_2", "2G2": "^2G_2", "2F4": "^2F_4", "3D4": "^3D_4", "2E6": "^2E_6"}.get(
            kind, f"{kind[0]}_{kind[1]}"
        )
        out.append(SubgroupDescriptor(
            "Subfield", G, f"{label}({q0})", (("r", r),), order, True, "subfield",
            asserted_large=large,
        ))
    return out


def exceptional_table(G: Exceptional) -> list[SubgroupDescriptor]:
    """Parabolic, tabulated and subfield descriptors for ``G``.

    ``asserted_large`` carries the recorded largeness of every
    non-parabolic row; parabolics are left to the order computation.
    """
    if not isinstance(G, Exceptional):
        raise TypeError("exceptional_table needs an Exceptional group")
    out = parabolics(G)
    for row in exceptional_rows():
        if not row.applies(G):
            continue
        order = evaluate(row.order, G.kind, G.q)
        out.append(SubgroupDescriptor(
            "TableEntry", G, _label_twist(G.kind, row.label), (), FactoredNat(order), True,
            "exceptional table", asserted_large=bool(evaluate(row.large, G.kind, G.q)),
            order_exact=row.exact,
            notes=() if row.exact else ("normalized order of a reductive subgroup",),
        ))
    out += _subfields(G)
    return out
