"""Maximal-subgroup types of the alternating groups."""

from __future__ import annotations

from math import comb

from ..arith import FactoredNat, factorial, prime_power
from ..data import read_rows
from ..orders import Alt, order_gl
from ..structure import order_of
from .descriptor import SubgroupDescriptor

__all__ = ["alt_subgroup_types", "PRIMITIVE_TABLE_MAX_N"]

PRIMITIVE_TABLE_MAX_N = 24


def _perm_parity_subsets(a: int, b: int) -> int:
    """Parity of a transposition of ``S_a`` acting on ``b``-subsets."""
    return comb(a - 2, b - 1) % 2


def _perm_parity_product(a: int, b: int) -> tuple[int, int]:
    """Parities of a base transposition and a top transposition on ``[a]^b``."""
    base = a ** (b - 1) % 2
    moved = a**b - a ** (b - 1)
    return base, (moved // 2) % 2


def _intransitive(G: Alt) -> list[SubgroupDescriptor]:
    n = G.n
    out = []
    for k in range(1, (n + 1) // 2):
        if 2 * k == n:
            continue
        order = (factorial(k) * factorial(n - k)).exact_div(2)
        out.append(SubgroupDescriptor(
            "C1", G, f"(S_{k} x S_{n - k}) cap A_{n}", (("k", k),), order, True,
            "intransitive: |H| = k!(n-k)!/2",
        ))
    return out


def _imprimitive(G: Alt) -> list[SubgroupDescriptor]:
    n = G.n
    out = []
    for k in range(2, n // 2 + 1):
        if n % k:
            continue
        m = n // k
        order = (factorial(k) ** m * factorial(m)).exact_div(2)
        # S_2 wr S_4 lies inside AGL_3(2) in A_8
        maximal = (k, m) != (2, 4)
        out.append(SubgroupDescriptor(
            "C2", G, f"(S_{k} wr S_{m}) cap A_{n}", (("k", k),), order, maximal,
            "imprimitive: |H| = (k!)^(n/k)(n/k)!/2",
        ))
    return out


def _table_primitive(G: Alt) -> list[SubgroupDescriptor]:
    out = []
    for n, structure, maximal in read_rows("alternating_primitive.tsv")[1:]:
        if int(n) != G.n:
            continue
        out.append(SubgroupDescriptor(
            "TableEntry", G, structure, (), order_of(structure), maximal == "1",
            "primitive: data alternating_primitive",
        ))
    return out


def _generic_primitive(G: Alt) -> list[SubgroupDescriptor]:
    """Product, subset and affine actions for degrees beyond the table."""
    n = G.n
    out = []
    for a in range(5, n):
        b, power = 1, a
        while power < n:
            power *= a
            b += 1
        if power == n and b >= 2:
            full = factorial(a) ** b * factorial(b)
            odd = any(_perm_parity_product(a, b))
            order = full.exact_div(2) if odd else full
            out.append(SubgroupDescriptor(
                "TableEntry", G, f"(S_{a} wr S_{b}) cap A_{n}", (("a", a), ("b", b)), order, True,
                "primitive: product action",
            ))
    for a in range(5, n):
        for b in range(2, (a + 1) // 2):
            if 2 * b == a or comb(a, b) != n:
                continue
            full = factorial(a)
            order = full.exact_div(2) if _perm_parity_subsets(a, b) else full
            out.append(SubgroupDescriptor(
                "TableEntry", G, f"S_{a} cap A_{n}", (("a", a), ("b", b)), order, True,
                "primitive: action on b-subsets",
            ))
    pp = prime_power(n)
    if pp is not None:
        p, d = pp
        full = FactoredNat(n) * order_gl(d, p)
        # a Singer cycle is odd for odd p; AGL_d(2) is even for d >= 3
        order = full.exact_div(2) if p % 2 else full
        out.append(SubgroupDescriptor(
            "TableEntry", G, f"AGL_{d}({p}) cap A_{n}", (("d", d), ("p", p)), order, True,
            "primitive: affine",
        ))
    return out


def alt_subgroup_types(n: int) -> list[SubgroupDescriptor]:
    """Descriptors for the maximal-subgroup types of ``A_n``.

    Intransitive and imprimitive types are enumerated for every ``n``.
    Primitive types come from an embedded table for ``n <= 24`` and from
    the product, subset and affine families beyond that.  Primitive groups
    of the remaining O'Nan-Scott types have order below ``n^(1 + log2 n)``
    and are not enumerated.
    """
    G = Alt(n)
    out = _intransitive(G) + _imprimitive(G)
    if n <= PRIMITIVE_TABLE_MAX_N:
        out += _table_primitive(G)
    else:
        out += _generic_primitive(G)
    return out
