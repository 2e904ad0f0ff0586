"""Maximal subgroups of ``GL_n(q)`` that do not contain ``SL_n(q)``.

Geometric types are enumerated with their orders and maximality
conditions; the S-collection entries come from ``data/gln_table.tsv``,
which also records the conditions under which each type is large and
maximal.  :func:`gln_expected` evaluates those conditions for a
descriptor so that computed largeness can be compared with the table.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, gcd
from typing import Any

from ..arith import FactoredNat, prime_power
from ..data import read_rows
from ..orders import order_gl, order_go, order_gu, order_sp, order_so
from ..structure import order_of
from .descriptor import GL, SubgroupDescriptor
from .expr import evaluate_expression

__all__ = ["GlnRow", "gln_catalog", "gln_expected", "gln_rows"]

_FUNCTIONS = {"gcd": gcd, "S": lambda text: int(order_of(text))}


class GlnRow:
    __slots__ = ("collection", "type_label", "condition", "order")

    def __init__(self, collection: str, type_label: str, condition: str, order: str):
        self.collection = collection
        self.type_label = type_label
        self.condition = condition
        self.order = order

    def __repr__(self) -> str:
        return f"GlnRow({self.collection!r}, {self.type_label!r})"


@lru_cache(maxsize=None)
def _rows(source: str) -> tuple[GlnRow, ...]:
    return tuple(GlnRow(*row) for row in read_rows("gln_table.tsv")[1:])


def gln_rows() -> tuple[GlnRow, ...]:
    from ..data import read_text

    return _rows(read_text("gln_table.tsv"))


def _env(n: int, q: int, params: dict[str, Any]) -> dict[str, Any]:
    p, _ = prime_power(q)
    env: dict[str, Any] = {"n": n, "q": q, "p": p, "i": 0, "t": 0, "k": 0, "q0": 0, "eps": ""}
    env.update(params)
    return env


def _primes_dividing(n: int) -> list[int]:
    return [r for r in range(2, n + 1) if n % r == 0 and all(r % d for d in range(2, r))]


def _c2(G: GL, add) -> None:
    n, q = G.n, G.q
    for t in range(2, n + 1):
        if n % t:
            continue
        m = n // t
        order = order_gl(m, q) ** t * factorial(t)
        if m == 1:
            # monomial groups over F_2, F_3, F_4 lie in a C8 subgroup
            maximal = (q >= 5 and (n, q) != (2, 5)) or (n, q) in ((2, 2), (2, 4), (3, 3))
        else:
            maximal = (n, q) != (4, 2)
        add("C2", "GL_{n/t}(q) wr S_t", {"t": t}, order, maximal)


def _c3(G: GL, add) -> None:
    n, q = G.n, G.q
    for k in _primes_dividing(n):
        if (n, q) == (2, 2):
            continue  # GL_1(4).2 is the whole of GL_2(2)
        add("C3", "GL_{n/k}(q^k)", {"k": k}, order_gl(n // k, q**k) * k, True)


def _c4(G: GL, add) -> None:
    n, q = G.n, G.q
    for a in range(2, n):
        b, r = divmod(n, a)
        if r or a >= b:
            continue
        order = (order_gl(a, q) * order_gl(b, q)).exact_div(q - 1)
        add("C4", "GL_a(q) tensor GL_b(q)", {"a": a, "b": b}, order, (a, q) != (2, 2))


def _c5(G: GL, add) -> None:
    n, q = G.n, G.q
    p, e = prime_power(q)
    for k in _primes_dividing(e):
        q0 = p ** (e // k)
        ratio = (q - 1) // (q0 - 1)
        add("C5", "GL_n(q0)", {"k": k, "q0": q0}, order_gl(n, q0) * ratio, gcd(n, ratio) == 1)


def _c6(G: GL, add) -> None:
    n, q = G.n, G.q
    p, e = prime_power(q)
    pp = prime_power(n)
    if pp is None or p == pp[0]:
        return
    r, m = pp
    if r == 2:
        if e != 1:
            return
        if n == 2:
            if q == 3:
                return  # the normaliser is the whole of GL_2(3)
            add("C6", "2^{1+2}_-.O_2^-(2)", {"r": 2, "m": 1}, 24 * (q - 1), q % 8 in (3, 5))
            return
        if q % 4 == 1:
            add("C6", f"2^{{1+{2 * m}}}.Sp_{2 * m}(2)", {"r": 2, "m": m},
                order_sp(2 * m, 2) * 2 ** (2 * m) * (q - 1), False)
        else:
            for sign in ("+", "-"):
                add("C6", f"2^{{1+{2 * m}}}_{sign}.O_{2 * m}^{sign}(2)", {"r": 2, "m": m, "eps": sign},
                    order_go(2 * m, 2, sign) * 2 ** (2 * m) * (q - 1), False)
        return
    # r odd: q = p^e with e the order of p modulo r
    if (q - 1) % r or any((p**f - 1) % r == 0 for f in range(1, e)):
        return
    maximal = (q - 1) % (r * r) != 0
    add("C6", f"{r}^{2 * m}.Sp_{2 * m}({r})", {"r": r, "m": m},
        order_sp(2 * m, r) * r ** (2 * m) * (q - 1), maximal)


def _c7(G: GL, add) -> None:
    n, q = G.n, G.q
    for m in range(3, n):
        t, power = 1, m
        while power < n:
            power *= m
            t += 1
        if power == n and t >= 2:
            order = (order_gl(m, q) ** t * factorial(t)).exact_div((q - 1) ** (t - 1))
            add("C7", "GL_m(q) wr S_t (tensor)", {"m": m, "t": t}, order, True)


def _c8(G: GL, add) -> None:
    n, q = G.n, G.q
    p, e = prime_power(q)
    if n >= 4 and n % 2 == 0:
        add("C8", "Sp_n(q)", {"kind": "Sp"}, order_sp(n, q) * (q - 1), gcd(n // 2, q - 1) == 1)
    if n >= 3 and q % 2:
        maximal = gcd(n, q - 1) == gcd(n, 2)
        if n % 2:
            add("C8", "O_n^eps(q)", {"kind": "O", "eps": "o"}, order_so(n, q, "o") * (q - 1), maximal)
        else:
            for sign in ("+", "-"):
                add("C8", "O_n^eps(q)", {"kind": "O", "eps": sign}, order_go(n, q, sign) * (q - 1), maximal)
    if n >= 3 and e % 2 == 0:
        q0 = p ** (e // 2)
        order = (order_gu(n, q0) * (q - 1)).exact_div(q0 + 1)
        add("C8", "GU_n(q0)", {"kind": "GU", "q0": q0}, order, gcd(n, q0 - 1) == 1)


def gln_catalog(n: int, q: int) -> list[SubgroupDescriptor]:
    """Maximal-subgroup types of ``GL_n(q)`` not containing ``SL_n(q)``."""
    if n < 2 or prime_power(q) is None:
        raise ValueError("need n >= 2 and q a prime power")
    G = GL(n, q)
    out: list[SubgroupDescriptor] = []

    def add(col: str, label: str, params: dict[str, Any], order, maximal: bool) -> None:
        out.append(SubgroupDescriptor(
            col, G, label, tuple(params.items()), FactoredNat(int(order)), bool(maximal),
            f"GL {col}",
        ))

    for i in range(1, n):
        order = FactoredNat(q) ** (i * (n - i)) * order_gl(i, q) * order_gl(n - i, q)
        add("C1", "P_i", {"i": i}, order, True)
    for part in (_c2, _c3, _c4, _c5, _c6, _c7, _c8):
        part(G, add)
    for row in gln_rows():
        if row.collection == "S" and evaluate_expression(row.condition, _env(n, q, {}), _FUNCTIONS):
            order = evaluate_expression(row.order, _env(n, q, {}), _FUNCTIONS)
            add("S", row.type_label, {}, order, True)
    return out


def gln_expected(desc: SubgroupDescriptor) -> bool:
    """Whether the table lists ``desc`` as a large maximal subgroup."""
    G = desc.ambient
    env = _env(G.n, G.q, desc.param_dict)
    for row in gln_rows():
        if row.collection == desc.collection and row.type_label == desc.type_label:
            return bool(evaluate_expression(row.condition, env, _FUNCTIONS))
    return False
