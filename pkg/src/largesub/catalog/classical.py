"""Geometric (Aschbacher class C1-C8) subgroups of the classical groups.

Orders are exact.  Most are obtained from the full preimage ``H_full`` in
the relevant matrix group: for linear and unitary groups from the order of
``H_full`` and of its determinant image, for orthogonal groups from the
image of ``H_full`` in ``GO/Omega`` (determinant and spinor norm, or the
Dickson invariant in characteristic 2).  Class membership and maximality
conditions follow Kleidman-Liebeck, column IV; the handful of
small-dimensional exceptions are marked inline.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from ..arith import FactoredNat, factorial, gcd, is_prime, lcm, p_part, prime_power
from ..orders import (
    Classical,
    omega_center,
    order_gl,
    order_go,
    order_gu,
    order_omega,
    order_simple,
    order_so,
    order_sp,
)
from .descriptor import SubgroupDescriptor

__all__ = ["c5_largeness_f", "classical_geometric"]

_KL = "KL column IV"


def _f(x: int) -> FactoredNat:
    return FactoredNat(x)


def _primes_dividing(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if n % k == 0 and is_prime(k)]


def _mult_order(p: int, r: int) -> int:
    e, x = 1, p % r
    while x != 1:
        x = x * p % r
        e += 1
    return e


def _signs(eps: int) -> str:
    return "+" if eps > 0 else "-"


def _root(q: int, k: int) -> int | None:
    """``q0`` with ``q0^k = q``, if it exists."""
    p, a = prime_power(q)
    if a % k:
        return None
    return p ** (a // k)


class _Builder:
    def __init__(self, G: Classical):
        self.G = G
        self.out: list[SubgroupDescriptor] = []

    def add(self, col: str, label: str, params: dict, order: FactoredNat, maximal: bool = True, prov: str = _KL, notes=()) -> None:
        self.out.append(SubgroupDescriptor(col, self.G, label, tuple(params.items()), order, maximal, prov, notes=tuple(notes)))


# -- linear ---------------------------------------------------------------------


def _lin_order(h_full: FactoredNat, s: int, n: int, q: int) -> FactoredNat:
    """``|H|`` in ``L_n(q)`` from ``|H_full|`` and ``|det(H_full)| = s``."""
    d = gcd(n, q - 1)
    return h_full.exact_div(d * lcm(s, (q - 1) // d))


def _linear(G: Classical) -> list[SubgroupDescriptor]:
    n, q = G.n, G.q
    p = G.p
    d = gcd(n, q - 1)
    b = _Builder(G)
    for m in range(1, n):
        h = _f(q) ** (m * (n - m)) * order_gl(m, q) * order_gl(n - m, q)
        b.add("C1", f"P_{m}", {"kind": "P", "m": m}, _lin_order(h, q - 1, n, q))
    for t in _divisors_ge2(n):
        m = n // t
        if (m == 1 and q < 5) or (m == 2 and q < 3):
            continue
        h = order_gl(m, q) ** t * factorial(t)
        maximal = not (n == 2 and q in (5, 7, 9, 11))
        b.add("C2", f"GL_{m}(q) wr S_{t}", {"kind": "wreath", "m": m, "t": t}, _lin_order(h, q - 1, n, q), maximal)
    for k in _primes_dividing(n):
        h = order_gl(n // k, q**k) * k
        # 7:3 lies in L_3(2) < L_3(4)
        maximal = not (n == 2 and q in (7, 9)) and (n, q) != (3, 4)
        b.add("C3", f"GL_{n // k}(q^{k})", {"kind": "field", "k": k}, _lin_order(h, q - 1, n, q), maximal)
    for a, c in _tensor_pairs(n):
        h = (order_gl(a, q) * order_gl(c, q)).exact_div(q - 1)
        s = (q - 1) // gcd(q - 1, gcd(a, c))
        b.add("C4", f"GL_{a}(q) x GL_{c}(q)", {"kind": "tensor", "a": a, "b": c}, _lin_order(h, s, n, q))
    for k, q0 in _subfields(q):
        h = order_gl(n, q0) * (q - 1) // (q0 - 1)
        s = lcm(q0 - 1, (q - 1) // d)
        maximal = not (n == 2 and q0 == 2 and k > 2)
        b.add("C5", f"GL_{n}(q_0)", {"kind": "subfield", "k": k, "q0": q0}, _lin_order(h, s, n, q), maximal)
    _linear_c6(b, n, q, p)
    for a, t in _tensor_powers(n):
        if a < 3:
            continue
        h = (order_gl(a, q) ** t).exact_div((q - 1) ** (t - 1)) * factorial(t)
        s = _tensor_det_image(q - 1, a, t)
        b.add("C7", f"GL_{a}(q) wr S_{t} (tensor)", {"kind": "tensorwreath", "a": a, "t": t}, _lin_order(h, s, n, q))
    if n >= 4 and n % 2 == 0:
        h = order_sp(n, q) * (q - 1)
        s = (q - 1) // gcd(q - 1, n // 2)
        b.add("C8", f"Sp_{n}(q)", {"kind": "Sp"}, _lin_order(h, s, n, q))
    if n >= 3 and q % 2:
        if n % 2:
            h = order_go(n, q, "o") * ((q - 1) // 2)
            s = (q - 1) // gcd(q - 1, n)
            b.add("C8", f"O_{n}(q)", {"kind": "O", "eps": "o"}, _lin_order(h, s, n, q))
        else:
            for e in "+-":
                h = order_go(n, q, e) * (q - 1)
                s = lcm(2, (q - 1) // gcd(q - 1, n // 2))
                b.add("C8", f"O_{n}^{e}(q)", {"kind": "O", "eps": e}, _lin_order(h, s, n, q))
    q0 = _root(q, 2)
    if n >= 3 and q0 is not None:
        h = order_gu(n, q0) * ((q - 1) // (q0 + 1))
        s = lcm(q0 + 1, (q - 1) // d)
        # U_3(2) = 3^2.Q_8 coincides with the C6 subgroup of L_3(4)
        b.add("C8", f"U_{n}(q_0)", {"kind": "U", "q0": q0}, _lin_order(h, s, n, q), (n, q0) != (3, 2))
    return b.out


def _linear_c6(b: _Builder, n: int, q: int, p: int) -> None:
    pp = prime_power(n)
    if pp is None:
        return
    r, m = pp
    if r == p:
        return
    if n == 2:
        if q != p:
            return
        if q % 8 in (3, 5):
            b.add("C6", "2^{1+2}_-.O_2^-(2)", {"kind": "extraspecial", "r": 2, "m": 1}, _f(12), p % 10 not in (1, 9),
                  notes=("H = A_4",))
        else:
            b.add("C6", "2^{1+2}_-.O_2^-(2)", {"kind": "extraspecial", "r": 2, "m": 1}, _f(24), notes=("H = S_4",))
        return
    if r == 2:
        if q != p or q % 4 != 1:
            return
        full = _f(2) ** (2 * m) * order_sp(2 * m, 2)
        order = full if q % 8 == 1 else full.exact_div(2)
    else:
        if q != p ** _mult_order(p, r):
            return
        if n == 3:
            order = _f(216) if (q - 1) % 9 == 0 else _f(72)
        else:
            order = _f(r) ** (2 * m) * order_sp(2 * m, r)
    b.add("C6", f"{r}^{{1+{2 * m}}}.Sp_{2 * m}({r})", {"kind": "extraspecial", "r": r, "m": m}, order)


# -- unitary ----------------------------------------------------------------------


def _uni_order(h_full: FactoredNat, s: int, n: int, q: int) -> FactoredNat:
    d = gcd(n, q + 1)
    return h_full.exact_div(d * lcm(s, (q + 1) // d))


def _unitary(G: Classical) -> list[SubgroupDescriptor]:
    n, q = G.n, G.q
    p = G.p
    d = gcd(n, q + 1)
    b = _Builder(G)
    for m in range(1, n // 2 + 1):
        h = _f(q) ** (m * (2 * n - 3 * m)) * order_gl(m, q * q) * order_gu(n - 2 * m, q)
        b.add("C1", f"P_{m}", {"kind": "P", "m": m}, _uni_order(h, q + 1, n, q))
    for m in range(1, (n + 1) // 2):
        if 2 * m == n:
            continue
        h = order_gu(m, q) * order_gu(n - m, q)
        b.add("C1", f"GU_{m}(q) x GU_{n - m}(q)", {"kind": "N", "m": m}, _uni_order(h, q + 1, n, q))
    for t in _divisors_ge2(n):
        m = n // t
        h = order_gu(m, q) ** t * factorial(t)
        maximal = (m, q) != (2, 2) and not ((m, q) == (1, 2) and n > 5)
        b.add("C2", f"GU_{m}(q) wr S_{t}", {"kind": "wreath", "m": m, "t": t}, _uni_order(h, q + 1, n, q), maximal)
    if n % 2 == 0:
        h = order_gl(n // 2, q * q) * 2
        b.add("C2", f"GL_{n // 2}(q^2)", {"kind": "GL"}, _uni_order(h, q + 1, n, q), q >= 3)
    for k in _primes_dividing(n):
        if k == 2:
            continue
        h = order_gu(n // k, q**k) * k
        maximal = not (n == 3 and q in (3, 5))
        b.add("C3", f"GU_{n // k}(q^{k})", {"kind": "field", "k": k}, _uni_order(h, q + 1, n, q), maximal)
    for a, c in _tensor_pairs(n):
        h = (order_gu(a, q) * order_gu(c, q)).exact_div(q + 1)
        s = (q + 1) // gcd(q + 1, gcd(a, c))
        b.add("C4", f"GU_{a}(q) x GU_{c}(q)", {"kind": "tensor", "a": a, "b": c}, _uni_order(h, s, n, q))
    for k, q0 in _subfields(q):
        if k == 2:
            continue
        h = order_gu(n, q0) * ((q + 1) // (q0 + 1))
        s = lcm(q0 + 1, (q + 1) // d)
        b.add("C5", f"GU_{n}(q_0)", {"kind": "subfield", "k": k, "q0": q0}, _uni_order(h, s, n, q))
    if n % 2 == 0 and n >= 4:
        order = order_sp(n, q) * gcd(q + 1, n // 2)
        b.add("C5", f"Sp_{n}(q)", {"kind": "Sp"}, order.exact_div(d))
    if q % 2 and not (n == 3 and q <= 5):
        if n % 2:
            b.add("C5", f"O_{n}(q)", {"kind": "O", "eps": "o"}, order_so(n, q, "o"))
        else:
            for e in "+-":
                h = order_go(n, q, e) * (q + 1)
                img = lcm(2, (q + 1) // gcd(q + 1, n // 2))
                b.add("C5", f"O_{n}^{e}(q)", {"kind": "O", "eps": e}, h.exact_div(d * img))
    _unitary_c6(b, n, q, p)
    for a, t in _tensor_powers(n):
        if a < 3:
            continue
        h = (order_gu(a, q) ** t).exact_div((q + 1) ** (t - 1)) * factorial(t)
        s = _tensor_det_image(q + 1, a, t)
        b.add("C7", f"GU_{a}(q) wr S_{t} (tensor)", {"kind": "tensorwreath", "a": a, "t": t}, _uni_order(h, s, n, q))
    return b.out


def _unitary_c6(b: _Builder, n: int, q: int, p: int) -> None:
    pp = prime_power(n)
    if pp is None:
        return
    r, m = pp
    if r == p:
        return
    if r == 2:
        if q != p or q % 4 != 3:
            return
        full = _f(2) ** (2 * m) * order_sp(2 * m, 2)
        order = full if q % 8 == 7 else full.exact_div(2)
    else:
        o = _mult_order(p, r)
        if o % 2 or q != p ** (o // 2):
            return
        if n == 3:
            order = _f(216) if (q + 1) % 9 == 0 else _f(72)
        else:
            order = _f(r) ** (2 * m) * order_sp(2 * m, r)
    maximal = (n, q) != (3, 5)
    b.add("C6", f"{r}^{{1+{2 * m}}}.Sp_{2 * m}({r})", {"kind": "extraspecial", "r": r, "m": m}, order, maximal)


# -- symplectic ---------------------------------------------------------------------


def _symplectic(G: Classical) -> list[SubgroupDescriptor]:
    n, q = G.n, G.q
    p = G.p
    z = gcd(2, q - 1)
    b = _Builder(G)

    def add(col, label, params, h, maximal=True):
        b.add(col, label, params, h.exact_div(z), maximal)

    for m in range(1, n // 2 + 1):
        h = _f(q) ** (m * (m + 1) // 2 + m * (n - 2 * m)) * order_gl(m, q) * order_sp(n - 2 * m, q)
        add("C1", f"P_{m}", {"kind": "P", "m": m}, h)
    for m in range(2, (n + 1) // 2, 2):
        if 2 * m == n:
            continue
        add("C1", f"Sp_{m}(q) x Sp_{n - m}(q)", {"kind": "N", "m": m}, order_sp(m, q) * order_sp(n - m, q))
    for t in _divisors_ge2(n):
        m = n // t
        if m % 2 or (m, q) == (2, 2):
            continue
        add("C2", f"Sp_{m}(q) wr S_{t}", {"kind": "wreath", "m": m, "t": t}, order_sp(m, q) ** t * factorial(t))
    if q % 2:
        add("C2", f"GL_{n // 2}(q).2", {"kind": "GL"}, order_gl(n // 2, q) * 2, (n, q) != (4, 3))
    for k in _primes_dividing(n):
        if (n // k) % 2:
            continue
        add("C3", f"Sp_{n // k}(q^{k})", {"kind": "field", "k": k}, order_sp(n // k, q**k) * k)
    if q % 2:
        add("C3", f"GU_{n // 2}(q)", {"kind": "GU"}, order_gu(n // 2, q) * 2, (n, q) != (4, 3))
    if q % 2:
        for a in range(2, n, 2):
            c = n // a
            if n % a or c < 3:
                continue
            if c % 2:
                h = (order_sp(a, q) * order_go(c, q, "o")).exact_div(2)
                add("C4", f"Sp_{a}(q) x O_{c}(q)", {"kind": "tensor", "a": a, "b": c, "eps": "o"}, h)
            else:
                for e in "+-":
                    h = order_sp(a, q) * order_go(c, q, e)
                    add("C4", f"Sp_{a}(q) x O_{c}^{e}(q)", {"kind": "tensor", "a": a, "b": c, "eps": e}, h)
    for k, q0 in _subfields(q):
        order = order_sp(n, q0).exact_div(gcd(2, q0 - 1)) * gcd(gcd(2, q - 1), k)
        b.add("C5", f"Sp_{n}(q_0)", {"kind": "subfield", "k": k, "q0": q0}, order)
    pp = prime_power(n)
    if q == p and p % 2 and pp is not None and pp[0] == 2:
        m = pp[1]
        top = order_go(2 * m, 2, "-") if q % 8 in (1, 7) else order_omega(2 * m, 2, "-")
        b.add("C6", f"2^{{1+{2 * m}}}_-.O_{2 * m}^-(2)", {"kind": "extraspecial", "r": 2, "m": m}, _f(2) ** (2 * m) * top)
    for a, t in _tensor_powers(n):
        if a % 2 or q % 2 == 0 or t % 2 == 0 or (a, q) == (2, 3):
            continue
        h = (order_sp(a, q) ** t).exact_div(2 ** (t - 1)) * factorial(t)
        add("C7", f"Sp_{a}(q) wr S_{t} (tensor)", {"kind": "tensorwreath", "a": a, "t": t}, h)
    if q % 2 == 0:
        for e in "+-":
            b.add("C8", f"O_{n}^{e}(q)", {"kind": "O", "eps": e}, order_go(n, q, e))
    return b.out


# -- orthogonal ---------------------------------------------------------------------


def _ortho_sign(n: int, q: int) -> str:
    """Sign of the form ``sum x_i^2`` style decompositions with square discriminant."""
    return "+" if (n // 2) % 2 == 0 or q % 4 == 1 else "-"


def _orthogonal(G: Classical) -> list[SubgroupDescriptor]:
    n, q = G.n, G.q
    p = G.p
    eps = G.sign
    odd_q = q % 2 == 1
    z = omega_center(n, q, eps)
    b = _Builder(G)
    full_img = 4 if odd_q else 2

    def add(col, label, params, h, img, maximal=True, notes=()):
        b.add(col, label, params, h.exact_div(img * z), maximal, notes=notes)

    # C1
    if eps == "o":
        ms = range(1, (n - 1) // 2 + 1)
    elif eps == "+":
        ms = [m for m in range(1, n // 2 - 1)] + [n // 2]
    else:
        ms = range(1, n // 2)
    for m in ms:
        rest = n - 2 * m
        rest_sign = "o" if eps == "o" else eps
        h = _f(q) ** (m * (m - 1) // 2 + m * rest) * order_gl(m, q) * order_go(rest, q, rest_sign)
        if odd_q:
            img = 4 if rest >= 1 else 2
        else:
            img = 2 if rest >= 2 else 1
        add("C1", f"P_{m}", {"kind": "P", "m": m}, h, img)
    if eps == "o":
        for m in range(2, n, 2):
            for e in "+-":
                h = order_go(m, q, e) * order_go(n - m, q, "o")
                add("C1", f"O_{m}^{e}(q) x O_{n - m}(q)", {"kind": "N", "m": m, "eps1": e}, h, 4)
    else:
        sgn = 1 if eps == "+" else -1
        for m in range(1, n // 2 + 1):
            if m % 2:
                if 2 * m == n:
                    continue
                if odd_q:
                    h = order_go(m, q, "o") * order_go(n - m, q, "o")
                    add("C1", f"O_{m}(q) x O_{n - m}(q)", {"kind": "N", "m": m}, h, 4)
                elif m == 1:
                    b.add("C1", f"Sp_{n - 2}(q)", {"kind": "N", "m": 1}, order_sp(n - 2, q))
                continue
            for e1 in "+-":
                e2 = _signs(sgn * (1 if e1 == "+" else -1))
                if 2 * m == n and not (e1 == "+" and e2 == "-"):
                    continue
                h = order_go(m, q, e1) * order_go(n - m, q, e2)
                maximal = not (m == 2 and e1 == "+" and q <= 3)
                add("C1", f"O_{m}^{e1}(q) x O_{n - m}^{e2}(q)", {"kind": "N", "m": m, "eps1": e1}, h, full_img, maximal)
    # C2
    for t in _divisors_ge2(n):
        m = n // t
        if m == 1:
            if q != p or not odd_q:
                continue
            if eps != "o" and eps != _ortho_sign(n, q):
                continue
            img = 4 if q % 8 in (3, 5) else 2
            maximal = not (n == 8 and q == 3)
            add("C2", f"O_1(q) wr S_{n}", {"kind": "wreath", "m": 1, "t": n}, _f(2) ** n * factorial(n), img, maximal)
        elif m % 2 == 0:
            for e1 in "+-":
                total = "+" if (e1 == "+" or t % 2 == 0) else "-"
                if total != eps or (m == 2 and e1 == "+" and q <= 3):
                    continue
                h = order_go(m, q, e1) ** t * factorial(t)
                add("C2", f"O_{m}^{e1}(q) wr S_{t}", {"kind": "wreath", "m": m, "t": t, "eps1": e1}, h, full_img)
        elif odd_q:
            if t % 2 == 0 and eps != _ortho_sign(n, q):
                continue
            h = order_go(m, q, "o") ** t * factorial(t)
            add("C2", f"O_{m}(q) wr S_{t}", {"kind": "wreath", "m": m, "t": t}, h, 4)
    if eps != "o" and odd_q and (n // 2) % 2 == 1:
        want = "+" if q % 4 == 3 else "-"
        if eps == want:
            h = order_go(n // 2, q, "o") ** 2
            add("C2", f"O_{n // 2}(q)^2", {"kind": "wreath2", "m": n // 2, "t": 2}, h, 4)
    if eps == "+" and (n // 2) % 2 == 0:
        add("C2", f"GL_{n // 2}(q).2", {"kind": "GL"}, order_gl(n // 2, q) * 2, 2 if odd_q else 1, q >= 3)
    # C3
    if eps != "o":
        m = n // 2
        if m % 2 == 0:
            add("C3", f"O_{m}^{eps}(q^2)", {"kind": "field", "k": 2}, order_go(m, q * q, eps) * 2, 2 if odd_q else 1)
        elif odd_q:
            add("C3", f"O_{m}(q^2)", {"kind": "field", "k": 2}, order_go(m, q * q, "o") * 2, 4)
        gu_sign = "+" if m % 2 == 0 else "-"
        if eps == gu_sign:
            img = (4 if m % 2 else 2) if odd_q else (2 if m % 2 else 1)
            add("C3", f"GU_{m}(q)", {"kind": "GU"}, order_gu(m, q) * 2, img)
    for k in _primes_dividing(n):
        if k == 2 or n // k < 3:
            continue
        m = n // k
        e = eps if m % 2 == 0 else "o"
        if e == "o" and not odd_q:
            continue
        add("C3", f"O_{m}(q^{k})", {"kind": "field", "k": k}, order_go(m, q**k, e) * k, full_img)
    # C4
    if eps == "+":
        for a in range(2, n, 2):
            c = n // a
            if n % a or c % 2 or c <= a:
                continue
            h = order_sp(a, q) * order_sp(c, q)
            if odd_q:
                b.add("C4", f"Sp_{a}(q) x Sp_{c}(q)", {"kind": "tensor", "a": a, "b": c}, h.exact_div(4))
            else:
                b.add("C4", f"Sp_{a}(q) x Sp_{c}(q)", {"kind": "tensor", "a": a, "b": c}, h)
    # C5
    for k, q0 in _subfields(q):
        if k > 2:
            sub = Classical(G.family, n, q0)
            b.add("C5", f"O_{n}(q_0)", {"kind": "subfield", "k": k, "q0": q0}, order_simple(sub))
        elif eps == "o":
            b.add("C5", f"O_{n}(q_0)", {"kind": "subfield", "k": 2, "q0": q0}, order_so(n, q0, "o"))
        elif eps == "+":
            for e1 in "+-":
                order = order_go(n, q0, e1).exact_div(2) if odd_q else order_omega(n, q0, e1)
                b.add("C5", f"O_{n}^{e1}(q_0)", {"kind": "subfield", "k": 2, "q0": q0, "eps1": e1}, order)
    # C6
    if n == 8 and eps == "+" and q == p and odd_q:
        top = order_omega(6, 2, "+") if q % 8 in (3, 5) else order_go(6, 2, "+")
        b.add("C6", "2^{1+6}_+.O_6^+(2)", {"kind": "extraspecial", "r": 2, "m": 3}, _f(2) ** 6 * top, q != 3)
    # C7
    if n == 8 and eps == "+" and not odd_q:
        b.add("C7", "Sp_2(q) wr S_3 (tensor)", {"kind": "tensorwreath", "a": 2, "t": 3}, order_sp(2, q) ** 3 * 6, False)
    if n == 9 and odd_q:
        b.add("C7", "O_3(q) wr S_2 (tensor)", {"kind": "tensorwreath", "a": 3, "t": 2}, order_so(3, q, "o") ** 2)
    return b.out


# -- shared parameter helpers ---------------------------------------------------------


def _divisors_ge2(n: int) -> list[int]:
    return [t for t in range(2, n + 1) if n % t == 0]


def _tensor_pairs(n: int) -> Iterator[tuple[int, int]]:
    for a in range(2, n):
        c = n // a
        if n % a == 0 and a < c:
            yield a, c


def _tensor_powers(n: int) -> Iterator[tuple[int, int]]:
    for a in range(2, n):
        t, power = 1, a
        while power < n:
            power *= a
            t += 1
        if power == n and t >= 2:
            yield a, t


def _subfields(q: int) -> list[tuple[int, int]]:
    p, e = prime_power(q)
    return [(k, p ** (e // k)) for k in _primes_dividing(e)]


def _tensor_det_image(c: int, a: int, t: int) -> int:
    """Order of the determinant image of ``GL_a wr S_t`` (tensor) in a cyclic group of order ``c``.

    Factor determinants are raised to ``a^(t-1)``; swapping two factors is a
    permutation matrix of sign ``(-1)^((a^t - a^(t-1))/2)``.
    """
    power_img = c // gcd(c, a ** (t - 1))
    sign_odd = ((a**t - a ** (t - 1)) // 2) % 2 == 1
    if sign_odd and c % 2 == 0 and power_img % 2 == 1:
        return 2 * power_img
    return power_img


@lru_cache(maxsize=4096)
def _classical_geometric(G: Classical) -> tuple[SubgroupDescriptor, ...]:
    if G.family == "L":
        return tuple(_linear(G))
    if G.family == "U":
        return tuple(_unitary(G))
    if G.family == "S":
        return tuple(_symplectic(G))
    return tuple(_orthogonal(G))


def classical_geometric(G: Classical) -> list[SubgroupDescriptor]:
    """Geometric subgroup descriptors of the classical simple group ``G``.

    One descriptor per class type and parameter choice; classes of the same
    type (for instance the two families of maximal totally singular
    subspaces) are not repeated.  Novelties are excluded.
    """
    return list(_classical_geometric(G))


def c5_largeness_f(family: str, n: int, q0: int) -> Fraction:
    """The gcd quantity deciding largeness of the ``k = 3`` subfield subgroups.

    ``family`` is ``"L"`` or ``"U"``; the subgroup of type ``GL_n(q0)``
    (resp. ``GU_n(q0)``) in ``L_n(q0^3)`` (resp. ``U_n(q0^3)``) is large
    exactly when the returned value exceeds 1.
    """
    if family not in ("L", "U"):
        raise ValueError(f"family must be 'L' or 'U', not {family!r}")
    if n < 1 or prime_power(q0) is None:
        raise ValueError("need n >= 1 and a prime power q0")
    s = 1 if family == "L" else -1
    cube = q0**3 - s
    lin = q0 - s
    cyclo = q0 * q0 + s * q0 + 1
    n3 = int(p_part(n, 3))
    base = Fraction(gcd(n, cube), gcd(n, lin) ** 3)
    if int(p_part(cyclo, 3)) > 1 and int(p_part(lin, 3)) >= n3 > 1:
        return 27 * base
    return base
