"""Analytic order bounds, checked in exact rational arithmetic.

Each ``check_*`` function raises AssertionError on the first violation.
"""

from fractions import Fraction
from math import gcd, prod

from largesub.orders import Classical, InvalidGroup, order_gl, order_gu, order_simple, order_so, order_sp

A_MAX = 20
N_MAX = 12


def _prod_minus(q, a):
    return prod(1 - Fraction(1, q**i) for i in range(1, a + 1))


def _prod_unitary(q, a):
    return prod(1 - Fraction(1, (-q) ** i) for i in range(1, a + 1))


def check_product_bounds(q: int) -> None:
    inv = Fraction(1, q)
    for a in range(2, A_MAX + 1):
        p = _prod_minus(q, a)
        assert 1 - inv - inv**2 < p <= (1 - inv) * (1 - inv**2)
    for a in range(3, A_MAX + 1):
        u = _prod_unitary(q, a)
        assert 1 < (1 + inv) * (1 - inv**2) < u <= (1 + inv) * (1 - inv**2) * (1 + inv**3)


def check_classical_group_orders(q: int) -> None:
    inv = Fraction(1, q)
    for a in range(2, A_MAX + 1):
        gl, gu = order_gl(a, q).value, order_gu(a, q).value
        assert (1 - inv - inv**2) * q ** (a * a) < gl <= (1 - inv) * (1 - inv**2) * q ** (a * a)
        assert (1 + inv) * (1 - inv**2) * q ** (a * a) <= gu <= (1 + inv) * (1 - inv**2) * (1 + inv**3) * q ** (a * a)
    low, high = 1 - inv**2 - inv**4, (1 - inv**2) * (1 - inv**4)
    for a in range(4, A_MAX + 1, 2):
        sp = order_sp(a, q).value
        assert low * q ** (a * (a + 1) // 2) < sp <= high * q ** (a * (a + 1) // 2)
    alpha = gcd(2, q)
    for a in range(5, A_MAX + 1):
        e = a * (a - 1) // 2
        if a % 2:
            so = Fraction(order_so(a, q, "o").value, alpha)
            assert low * q**e < so <= high * q**e
        else:
            half = Fraction(1, q ** (a // 2))
            plus = Fraction(order_so(a, q, "+").value, alpha)
            minus = Fraction(order_so(a, q, "-").value, alpha)
            assert low * (1 - half) * q**e < plus <= high * q**e
            assert low * q**e < minus <= high * (1 + half) * q**e


def _classical(fam, n, q):
    try:
        return Classical(fam, n, q)
    except InvalidGroup:
        return None


def check_simple_classical_orders(q: int) -> None:
    inv = Fraction(1, q)
    for n in range(2, N_MAX + 1):
        G = _classical("L", n, q)
        if G:
            g = order_simple(G).value
            assert q ** (n * n - 2) < g <= (1 - inv**2) * q ** (n * n - 1)
        G = _classical("U", n, q)
        if G:
            g = order_simple(G).value
            assert (1 - inv) * q ** (n * n - 2) < g <= (1 - inv**2) * (1 + inv**3) * q ** (n * n - 1) < q ** (n * n - 1)
        G = _classical("S", n, q)
        if G:
            g = order_simple(G).value
            e = n * (n + 1) // 2
            assert Fraction(1, 2 * gcd(2, q - 1)) * q**e < g < q**e
        for fam in ("O+", "O-", "O"):
            G = _classical(fam, n, q)
            if G:
                g = order_simple(G).value
                e = n * (n - 1) // 2
                assert Fraction(1, 4 * gcd(2, n)) * q**e < g < q**e
        for fam in ("L", "U", "S", "O+", "O-", "O"):
            G = _classical(fam, n, q)
            if G:
                assert order_simple(G).value > Fraction(1, 8) * q ** (n * (n - 1) // 2)


def check_factorial_bounds(t_max: int = 200) -> None:
    f = 1
    for t in range(1, t_max + 1):
        f *= t
        if t >= 5:
            assert f**3 < 5 ** (t * t - 3 * t + 1)
        if t >= 4:
            assert f**3 < 2 ** (4 * t * (t - 3))
