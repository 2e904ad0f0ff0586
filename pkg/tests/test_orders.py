from math import gcd, prod

import pytest

from largesub.arith import prime_powers
from largesub.orders import (
    Alt,
    Classical,
    Exceptional,
    InvalidGroup,
    Sporadic,
    SPORADIC_NAMES,
    order_exceptional_generic,
    order_exceptional_subfield,
    order_gl,
    order_gu,
    order_simple,
    order_so,
    order_sp,
)
import bounds
from oracles import count_gl, count_gu3_2, count_sl2, count_sp4_2

QS = prime_powers(2, 32)


# -- brute-force oracles ------------------------------------------------------


@pytest.mark.parametrize("a, q", [(2, 2), (2, 3), (2, 4), (3, 2)])
def test_order_gl_matches_matrix_count(a, q):
    assert order_gl(a, q) == count_gl(a, q)


def test_order_sp_matches_form_count():
    assert order_sp(4, 2) == count_sp4_2() == 720


def test_order_gu_matches_form_count():
    assert order_gu(3, 2) == count_gu3_2() == 648


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13])
def test_psl2_matches_matrix_count(q):
    assert order_simple(Classical("L", 2, q)) == count_sl2(q) // gcd(2, q - 1)


def test_small_simple_orders_by_counting():
    # L_3(2) = SL_3(2) = GL_3(2); Sp_4(2)' has index 2 in Sp_4(2) and is A_6
    assert order_simple(Classical("L", 3, 2)) == count_gl(3, 2)
    assert count_sp4_2() // 2 == order_simple(Alt(6))


# -- documented values --------------------------------------------------------


@pytest.mark.parametrize(
    "a, q, expected",
    [(2, 4, 180), (1, 7, 6), (3, 2, 168)],
)
def test_order_gl_values(a, q, expected):
    assert order_gl(a, q) == expected


def test_order_so_odd():
    assert order_so(5, 3, "o") == 51840


def test_parity_violations_rejected():
    with pytest.raises(InvalidGroup):
        order_sp(3, 2)
    with pytest.raises(InvalidGroup):
        order_so(4, 3, "o")
    with pytest.raises(InvalidGroup):
        order_so(5, 3, "+")


@pytest.mark.parametrize(
    "G, expected",
    [
        (Classical("L", 2, 7), 168),
        (Classical("L", 3, 5), 372000),
        (Sporadic("M24"), 244823040),
        (Alt(5), 60),
        (Classical("L", 2, 71), 178920),
        (Classical("U", 3, 3), 6048),
        (Classical("S", 4, 3), 25920),
        (Classical("O+", 8, 2), 174182400),
        (Classical("O", 7, 3), 4585351680),
        (Exceptional("G2", 3), 4245696),
        (Exceptional("2B2", 8), 29120),
        (Exceptional("3D4", 2), 211341312),
        (Exceptional("2F4", 8), 264905352699586176614400),
        (Sporadic("Tits"), 17971200),
    ],
)
def test_order_simple_values(G, expected):
    assert order_simple(G) == expected


@pytest.mark.parametrize(
    "factory",
    [
        lambda: Classical("U", 3, 2),
        lambda: Classical("S", 4, 2),
        lambda: Classical("L", 2, 3),
        lambda: Classical("O", 7, 4),
        lambda: Classical("L", 3, 6),
        lambda: Exceptional("G2", 2),
        lambda: Exceptional("2B2", 2),
        lambda: Exceptional("2B2", 4),
        lambda: Exceptional("2G2", 3),
        lambda: Alt(4),
        lambda: Sporadic("Foo"),
    ],
)
def test_invalid_groups_rejected(factory):
    with pytest.raises(InvalidGroup):
        factory()


def test_sporadic_order_table_complete():
    assert len(SPORADIC_NAMES) == 27
    for name in SPORADIC_NAMES:
        assert order_simple(Sporadic(name)) > 1


# -- exceptional subfield subgroups -------------------------------------------


def _e7_f(x):
    return x**63 * prod(x**d - 1 for d in (2, 6, 8, 10, 12, 14, 18))


def test_e7_subfield_even_and_odd():
    assert order_exceptional_subfield("E7", 2, 3) == _e7_f(2)
    assert order_exceptional_subfield("E7", 3, 3) == _e7_f(3) // 2


def test_e6_subfield_is_inner_diagonal():
    q0 = 4  # q0 = 1 mod 3
    assert order_exceptional_subfield("E6", q0, 3) == int(order_simple(Exceptional("E6", q0))) * 3
    assert order_exceptional_subfield("2E6", 2, 3) == int(order_simple(Exceptional("2E6", 2))) * 3


def test_small_subfield_groups_are_full_groups():
    assert order_exceptional_subfield("G2", 2, 3) == 12096
    assert order_exceptional_subfield("2F4", 2, 3) == 35942400
    with pytest.raises(InvalidGroup):
        order_exceptional_subfield("E7", 2, 4)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_exceptional_containments_divide(q):
    gen = lambda k: int(order_exceptional_generic(k, q))  # noqa: E731
    assert gen("E8") % gen("E7") == 0
    assert gen("E7") % gen("E6") == 0
    assert gen("E6") % gen("F4") == 0
    assert gen("2E6") % gen("F4") == 0
    assert gen("F4") % gen("3D4") == 0
    assert gen("3D4") % gen("G2") == 0


def test_exceptional_orders_divide_generic():
    for kind in ("E6", "2E6", "E7"):
        for q in (2, 3, 4, 5, 7):
            G = Exceptional(kind, q)
            assert int(order_exceptional_generic(kind, q)) % int(order_simple(G)) == 0


# -- analytic bounds, in exact rational arithmetic ----------------------------


@pytest.mark.parametrize("q", QS)
def test_product_bounds(q):
    bounds.check_product_bounds(q)


@pytest.mark.parametrize("q", QS)
def test_classical_group_order_bounds(q):
    bounds.check_classical_group_orders(q)


@pytest.mark.parametrize("q", QS)
def test_simple_classical_order_bounds(q):
    bounds.check_simple_classical_orders(q)


def test_factorial_bounds():
    bounds.check_factorial_bounds()
