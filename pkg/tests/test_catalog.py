from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from largesub.arith import prime_powers
from largesub.catalog import (
    GL,
    SubgroupDescriptor,
    a_collection_ambient,
    almost_simple_table,
    alt_subgroup_types,
    ambient_order,
    c5_largeness_f,
    catalog_for,
    classical_geometric,
    exceptional_table,
    gln_catalog,
    liebeck_bound_holds,
    s_collection,
    sporadic_maximals,
)
from largesub.classifier import classical_groups, exceptional_groups, is_large
from largesub.orders import SPORADIC_NAMES, Alt, Classical, Exceptional, InvalidGroup, Sporadic, order_simple


def _labels(descs):
    return {d.type_label for d in descs}


def _find(descs, label, **params):
    hits = [d for d in descs if d.type_label == label and all(d.param(k) == v for k, v in params.items())]
    assert hits, f"{label} {params} not catalogued"
    return hits[0]


# -- alternating ----------------------------------------------------------------


def test_alt5_intransitive_order():
    d = _find(alt_subgroup_types(5), "(S_1 x S_4) cap A_5", k=1)
    assert d.collection == "C1" and d.order == 12


@given(st.integers(5, 40))
def test_alt_intransitive_and_imprimitive_orders(n):
    descs = alt_subgroup_types(n)
    for k in range(1, (n + 1) // 2):
        if 2 * k == n:
            continue
        d = next(d for d in descs if d.collection == "C1" and d.param("k") == k)
        assert d.order == factorial(k) * factorial(n - k) // 2
    for d in descs:
        if d.collection == "C2":
            k = d.param("k")
            t = n // k
            assert k * t == n
            assert d.order == factorial(k) ** t * factorial(t) // 2


@pytest.mark.parametrize("n, label", [(24, "M_24"), (13, "L_3(3)"), (7, "L_2(7)"), (12, "M_12")])
def test_alt_primitive_entries(n, label):
    assert label in _labels(alt_subgroup_types(n))


def test_alt_rejects_small_degree():
    with pytest.raises(InvalidGroup):
        alt_subgroup_types(4)


# -- classical geometric --------------------------------------------------------


def test_l3_5_c2_wreath():
    d = _find(classical_geometric(Classical("L", 3, 5)), "GL_1(q) wr S_3", t=3)
    assert d.collection == "C2" and d.maximal and d.order == 96
    assert is_large(d.order, order_simple(Classical("L", 3, 5)))


def test_l2_7_c6_is_s4():
    descs = [d for d in classical_geometric(Classical("L", 2, 7)) if d.collection == "C6"]
    assert len(descs) == 1 and descs[0].order == 24


def test_u3_3_has_parabolic_and_no_orthogonal():
    descs = classical_geometric(Classical("U", 3, 3))
    assert any(d.collection == "C1" and d.type_label == "P_1" for d in descs)
    assert not any(d.collection == "C5" and d.type_label.startswith("O") for d in descs)


@pytest.mark.parametrize(
    "n, q0, expected",
    [(7, 2, 7), (2, 2, 1), (3, 4, 3)],
)
def test_c5_largeness_f(n, q0, expected):
    assert c5_largeness_f("L", n, q0) == expected


def test_c5_largeness_f_rejects_bad_family():
    with pytest.raises(ValueError):
        c5_largeness_f("S", 4, 2)


def _c5_cube(family, n, q0):
    try:
        G = Classical(family, n, q0**3)
    except InvalidGroup:
        return None
    descs = [d for d in classical_geometric(G) if d.collection == "C5" and d.param("k") == 3 and d.param("kind") == "subfield"]
    return G, descs


@pytest.mark.parametrize("family", ["L", "U"])
def test_c5_threshold_agrees_with_f(family):
    checked = 0
    for q0 in prime_powers(2, 16):
        for n in range(2, 31):
            found = _c5_cube(family, n, q0)
            if not found:
                continue
            G, descs = found
            g = order_simple(G)
            for d in descs:
                assert is_large(d.order, g) == (c5_largeness_f(family, n, q0) > 1), (G.label, d.type_label)
                checked += 1
    assert checked > 250


# -- S and A collections ---------------------------------------------------------


def test_sp12_2_symmetric():
    d = _find(s_collection(Classical("S", 12, 2)), "S_14")
    assert d.collection == "A" and d.order == 87178291200


def test_psp4_7_a7():
    assert "A_7" in _labels(s_collection(Classical("S", 4, 7)))


def test_l2_13_has_no_a5():
    assert "A_5" not in _labels(s_collection(Classical("L", 2, 13)))
    assert "A_5" in _labels(s_collection(Classical("L", 2, 11)))


@pytest.mark.parametrize("G, label", [(Classical("U", 5, 2), "L_2(11)"), (Classical("L", 5, 3), "M_11")])
def test_liebeck_bound_examples(G, label):
    assert liebeck_bound_holds(_find(s_collection(G), label))


def test_liebeck_bound_not_applicable_to_a_collection():
    with pytest.raises(ValueError):
        liebeck_bound_holds(_find(s_collection(Classical("S", 12, 2)), "S_14"))


def test_liebeck_bound_for_every_s_row():
    seen = 0
    for G in classical_groups(40, 128):
        for d in s_collection(G):
            if d.collection == "S":
                assert liebeck_bound_holds(d), str(d)
                seen += 1
    assert seen > 50


@pytest.mark.parametrize(
    "d, p, expected",
    [(14, 2, "Sp_12(2)"), (7, 2, "Omega_6^+(2)"), (7, 7, "Omega_5(7)"), (8, 3, "Omega_7(3)"), (9, 3, "Omega_7(3)"), (6, 5, "Omega_5(5)")],
)
def test_a_collection_ambient(d, p, expected):
    assert a_collection_ambient(d, p) == expected


# -- exceptional -------------------------------------------------------------------


def test_f4_3_contains_3d4_2():
    assert "^3D_4(2)" in _labels(exceptional_table(Exceptional("F4", 3)))


def test_g2_4_sporadic_and_subfield_rows():
    labels = _labels(exceptional_table(Exceptional("G2", 4)))
    assert {"J_2", "A_1(13)"} <= labels


def test_sz8_frobenius_row():
    d = _find(exceptional_table(Exceptional("2B2", 8)), "(q+s+1):4")
    assert d.order == 52


@pytest.mark.parametrize("G", list(exceptional_groups(9)), ids=lambda G: G.label)
def test_every_exceptional_parabolic_is_large(G):
    g = order_simple(G)
    parabolics = [d for d in exceptional_table(G) if d.collection == "Parabolic"]
    assert parabolics
    assert all(is_large(d.order, g) for d in parabolics)


# -- sporadic --------------------------------------------------------------------


def test_j1_frobenius_42():
    d = _find(sporadic_maximals("J1"), "7:6")
    assert d.order == 42
    assert not is_large(d.order, order_simple(Sporadic("J1")))


def test_m11_all_large():
    g = order_simple(Sporadic("M11"))
    assert all(is_large(d.order, g) for d in sporadic_maximals("M11"))


def test_baby_monster_row():
    d = _find(sporadic_maximals("B"), "2.^2E_6(2):2")
    assert is_large(d.order, order_simple(Sporadic("B")))


def test_unknown_sporadic_rejected():
    with pytest.raises(InvalidGroup):
        sporadic_maximals("Foo")


def test_monster_provisional_rows_flagged():
    rows = sporadic_maximals("M")
    assert any(d.param("provisional") == 1 for d in rows)


# -- GL_n(q) ----------------------------------------------------------------------


@pytest.mark.parametrize("q", [5, 11, 13])
def test_gl2_extraspecial(q):
    d = next(d for d in gln_catalog(2, q) if d.collection == "C6")
    assert d.maximal and is_large(d.order, ambient_order(GL(2, q)))


def test_gl2_3_extraspecial_contains_sl():
    # the normaliser of Q_8 in GL_2(3) contains SL_2(3), so it is not catalogued
    assert not any(d.collection == "C6" for d in gln_catalog(2, 3))


def test_gl4_5_monomial():
    d = _find(gln_catalog(4, 5), "GL_{n/t}(q) wr S_t", t=4)
    assert d.maximal


def test_gl3_11_s_entry():
    d = _find(gln_catalog(3, 11), "10 x L_2(7)")
    assert is_large(d.order, ambient_order(GL(3, 11)))


def test_gln_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gln_catalog(1, 4)
    with pytest.raises(ValueError):
        gln_catalog(3, 6)


# -- almost simple -----------------------------------------------------------------


@pytest.mark.parametrize(
    "G0, label",
    [(Classical("O-", 10, 2), "M_12"), (Classical("U", 3, 5), "L_2(7)"), (Sporadic("Suz"), "S_7")],
)
def test_almost_simple_rows(G0, label):
    assert label in _labels(almost_simple_table(G0))


def test_suz_exception_recorded_not_large():
    d = _find(almost_simple_table(Sporadic("Suz")), "S_7")
    assert d.param("G") == "Suz.2" and d.asserted_large is False


# -- Lagrange over the full grid ---------------------------------------------------


def _all_ambients():
    yield from classical_groups(12, 32)
    yield from exceptional_groups(32)
    yield from (Alt(n) for n in range(5, 41))
    yield from (Sporadic(name) for name in SPORADIC_NAMES)


def test_lagrange_every_descriptor():
    count = 0
    for G in _all_ambients():
        g = ambient_order(G).value
        for d in catalog_for(G):
            assert g % d.order.value == 0, str(d)
            assert d.order.value < g, str(d)
            count += 1
    for n in range(2, 9):
        for q in prime_powers(2, 16):
            g = ambient_order(GL(n, q)).value
            for d in gln_catalog(n, q):
                assert g % d.order.value == 0, str(d)
                count += 1
    assert count > 10000


def test_descriptor_rejects_unknown_collection():
    with pytest.raises(ValueError):
        SubgroupDescriptor("C9", Alt(5), "x", (), 1)


def test_catalog_for_rejects_gl():
    with pytest.raises(TypeError):
        catalog_for(GL(2, 3))


def test_c5_f_is_exact_rational():
    assert isinstance(c5_largeness_f("U", 3, 2), Fraction)
