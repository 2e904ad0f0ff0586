from dataclasses import replace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from largesub.arith import FactoredNat
from largesub.catalog import alt_subgroup_types, classical_geometric, exceptional_table
from largesub.classifier import (
    SCOPES,
    ALT_PRIMITIVE_LARGE_PAIRS,
    VerificationReport,
    classify_almost_simple,
    classify_large,
    every_maximal_large,
    expected_sporadic_nonlarge,
    is_large,
    report_for,
    triple_factorisation_necessary,
    verify_table,
)
from largesub.orders import Alt, Classical, Exceptional, Sporadic, order_simple


def _report(G, label):
    hits = [r for r in classify_large(G) if r.descriptor.type_label == label]
    assert hits, f"{label} missing from {G.label}"
    return hits[0]


# -- the predicate ----------------------------------------------------------------


@pytest.mark.parametrize(
    "h, g, expected",
    [(60, 178920, True), (168, 244823040, False), (7, 7, True), (1, 1, True), (2, 9, False)],
)
def test_is_large_values(h, g, expected):
    assert is_large(h, g) is expected


def test_is_large_accepts_factored():
    assert is_large(FactoredNat(60), order_simple(Classical("L", 2, 71)))


def test_is_large_rejects_bad_orders():
    with pytest.raises(ValueError):
        is_large(10, 9)
    with pytest.raises(ValueError):
        is_large(0, 9)


@given(st.integers(1, 10**6))
def test_is_large_boundary(h):
    assert is_large(h, h**3)
    assert not is_large(h, h**3 + 1)


@given(st.integers(1, 10**4), st.integers(0, 10**4), st.integers(1, 10**12))
def test_is_large_monotone(h, extra, g):
    h2 = h + extra
    if h2 <= g and is_large(h, g):
        assert is_large(h2, g)


@pytest.mark.parametrize("a, b, g, expected", [(60, 60, 60, True), (12, 10, 2000, False)])
def test_triple_factorisation(a, b, g, expected):
    assert triple_factorisation_necessary(a, b, g) is expected


def test_triple_factorisation_parabolics_of_l3_5():
    G = Classical("L", 3, 5)
    p1 = next(d for d in classical_geometric(G) if d.type_label == "P_1")
    assert p1.order == 5**2 * 4 * 120
    assert triple_factorisation_necessary(p1.order, p1.order, order_simple(G))


# -- classification examples -------------------------------------------------------


def test_g2_11_j1_large():
    r = _report(Exceptional("G2", 11), "J_1")
    assert r.is_large and r.descriptor.maximal


def test_th_exception():
    r = _report(Sporadic("Th"), "3^5:2S_6")
    assert not r.is_large and r.margin == -1


def test_l2_5_a4_large():
    r = _report(Classical("L", 2, 5), "2^{1+2}_-.O_2^-(2)")
    assert r.descriptor.order == 12 and r.is_large


def test_ly_nonlarge_pair():
    G = Sporadic("Ly")
    small = {r.descriptor.type_label for r in classify_large(G) if not r.is_large}
    assert small == expected_sporadic_nonlarge("Ly") == {"67:22", "37:18"}


def test_report_margin_sign():
    G = Classical("L", 2, 7)
    for r in classify_large(G):
        h, g = int(r.descriptor.order), int(order_simple(G))
        assert r.margin == (h**3 > g) - (h**3 < g)
        assert r.is_large == (r.margin >= 0)


def test_c5_reason_reports_f():
    reports = [r for r in classify_large(Classical("L", 7, 8)) if r.descriptor.collection == "C5"]
    assert reports
    assert any("f = 7 > 1" in r.reasons for r in reports)


def test_s_collection_reason_reports_bound():
    r = _report(Classical("L", 5, 3), "M_11")
    assert "|H| < q^15" in r.reasons


def test_table_rows_record_decision():
    for kind, q in [("E6", 2), ("E7", 3), ("E8", 2), ("F4", 3)]:
        for r in classify_large(Exceptional(kind, q)):
            assert r.decided_by in ("Order", "TableAssertion")
            if r.decided_by == "TableAssertion":
                assert not r.descriptor.order_exact


def test_disagreement_is_surfaced():
    d = next(d for d in exceptional_table(Exceptional("2B2", 8)) if d.type_label == "(q-s+1):4")
    flipped = replace(d, asserted_large=True)
    r = report_for(flipped)
    assert not r.is_large
    assert any(x.startswith("DISAGREEMENT") for x in r.reasons)


def test_almost_simple_measured_in_extension():
    reports = classify_almost_simple(Sporadic("Suz"))
    r = next(r for r in reports if r.descriptor.type_label == "S_7")
    assert not r.is_large


@given(st.integers(5, 40))
def test_intransitive_and_imprimitive_always_large(n):
    g = order_simple(Alt(n))
    for d in alt_subgroup_types(n):
        if d.collection in ("C1", "C2"):
            assert is_large(d.order, g)


def test_alt_primitive_pairs_count():
    assert len(ALT_PRIMITIVE_LARGE_PAIRS) == 13


# -- every maximal subgroup large ---------------------------------------------------


@pytest.mark.parametrize(
    "G, expected",
    [
        (Sporadic("M22"), True),
        (Sporadic("M11"), True),
        (Sporadic("J1"), False),
        (Exceptional("G2", 3), True),
        (Exceptional("G2", 4), True),
        (Exceptional("G2", 5), False),
        (Alt(5), True),
    ],
)
def test_every_maximal_large(G, expected):
    assert every_maximal_large(G) is expected


@pytest.mark.parametrize("G", [Classical("L", 3, 5), Alt(30), Exceptional("E8", 2)])
def test_every_maximal_large_rejects_incomplete_lists(G):
    with pytest.raises(ValueError):
        every_maximal_large(G)


def test_every_maximal_large_monster_is_decided():
    # some known Monster maximal is already not large, so provisional rows do not matter
    assert every_maximal_large(Sporadic("M")) is False


# -- verification driver -------------------------------------------------------------


def test_verification_report_diffs():
    r = VerificationReport(Alt(5), ["a", "b"], ["b", "c"])
    assert r.missing == ["a"] and r.extra == ["c"] and not r.ok
    assert set(r.missing).isdisjoint(set(r.expected) & set(r.computed))
    assert r.to_json()["ambient"] == "A5"


def test_verify_unknown_scope():
    with pytest.raises(ValueError):
        verify_table("theorem9")


@pytest.mark.parametrize("scope", ["theorem1", "theorem2", "theorem4", "theorem5", "A1"])
def test_scopes_without_diffs(scope):
    reports = verify_table(scope)
    assert reports
    assert [r.ambient.label for r in reports if not r.ok] == []


def test_scope_registry():
    assert set(SCOPES) == {"theorem1", "theorem2", "theorem3", "theorem4", "theorem5", "A1"}


def test_classical_small_grid_clean():
    reports = verify_table("theorem3", {"n_max": 6, "q_max": 9, "c5_n_max": 6})
    assert [r.ambient.label for r in reports if not r.ok] == []
