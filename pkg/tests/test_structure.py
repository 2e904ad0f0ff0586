from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from largesub.data import read_rows
from largesub.orders import SPORADIC_NAMES, Sporadic, order_simple
from largesub.structure import (
    Bracket,
    Cyclic,
    Extension,
    Named,
    PPower,
    ParseError,
    Product,
    UnknownName,
    Wreath,
    eval_order,
    order_of,
    parse,
    render,
)


def _table_strings() -> list[str]:
    out = [row[1] for row in read_rows("sporadic_maximals.tsv")[1:]]
    out += [row[1] for row in read_rows("alternating_primitive.tsv")[1:]]
    out += [row[4] for row in read_rows("s_collection.tsv")[1:] if "q" not in row[4]]
    return sorted(set(out))


TABLE_STRINGS = _table_strings()


def test_table_inventory_is_substantial():
    assert len(TABLE_STRINGS) >= 150


# -- documented parses --------------------------------------------------------


def test_parse_extraspecial_over_product():
    e = parse("5^{1+2}:4S_4")
    assert isinstance(e, Extension) and e.split
    assert e.normal == PPower(5, (1, 2))
    assert e.quotient == Product(Cyclic(4), Named("S", sub=4))
    assert eval_order(e) == 12000


def test_parse_frobenius():
    assert parse("7:6") == Extension(Cyclic(7), Cyclic(6), split=True)
    assert order_of("7:6") == 42


def test_parse_bracket():
    e = parse("[2^{30}].L_5(2)")
    assert e == Extension(Bracket(2, 30), Named("L", sub=5, arg=2))
    assert eval_order(e) == 2**30 * 9999360


@pytest.mark.parametrize(
    "text, expected",
    [
        ("2^{11}:M_24", 501397585920),
        ("2^{1+22}.Co_2", 2**23 * 42305421312000),
        ("S_3 x Fi_22.2", 6 * 2 * 64561751654400),
        ("S_3 × Fi_22.2", 6 * 2 * 64561751654400),
        ("A_5 wr S_2", 60**2 * 2),
        ("7:6 x A_7", 42 * 2520),
        ("2.^2E_6(2):2", 2 * 76532479683774853939200 * 2),
        ("(2^2 x F_4(2)):2", 4 * 3311126603366400 * 2),
        ("3^{2+4}:2A_5.D_8", 3**6 * 2 * 60 * 8),
    ],
)
def test_documented_orders(text, expected):
    assert order_of(text) == expected


def test_whitespace_tolerant():
    assert parse(" 7 : 6 ") == parse("7:6")


@pytest.mark.parametrize("text", ["", "7:", "(2^3", "2^{1+}", "x A_5", "A_5 wr"])
def test_malformed_reports_position(text):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.expected
    assert 0 <= info.value.pos <= len(text)


def test_unknown_name_lists_inventory():
    with pytest.raises(UnknownName) as info:
        order_of("Foo_3")
    assert "M_24" in str(info.value)


# -- round trip and Lagrange over every table string --------------------------


@pytest.mark.parametrize("text", TABLE_STRINGS)
def test_round_trip(text):
    tree = parse(text)
    again = parse(render(tree))
    assert again == tree
    assert render(again) == render(tree)
    assert eval_order(tree).value >= 1


def _sporadic_rows():
    return [(g, s, prov == "1") for g, s, _, prov in read_rows("sporadic_maximals.tsv")[1:]]


def test_sporadic_table_covers_every_group():
    assert {g for g, _, _ in _sporadic_rows()} == set(SPORADIC_NAMES)


@pytest.mark.parametrize("group, text, provisional", _sporadic_rows())
def test_sporadic_maximal_divides_ambient(group, text, provisional):
    g = order_simple(Sporadic(group)).value
    h = order_of(text).value
    assert g % h == 0
    if not provisional:
        assert h < g


# -- random ASTs --------------------------------------------------------------

leaves = st.one_of(
    st.builds(Cyclic, st.integers(1, 60)),
    st.builds(PPower, st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(1, 6), min_size=1, max_size=3).map(tuple)),
    st.builds(Bracket, st.sampled_from([2, 3, 5]), st.integers(1, 12)),
    st.sampled_from([Named("A", sub=5), Named("S", sub=4), Named("L", sub=2, arg=7), Named("M", sub=11)]),
)


def _extend(children):
    return st.one_of(
        st.builds(Product, children, children),
        st.builds(Extension, children, children, st.booleans()),
        st.builds(Wreath, children, st.sampled_from([Named("S", sub=2), Named("S", sub=3), Cyclic(2)])),
    )


asts = st.recursive(leaves, _extend, max_leaves=6)


@settings(max_examples=150, deadline=None)
@given(asts, asts)
def test_order_multiplicative(a, b):
    oa, ob = eval_order(a), eval_order(b)
    assert eval_order(Extension(a, b)) == oa.value * ob.value
    assert eval_order(Product(a, b)) == oa.value * ob.value


@settings(max_examples=150, deadline=None)
@given(asts)
def test_random_round_trip(tree):
    assert eval_order(parse(render(tree))) == eval_order(tree)


@given(st.integers(2, 5))
def test_wreath_order(t):
    assert order_of(f"S_3 wr S_{t}") == 6**t * factorial(t)
