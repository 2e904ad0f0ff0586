import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from largesub.arith import (
    ExactRat,
    FactoredNat,
    PrimePower,
    factorial,
    gcd,
    is_prime,
    lcm,
    p_part,
    prime_power,
    prime_powers,
    primes_upto,
    zsigmondy,
)
from oracles import brute_zsigmondy


@pytest.mark.parametrize(
    "t, expected",
    [(0, 1), (5, 120), (24, 620448401733239439360000)],
)
def test_factorial_values(t, expected):
    f = factorial(t)
    assert f == expected
    assert f.check()


def test_factorial_matches_iterated_product():
    acc = 1
    for t in range(0, 201):
        if t:
            acc *= t
        f = factorial(t)
        assert f.value == acc
        assert f.check()


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize("m, b, expected", [(48, 2, 16), (7, 3, 1), (21, 3, 3), (1, 5, 1)])
def test_p_part_values(m, b, expected):
    assert p_part(m, b) == expected


def test_p_part_rejects_composite_base():
    with pytest.raises(ValueError):
        p_part(12, 4)


@settings(max_examples=400)
@given(st.integers(min_value=1, max_value=10**6), st.sampled_from(primes_upto(100)))
def test_p_part_is_exact_power(m, b):
    part = int(p_part(m, b))
    assert m % part == 0
    assert (m // part) % b != 0


@pytest.mark.parametrize("c, d, expected", [(2, 6, None), (2, 4, 5), (2, 11, 89), (2, 3, 7), (3, 4, 5)])
def test_zsigmondy_values(c, d, expected):
    assert zsigmondy(c, d) == expected


def test_zsigmondy_rejects_small_d():
    with pytest.raises(ValueError):
        zsigmondy(2, 2)


def test_zsigmondy_against_brute_force():
    for c in range(2, 17):
        for d in range(3, 21):
            r = zsigmondy(c, d)
            if (c, d) == (2, 6):
                assert r is None
                continue
            assert r is not None
            assert (c**d - 1) % r == 0
            assert all((c**i - 1) % r for i in range(1, d))
            assert r == brute_zsigmondy(c, d)


@pytest.mark.parametrize("a, b, expected", [(4, 6, 2), (3, 4, 1), (0, 5, 5)])
def test_gcd_values(a, b, expected):
    assert gcd(a, b) == expected


def test_lcm_gu_condition_example():
    # q = 4, n = 3, q0 = 2: [q0 + 1, (q - 1)/(q - 1, n)] = [3, 1]
    assert lcm(3, (4 - 1) // gcd(4 - 1, 3)) == 3


def test_gcd_rejects_double_zero():
    with pytest.raises(ValueError):
        gcd(0, 0)


@given(st.integers(1, 10**9), st.integers(1, 10**9))
def test_gcd_lcm_product(a, b):
    assert gcd(a, b) * lcm(a, b) == a * b


@given(st.integers(1, 10**12))
def test_factored_nat_invariant(n):
    f = FactoredNat(n)
    assert f.check()
    assert math.prod(p**e for p, e in f.factors.items()) == n
    assert all(is_prime(p) and e >= 1 for p, e in f.factors.items())


@given(st.integers(1, 10**8), st.integers(1, 10**8))
def test_factored_multiplication_merges_factors(a, b):
    x = FactoredNat(a)
    x.factors  # force factorization
    y = FactoredNat(b)
    y.factors
    z = x * y
    assert z == a * b
    assert z.factors_known()
    assert z.check()
    assert z.exact_div(y) == a


def test_exact_div_rejects_remainder():
    with pytest.raises(ValueError):
        FactoredNat(10).exact_div(3)


def test_factored_rejects_zero():
    with pytest.raises(ValueError):
        FactoredNat(0)


def test_factor_string():
    assert FactoredNat(168).factor_string() == "2^3 * 3 * 7"
    assert FactoredNat(1).factor_string() == "1"


@pytest.mark.parametrize("q, pa", [(2, (2, 1)), (8, (2, 3)), (81, (3, 4)), (6, None), (1, None), (1024, (2, 10))])
def test_prime_power(q, pa):
    assert prime_power(q) == pa


def test_prime_power_type():
    pp = PrimePower.of(27)
    assert (pp.p, pp.a, int(pp)) == (3, 3, 27)
    with pytest.raises(ValueError):
        PrimePower.of(12)
    with pytest.raises(ValueError):
        PrimePower(9, 3, 1)


def test_prime_powers_upto_32():
    assert prime_powers(2, 32) == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]


fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)


@given(fractions, fractions, fractions)
def test_exact_rat_field_laws(a, b, c):
    assert ExactRat is Fraction
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    for x in (a + b, a * b, a - c):
        assert math.gcd(x.numerator, x.denominator) == 1
        assert x.denominator > 0
