"""Exact integer and rational primitives.

Every order in the package is carried as a :class:`FactoredNat`, a Python
integer paired with a lazily computed prime factorization.  Products of
values with known factorizations combine their exponent maps directly, so
formula-built orders such as ``|E_8(q)|`` never need a full factorization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Union

from sympy import factorint, isprime

__all__ = [
    "ExactRat",
    "FactoredNat",
    "PrimePower",
    "as_factored",
    "factorial",
    "gcd",
    "is_prime",
    "lcm",
    "p_part",
    "prime_power",
    "prime_powers",
    "primes_upto",
    "zsigmondy",
]

ExactRat = Fraction
"""Rationals are :class:`fractions.Fraction`; it is already normalized."""

IntLike = Union[int, "FactoredNat"]


@lru_cache(maxsize=65536)
def _factor_small(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(factorint(n).items()))


def _factor(n: int) -> dict[int, int]:
    if n < 2:
        return {}
    # cache only moderate inputs; huge ones are rare and one-off
    if n.bit_length() <= 256:
        return dict(_factor_small(n))
    return dict(factorint(n))


def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


class FactoredNat:
    """A positive integer with a (possibly deferred) prime factorization."""

    __slots__ = ("_value", "_factors")

    def __init__(self, value: int, factors: Optional[Mapping[int, int]] = None):
        value = int(value)
        if value < 1:
            raise ValueError(f"FactoredNat needs a positive value, got {value}")
        self._value = value
        self._factors = dict(factors) if factors is not None else None

    @classmethod
    def from_factors(cls, factors: Mapping[int, int]) -> "FactoredNat":
        value = 1
        clean = {}
        for p, e in factors.items():
            if e < 0:
                raise ValueError("negative exponent in factorization")
            if e:
                clean[p] = e
                value *= p**e
        return cls(value, clean)

    @property
    def value(self) -> int:
        return self._value

    @property
    def factors(self) -> dict[int, int]:
        if self._factors is None:
            self._factors = _factor(self._value)
        return dict(self._factors)

    def factors_known(self) -> bool:
        return self._factors is not None

    def __int__(self) -> int:
        return self._value

    def __index__(self) -> int:
        return self._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FactoredNat):
            return self._value == other._value
        if isinstance(other, int):
            return self._value == other
        return NotImplemented

    def __lt__(self, other: IntLike) -> bool:
        return self._value < int(other)

    def __le__(self, other: IntLike) -> bool:
        return self._value <= int(other)

    def __gt__(self, other: IntLike) -> bool:
        return self._value > int(other)

    def __ge__(self, other: IntLike) -> bool:
        return self._value >= int(other)

    def __mul__(self, other: IntLike) -> "FactoredNat":
        o = as_factored(other)
        if self._factors is not None and o._factors is not None:
            merged = dict(self._factors)
            for p, e in o._factors.items():
                merged[p] = merged.get(p, 0) + e
            return FactoredNat(self._value * o._value, merged)
        return FactoredNat(self._value * o._value)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "FactoredNat":
        if k < 0:
            raise ValueError("negative power of a natural number")
        if self._factors is not None:
            return FactoredNat(self._value**k, {p: e * k for p, e in self._factors.items()})
        return FactoredNat(self._value**k)

    def exact_div(self, other: IntLike) -> "FactoredNat":
        """Divide, raising ``ValueError`` unless the quotient is integral."""
        o = as_factored(other)
        q, r = divmod(self._value, o._value)
        if r:
            raise ValueError(f"{o._value} does not divide {self._value}")
        if self._factors is not None and o._factors is not None:
            rest = dict(self._factors)
            for p, e in o._factors.items():
                rest[p] = rest.get(p, 0) - e
            return FactoredNat(q, {p: e for p, e in rest.items() if e})
        return FactoredNat(q)

    __floordiv__ = exact_div

    def divides(self, other: IntLike) -> bool:
        return int(other) % self._value == 0

    def __repr__(self) -> str:
        return f"FactoredNat({self._value})"

    def __str__(self) -> str:
        return str(self._value)

    def factor_string(self) -> str:
        """Render as ``2^6 * 3^2 * 5``; ``1`` for the unit."""
        fs = self.factors
        if not fs:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(fs.items()))

    def check(self) -> bool:
        """Verify the stored factorization against the value."""
        prod = 1
        for p, e in self.factors.items():
            if e < 1 or not is_prime(p):
                return False
            prod *= p**e
        return prod == self._value


def as_factored(x: IntLike) -> FactoredNat:
    if isinstance(x, FactoredNat):
        return x
    return FactoredNat(x)


def product(items: Iterable[IntLike]) -> FactoredNat:
    out = FactoredNat(1, {})
    for x in items:
        out = out * x
    return out


@dataclass(frozen=True, order=True)
class PrimePower:
    """``q = p^a`` with ``p`` prime and ``a >= 1``."""

    q: int
    p: int
    a: int

    def __post_init__(self) -> None:
        if self.a < 1 or not is_prime(self.p) or self.p**self.a != self.q:
            raise ValueError(f"not a prime power: p={self.p}, a={self.a}, q={self.q}")

    @classmethod
    def of(cls, q: int) -> "PrimePower":
        pp = prime_power(q)
        if pp is None:
            raise ValueError(f"{q} is not a prime power")
        return cls(q, *pp)

    def __int__(self) -> int:
        return self.q


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """Return ``(p, a)`` with ``q = p^a`` or ``None``."""
    if q < 2:
        return None
    fs = _factor(q)
    if len(fs) != 1:
        return None
    ((p, a),) = fs.items()
    return p, a


def prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 2), hi + 1) if prime_power(q) is not None]


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0 or (a == 0 and b == 0):
        raise ValueError("gcd needs non-negative arguments, not both zero")
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise ValueError("lcm needs positive arguments")
    return a // math.gcd(a, b) * b


def _legendre(t: int, p: int) -> int:
    e, pk = 0, p
    while pk <= t:
        e += t // pk
        pk *= p
    return e


def factorial(t: int) -> FactoredNat:
    """``t!`` with its factorization from Legendre's formula."""
    if t < 0:
        raise ValueError("factorial of a negative number")
    return FactoredNat(math.factorial(t), {p: _legendre(t, p) for p in primes_upto(t)})


def p_part(m: IntLike, b: int) -> FactoredNat:
    """Largest power of the prime ``b`` dividing ``m``."""
    if not is_prime(b):
        raise ValueError(f"{b} is not prime")
    m = int(m)
    if m < 1:
        raise ValueError("p_part needs m >= 1")
    k = 0
    while m % b == 0:
        m //= b
        k += 1
    return FactoredNat(b**k, {b: k} if k else {})


def _divisors(n: int) -> Iterator[int]:
    for i in range(1, n + 1):
        if n % i == 0:
            yield i


def zsigmondy(c: int, d: int) -> Optional[int]:
    """Largest primitive prime divisor of ``c^d - 1``.

    A primitive prime divisor divides ``c^d - 1`` but no ``c^i - 1`` with
    ``i < d``.  One exists for every ``c >= 2``, ``d >= 3`` except
    ``(c, d) = (2, 6)``, where ``None`` is returned.
    """
    if c < 2:
        raise ValueError("zsigmondy needs c >= 2")
    if d < 3:
        raise ValueError("zsigmondy is only defined for d >= 3")
    # primitive primes divide the cyclotomic value Phi_d(c)
    phi = c**d - 1
    for e in _divisors(d):
        if e < d:
            phi = _strip_common(phi, c**e - 1)
    proper = [e for e in _divisors(d) if e < d]
    best = None
    for p in _factor(phi):
        if all(pow(c, e, p) != 1 for e in proper) and (best is None or p > best):
            best = p
    return best


def _strip_common(n: int, m: int) -> int:
    g = math.gcd(n, m)
    while g > 1:
        n //= g
        g = math.gcd(n, g)
    return n
