"""Exact orders of finite simple groups and of the classical matrix groups.

The classical formulas are written as integer products, e.g.
``|GL_a(q)| = prod_{i<a} (q^a - q^i)``, and each factor ``q^i +- 1`` is
factored on its own so that the resulting :class:`FactoredNat` carries a
known factorization without ever factoring the full product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .arith import FactoredNat, factorial, gcd, prime_power, _factor

__all__ = [
    "Alt",
    "CLASSICAL_FAMILIES",
    "EXCEPTIONAL_TYPES",
    "Classical",
    "Exceptional",
    "GroupId",
    "InvalidGroup",
    "Sporadic",
    "SPORADIC_NAMES",
    "exceptional_center",
    "order_csp",
    "order_exceptional_generic",
    "order_exceptional_subfield",
    "order_gl",
    "order_go",
    "order_gu",
    "order_simple",
    "order_sl",
    "order_so",
    "order_sp",
    "order_su",
    "omega_center",
]


class InvalidGroup(ValueError):
    """Parameters that do not name a simple group handled here."""


# -- factored building blocks -------------------------------------------------


_EAGER_BITS = 96


@lru_cache(maxsize=None)
def _fac(n: int) -> FactoredNat:
    # memoized factorization of building blocks such as q^i - 1; huge ones
    # stay lazy so that large-rank orders never trigger a hard factorization
    if n.bit_length() > _EAGER_BITS:
        return FactoredNat(n)
    return FactoredNat(n, _factor(n))


def _qpow(q: int, e: int) -> FactoredNat:
    p, a = prime_power(q)
    return FactoredNat(q**e, {p: a * e} if e else {})


def _prod(parts) -> FactoredNat:
    out = FactoredNat(1, {})
    for x in parts:
        out = out * x
    return out


def _check_q(q: int) -> None:
    if prime_power(q) is None:
        raise InvalidGroup(f"q={q} is not a prime power")


# -- classical matrix groups ----------------------------------------------------


def order_gl(a: int, q: int) -> FactoredNat:
    """``|GL_a(q)| = prod_{i=0}^{a-1} (q^a - q^i)``."""
    _check_q(q)
    if a < 0:
        raise InvalidGroup("negative dimension")
    return _qpow(q, a * (a - 1) // 2) * _prod(_fac(q**i - 1) for i in range(1, a + 1))


def order_sl(a: int, q: int) -> FactoredNat:
    if a == 0:
        return FactoredNat(1, {})
    return order_gl(a, q).exact_div(_fac(q - 1))


def order_gu(a: int, q: int) -> FactoredNat:
    """``|GU_a(q)| = q^{a(a-1)/2} prod_{i=1}^{a} (q^i - (-1)^i)``."""
    _check_q(q)
    if a < 0:
        raise InvalidGroup("negative dimension")
    return _qpow(q, a * (a - 1) // 2) * _prod(_fac(q**i - (-1) ** i) for i in range(1, a + 1))


def order_su(a: int, q: int) -> FactoredNat:
    if a == 0:
        return FactoredNat(1, {})
    return order_gu(a, q).exact_div(_fac(q + 1))


def order_sp(a: int, q: int) -> FactoredNat:
    """``|Sp_a(q)| = q^{m^2} prod_{i=1}^{m} (q^{2i} - 1)`` with ``a = 2m``."""
    _check_q(q)
    if a < 0 or a % 2:
        raise InvalidGroup(f"Sp_{a} needs even dimension")
    m = a // 2
    return _qpow(q, m * m) * _prod(_fac(q ** (2 * i) - 1) for i in range(1, m + 1))


def order_csp(a: int, q: int) -> FactoredNat:
    return order_sp(a, q) * _fac(q - 1)


def _sign(sign: str) -> str:
    if sign in ("+", "plus"):
        return "+"
    if sign in ("-", "minus"):
        return "-"
    if sign in ("o", "0", "", "circ", "∘"):
        return "o"
    raise InvalidGroup(f"unknown form sign {sign!r}")


def order_so(a: int, q: int, sign: str) -> FactoredNat:
    """Orthogonal group order with the convention ``alpha = (2, q)``.

    For odd ``q`` this is the determinant-one group; for even ``q`` the
    factor 2 makes it the full isometry group.
    """
    _check_q(q)
    sign = _sign(sign)
    alpha = _fac(gcd(2, q))
    if sign == "o":
        if a % 2 == 0:
            raise InvalidGroup("SO^o needs odd dimension")
        m = (a - 1) // 2
        return alpha * _qpow(q, m * m) * _prod(_fac(q ** (2 * i) - 1) for i in range(1, m + 1))
    if a % 2:
        raise InvalidGroup("SO^+- needs even dimension")
    m = a // 2
    if m == 0:
        return FactoredNat(1, {}) if sign == "+" else _raise("SO_0^- does not exist")
    eps = 1 if sign == "+" else -1
    return (
        alpha
        * _qpow(q, m * (m - 1))
        * _fac(q**m - eps)
        * _prod(_fac(q ** (2 * i) - 1) for i in range(1, m))
    )


def _raise(msg: str):
    raise InvalidGroup(msg)


def order_go(a: int, q: int, sign: str) -> FactoredNat:
    """Full isometry group ``GO_a^sign(q)``."""
    so = order_so(a, q, sign)
    return so * 2 if q % 2 else so


def omega_center(n: int, q: int, sign: str) -> int:
    """Order of the centre of ``Omega_n^sign(q)``."""
    if n % 2 or q % 2 == 0:
        return 1
    eps = 1 if _sign(sign) == "+" else -1
    return gcd(4, q ** (n // 2) - eps) // 2


def order_omega(n: int, q: int, sign: str) -> FactoredNat:
    """``|Omega_n^sign(q)|``, the index 2 (odd q) or index 2 (even q, n even) kernel."""
    go = order_go(n, q, sign)
    if q % 2:
        return go.exact_div(4) if n > 1 else go.exact_div(2)
    return go.exact_div(2) if n % 2 == 0 else go


# -- group identifiers ----------------------------------------------------------

CLASSICAL_FAMILIES = ("L", "U", "S", "O+", "O-", "O")
EXCEPTIONAL_TYPES = ("E8", "E7", "E6", "2E6", "F4", "G2", "2F4", "2G2", "2B2", "3D4")
SPORADIC_NAMES = (
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "Co1", "Co2", "Co3",
    "Fi22", "Fi23", "Fi24'", "HS", "McL", "He", "Ru", "Suz", "O'N", "HN", "Ly", "Th",
    "B", "M", "Tits",
)


@dataclass(frozen=True, order=True)
class Alt:
    n: int

    def __post_init__(self) -> None:
        if self.n < 5:
            raise InvalidGroup(f"A_{self.n} is not simple")

    @property
    def label(self) -> str:
        return f"A{self.n}"


@dataclass(frozen=True, order=True)
class Classical:
    """A simple classical group.

    ``family`` is one of ``L`` (linear), ``U`` (unitary), ``S``
    (symplectic, meaning ``PSp_n(q)``), ``O+``/``O-`` (``POmega_n^+-(q)``,
    ``n`` even) and ``O`` (``Omega_n(q)``, ``n`` and ``q`` odd).
    """

    family: str
    n: int
    q: int

    def __post_init__(self) -> None:
        f, n, q = self.family, self.n, self.q
        if f not in CLASSICAL_FAMILIES:
            raise InvalidGroup(f"unknown classical family {f!r}")
        _check_q(q)
        if f == "L":
            if n < 2 or (n == 2 and q < 4):
                raise InvalidGroup(f"L_{n}({q}) is excluded")
        elif f == "U":
            if n < 3 or (n, q) == (3, 2):
                raise InvalidGroup(f"U_{n}({q}) is excluded")
        elif f == "S":
            if n < 4 or n % 2 or (n, q) == (4, 2):
                raise InvalidGroup(f"PSp_{n}({q}) is excluded")
        elif f == "O":
            if n < 7 or n % 2 == 0 or q % 2 == 0:
                raise InvalidGroup(f"Omega_{n}({q}) needs n >= 7 odd and q odd")
        else:
            if n < 8 or n % 2:
                raise InvalidGroup(f"POmega^{f[1]}_{n}({q}) needs n >= 8 even")

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @property
    def sign(self) -> str:
        return {"O+": "+", "O-": "-", "O": "o"}.get(self.family, "")

    @property
    def label(self) -> str:
        f, n, q = self.family, self.n, self.q
        if f == "L":
            return f"L{n}({q})"
        if f == "U":
            return f"U{n}({q})"
        if f == "S":
            return f"PSp{n}({q})"
        if f == "O":
            return f"Omega{n}({q})"
        return f"POmega{n}{f[1]}({q})"


@dataclass(frozen=True, order=True)
class Exceptional:
    kind: str
    q: int

    def __post_init__(self) -> None:
        k, q = self.kind, self.q
        if k not in EXCEPTIONAL_TYPES:
            raise InvalidGroup(f"unknown exceptional type {k!r}")
        pp = prime_power(q)
        if pp is None:
            raise InvalidGroup(f"q={q} is not a prime power")
        p, a = pp
        if k in ("2B2", "2F4") and (p != 2 or a % 2 == 0 or q == 2):
            raise InvalidGroup(f"{k}({q}) needs q = 2^(2m+1) > 2")
        if k == "2G2" and (p != 3 or a % 2 == 0 or q == 3):
            raise InvalidGroup(f"2G2({q}) needs q = 3^(2m+1) > 3")
        if k == "G2" and q == 2:
            raise InvalidGroup("G2(2)' is U3(3); use q > 2")

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @property
    def label(self) -> str:
        return f"{self.kind}({self.q})"


@dataclass(frozen=True, order=True)
class Sporadic:
    name: str

    def __post_init__(self) -> None:
        if self.name not in SPORADIC_NAMES:
            raise InvalidGroup(f"unknown sporadic group {self.name!r}; known: {', '.join(SPORADIC_NAMES)}")

    @property
    def label(self) -> str:
        return self.name


GroupId = Union[Alt, Classical, Exceptional, Sporadic]


# -- simple group orders -----------------------------------------------------------


def _classical_order(G: Classical) -> FactoredNat:
    f, n, q = G.family, G.n, G.q
    if f == "L":
        d = gcd(n, q - 1)
        return order_sl(n, q).exact_div(d)
    if f == "U":
        d = gcd(n, q + 1)
        return order_su(n, q).exact_div(d)
    if f == "S":
        return order_sp(n, q).exact_div(gcd(2, q - 1))
    sign = G.sign
    return order_omega(n, q, sign).exact_div(omega_center(n, q, sign))


# N, degrees of the invariants, and the centre order as a function of q
_UNTWISTED = {
    "E8": (120, (2, 8, 12, 14, 18, 20, 24, 30), lambda q: 1),
    "E7": (63, (2, 6, 8, 10, 12, 14, 18), lambda q: gcd(2, q - 1)),
    "E6": (36, (2, 5, 6, 8, 9, 12), lambda q: gcd(3, q - 1)),
    "F4": (24, (2, 6, 8, 12), lambda q: 1),
    "G2": (6, (2, 6), lambda q: 1),
}


def exceptional_center(kind: str, q: int) -> int:
    """Order of the centre of the simply connected group ``kind(q)``."""
    if kind in _UNTWISTED:
        return _UNTWISTED[kind][2](q)
    if kind == "2E6":
        return gcd(3, q + 1)
    return 1


def order_exceptional_generic(kind: str, q: int) -> FactoredNat:
    """Order of the simply connected group of type ``kind`` over ``F_q``.

    No simplicity checks are made, so small cases such as ``G2(2)`` and
    ``2F4(2)`` give the full (non-simple) groups.
    """
    _check_q(q)
    if kind in _UNTWISTED:
        N, degs, _ = _UNTWISTED[kind]
        return _qpow(q, N) * _prod(_fac(q**d - 1) for d in degs)
    if kind == "2E6":
        parts = [_fac(q**2 - 1), _fac(q**5 + 1), _fac(q**6 - 1), _fac(q**8 - 1), _fac(q**9 + 1), _fac(q**12 - 1)]
        return _qpow(q, 36) * _prod(parts)
    if kind == "3D4":
        return _qpow(q, 12) * _fac(q**8 + q**4 + 1) * _fac(q**6 - 1) * _fac(q**2 - 1)
    if kind == "2F4":
        return _qpow(q, 12) * _fac(q**6 + 1) * _fac(q**4 - 1) * _fac(q**3 + 1) * _fac(q - 1)
    if kind == "2G2":
        return _qpow(q, 3) * _fac(q**3 + 1) * _fac(q - 1)
    if kind == "2B2":
        return _qpow(q, 2) * _fac(q**2 + 1) * _fac(q - 1)
    raise InvalidGroup(f"unknown exceptional type {kind!r}")


def _exceptional_order(G: Exceptional) -> FactoredNat:
    return order_exceptional_generic(G.kind, G.q).exact_div(exceptional_center(G.kind, G.q))


@lru_cache(maxsize=None)
def sporadic_orders() -> dict[str, int]:
    text = _read_data("sporadic_orders.tsv")
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, order = line.split("\t")
        out[name] = int(order)
    return out


def _read_data(name: str) -> str:
    from .data import read_text

    return read_text(name)


@lru_cache(maxsize=4096)
def order_simple(G: GroupId) -> FactoredNat:
    """Exact order of the simple group ``G``."""
    if isinstance(G, Alt):
        return factorial(G.n).exact_div(2)
    if isinstance(G, Classical):
        return _classical_order(G)
    if isinstance(G, Exceptional):
        return _exceptional_order(G)
    if isinstance(G, Sporadic):
        return FactoredNat(sporadic_orders()[G.name])
    raise TypeError(f"not a group identifier: {G!r}")


# -- subfield subgroups of exceptional groups -------------------------------------------


def _e7_f(x: int) -> FactoredNat:
    return _qpow(x, 63) * _prod(_fac(x**d - 1) for d in (2, 6, 8, 10, 12, 14, 18))


def order_exceptional_subfield(kind: str, q0: int, k: int) -> FactoredNat:
    """Order of the subfield subgroup over ``F_{q0}`` inside ``kind(q0^k)``.

    ``E7``: the subgroup has order ``f(q0)`` for even ``q`` and ``f(q0)/2``
    for odd ``q``, where ``f`` is the untwisted order polynomial.  ``E6``
    and ``2E6`` with ``k = 3``: the subgroup is the inner-diagonal group, of
    order ``|E6^eps(q0)| * (3, q0 - eps)``.  Other types give the simple
    group over ``q0``, or the full group ``G2(2)`` / ``2F4(2)`` when
    ``q0 = 2``.
    """
    from .arith import is_prime

    _check_q(q0)
    if not is_prime(k):
        raise InvalidGroup(f"subfield index {k} is not prime")
    if kind == "E7":
        f = _e7_f(q0)
        return f if q0 % 2 == 0 else f.exact_div(2)
    if kind in ("E6", "2E6"):
        if k == 3:
            eps = 1 if kind == "E6" else -1
            return order_simple(Exceptional(kind, q0)) * gcd(3, q0 - eps)
        if k == 2 and kind == "E6":
            raise InvalidGroup("E6(q0^2) subfield subgroups are recorded per twist")
        return order_simple(Exceptional(kind, q0))
    # G2(2) and 2F4(2) are not simple; the subgroup is the full group
    full = order_exceptional_generic(kind, q0).exact_div(exceptional_center(kind, q0))
    if kind in ("E8", "F4", "G2", "3D4"):
        return full
    if kind in ("2B2", "2G2", "2F4"):
        if k == 2:
            raise InvalidGroup(f"{kind} has no index-2 subfield subgroups")
        return full
    raise InvalidGroup(f"unsupported subfield case ({kind}, k={k})")
