"""Parser and order evaluator for ATLAS-style structure strings.

Grammar (loosest binding first)::

    expr    := product (('.' | ':') product)*
    product := wreath (('x' | '×') wreath)*
    wreath  := juxt (('wr' | '≀') juxt)*
    juxt    := atom atom*            e.g. "4S_4" is 4 × S_4
    atom    := '(' expr ')' | '[' int ('^' exp)? ']' | int ('^' exp sign?)? | name

Only orders are computed, so split and non-split extensions are not
distinguished and "2S_4" (a double cover) evaluates to 2 * 24.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .arith import FactoredNat, prime_power
from . import orders as _o

__all__ = [
    "Bracket",
    "Cyclic",
    "Extension",
    "Named",
    "PPower",
    "ParseError",
    "Product",
    "StructureExpr",
    "UnknownName",
    "Wreath",
    "eval_order",
    "known_names",
    "order_of",
    "parse",
    "render",
]


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: list[str]):
        self.text = text
        self.pos = pos
        self.expected = sorted(set(expected))
        got = text[pos] if pos < len(text) else "end of input"
        super().__init__(
            f"cannot parse {text!r} at position {pos} (found {got!r}); expected one of: {', '.join(self.expected)}"
        )


class UnknownName(ValueError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown group name {name!r}; known names: {', '.join(known_names())}")


# -- AST -------------------------------------------------------------------------


@dataclass(frozen=True)
class PPower:
    """``p^{a+b+...}``; only the total exponent affects the order."""

    p: int
    exponent: tuple[int, ...]
    decoration: str = ""

    @property
    def total(self) -> int:
        return sum(self.exponent)


@dataclass(frozen=True)
class Cyclic:
    """Cyclic group of order ``n``; ``tag`` keeps ATLAS class names like ``2_1``."""

    n: int
    tag: str = ""


@dataclass(frozen=True)
class Named:
    """A named group: ``base`` plus optional twist, subscript, sign, field and prime."""

    base: str
    twist: str = ""
    sub: Optional[int] = None
    sup: str = ""
    arg: Optional[int] = None
    prime: bool = False


@dataclass(frozen=True)
class Product:
    left: "StructureExpr"
    right: "StructureExpr"


@dataclass(frozen=True)
class Extension:
    """``N.Q`` or ``N:Q``; ``split`` is kept for rendering only."""

    normal: "StructureExpr"
    quotient: "StructureExpr"
    split: bool = False


@dataclass(frozen=True)
class Wreath:
    base: "StructureExpr"
    top: "StructureExpr"


@dataclass(frozen=True)
class Bracket:
    """``[N]``: an unspecified group of order ``base^exponent``.

    Layered shapes such as ``[2^7.3^2]`` keep the further factors in
    ``more`` as ``(base, exponent)`` pairs.
    """

    base: int
    exponent: int = 1
    more: tuple[tuple[int, int], ...] = ()

    @property
    def value(self) -> int:
        v = self.base**self.exponent
        for b, k in self.more:
            v *= b**k
        return v


StructureExpr = Union[PPower, Cyclic, Named, Product, Extension, Wreath, Bracket]


# -- lexer-free recursive descent ---------------------------------------------------

_NORMALIZE = [
    ("−", "-"),
    ("×", " x "),
    ("≀", " wr "),
    ("Ω", "Omega"),
    ("Γ", "Gamma"),
    ("{}", ""),
]

_IDENT = re.compile(r"O'N|[A-Z][A-Za-z]*")


class _Parser:
    def __init__(self, text: str):
        self.src = text
        for a, b in _NORMALIZE:
            text = text.replace(a, b)
        self.s = text
        self.i = 0

    def error(self, expected: list[str]) -> ParseError:
        return ParseError(self.s, self.i, expected)

    def ws(self) -> None:
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def at_word(self, word: str) -> bool:
        self.ws()
        if not self.s.startswith(word, self.i):
            return False
        j = self.i + len(word)
        return j >= len(self.s) or not self.s[j].isalpha()

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error([repr(ch)])
        self.i += 1

    def integer(self) -> int:
        self.ws()
        m = re.compile(r"\d+").match(self.s, self.i)
        if not m:
            raise self.error(["integer"])
        self.i = m.end()
        return int(m.group())

    def parse(self) -> StructureExpr:
        e = self.expr()
        if self.peek():
            raise self.error(["'.'", "':'", "'x'", "'wr'", "end of input"])
        return e

    def expr(self) -> StructureExpr:
        left = self.product()
        while self.peek() in (".", ":"):
            split = self.s[self.i] == ":"
            self.i += 1
            left = Extension(left, self.product(), split)
        return left

    def product(self) -> StructureExpr:
        left = self.wreath()
        while self.at_word("x"):
            self.i += 1
            left = Product(left, self.wreath())
        return left

    def wreath(self) -> StructureExpr:
        left = self.juxt()
        while self.at_word("wr"):
            self.i += 2
            left = Wreath(left, self.juxt())
        return left

    def starts_atom(self) -> bool:
        c = self.peek()
        if not c:
            return False
        if c in "([" or c.isdigit():
            return True
        if c == "^" and self.i + 2 < len(self.s) and self.s[self.i + 1] in "23" and self.s[self.i + 2].isupper():
            return True
        if c == "x" and self.at_word("x"):
            return False
        return bool(_IDENT.match(self.s, self.i))

    def juxt(self) -> StructureExpr:
        if not self.starts_atom():
            raise self.error(["'('", "'['", "integer", "group name"])
        left = self.atom()
        while self.starts_atom():
            left = Product(left, self.atom())
        return left

    def atom(self) -> StructureExpr:
        c = self.peek()
        if c == "(":
            self.i += 1
            e = self.expr()
            self.expect(")")
            return e
        if c == "[":
            self.i += 1
            factors = [self.bracket_factor()]
            while self.peek() == ".":
                self.i += 1
                factors.append(self.bracket_factor())
            self.expect("]")
            (base, exp), *more = factors
            return Bracket(base, exp, tuple(more))
        if c.isdigit():
            n = self.integer()
            if self.s.startswith("^", self.i):
                self.i += 1
                parts = self.exponent()
                deco = ""
                if self.s.startswith("_", self.i) and self.i + 1 < len(self.s) and self.s[self.i + 1] in "+-":
                    deco = self.s[self.i + 1]
                    self.i += 2
                return PPower(n, parts, deco)
            m = re.compile(r"_(\d+)").match(self.s, self.i)
            if m:
                self.i = m.end()
                return Cyclic(n, m.group(1))
            return Cyclic(n)
        return self.name()

    def bracket_factor(self) -> tuple[int, int]:
        base = self.integer()
        if self.peek() == "^":
            self.i += 1
            return base, sum(self.exponent())
        return base, 1

    def exponent(self) -> tuple[int, ...]:
        if self.s.startswith("{", self.i):
            self.i += 1
            parts = [self.integer()]
            while self.peek() == "+":
                self.i += 1
                parts.append(self.integer())
            self.expect("}")
            return tuple(parts)
        return (self.integer(),)

    def name(self) -> Named:
        start = self.i
        twist = ""
        if self.s.startswith("^", self.i):
            twist = self.s[self.i + 1]
            self.i += 2
        m = _IDENT.match(self.s, self.i)
        if not m:
            self.i = start
            raise self.error(["group name"])
        base = m.group()
        self.i = m.end()
        sub = None
        if self.s.startswith("_", self.i):
            self.i += 1
            if self.s.startswith("{", self.i):
                self.i += 1
                sub = self.integer()
                self.expect("}")
            else:
                sub = self.integer()
        elif self.i < len(self.s) and self.s[self.i].isdigit():
            sub = self.integer()
        sup = ""
        if self.s.startswith("^", self.i) and self.i + 1 < len(self.s):
            nxt = self.s[self.i + 1]
            if nxt in "+-":
                sup = nxt
                self.i += 2
            elif self.s.startswith("{+}", self.i + 1) or self.s.startswith("{-}", self.i + 1):
                sup = self.s[self.i + 2]
                self.i += 4
        elif sub is not None and self.s[self.i : self.i + 1] in ("+", "-") and self.s.startswith("(", self.i + 1):
            sup = self.s[self.i]
            self.i += 1
        arg = None
        if self.s.startswith("(", self.i):
            save = self.i
            self.i += 1
            m2 = re.compile(r"\d+").match(self.s, self.i)
            if m2 and self.s.startswith(")", m2.end()):
                arg = int(m2.group())
                self.i = m2.end() + 1
            elif m2:
                self.i = m2.end()
                raise self.error(["')'"])
            else:
                self.i = save
        prime = False
        if self.s.startswith("'", self.i):
            prime = True
            self.i += 1
        node = Named(base, twist, sub, sup, arg, prime)
        named_order(node)
        return node


@lru_cache(maxsize=4096)
def parse(text: str) -> StructureExpr:
    """Parse a structure string; raises :class:`ParseError` or :class:`UnknownName`."""
    return _Parser(text).parse()


# -- rendering ---------------------------------------------------------------------


def _prec(e: StructureExpr) -> int:
    if isinstance(e, Extension):
        return 0
    if isinstance(e, Product):
        return 1
    if isinstance(e, Wreath):
        return 2
    return 4


def render(e: StructureExpr) -> str:
    """Canonical text form; ``parse(render(e)) == e``."""
    if isinstance(e, PPower):
        exp = "+".join(map(str, e.exponent))
        s = f"{e.p}^{{{exp}}}"
        return s + (f"_{e.decoration}" if e.decoration else "")
    if isinstance(e, Cyclic):
        return f"{e.n}_{e.tag}" if e.tag else str(e.n)
    if isinstance(e, Bracket):
        parts = [(e.base, e.exponent), *e.more]
        return "[" + ".".join(f"{b}^{{{k}}}" if k != 1 else str(b) for b, k in parts) + "]"
    if isinstance(e, Named):
        s = (f"^{e.twist}" if e.twist else "") + e.base
        if e.sub is not None:
            s += f"_{{{e.sub}}}"
        if e.sup:
            s += f"^{e.sup}"
        if e.arg is not None:
            s += f"({e.arg})"
        if e.prime:
            s += "'"
        return s
    if isinstance(e, Extension):
        op = ":" if e.split else "."
        return f"{_wrap(e.normal, 0, left=True)}{op}{_wrap(e.quotient, 0, left=False)}"
    if isinstance(e, Product):
        return f"{_wrap(e.left, 1, left=True)} x {_wrap(e.right, 1, left=False)}"
    if isinstance(e, Wreath):
        return f"{_wrap(e.base, 2, left=True)} wr {_wrap(e.top, 2, left=False)}"
    raise TypeError(e)


def _wrap(e: StructureExpr, level: int, left: bool) -> str:
    s = render(e)
    p = _prec(e)
    if level == 0 and p in (1, 2):
        return f"({s})"
    # operators are left-associative: the right operand needs strictly higher precedence
    if p < level or (p == level and not left) or (isinstance(e, PPower) and e.decoration and not left):
        return f"({s})"
    return s


# -- names ------------------------------------------------------------------------------


def _psp(n: int, q: int) -> int:
    return int(_o.order_sp(n, q)) // math.gcd(2, q - 1)


def _omega_like(node: Named, kind: str) -> int:
    n, q, sgn = node.sub, node.arg, node.sup or "o"
    if n is None or q is None:
        raise UnknownName(render(node))
    if kind == "GO":
        return int(_o.order_go(n, q, sgn))
    if kind == "SO":
        return int(_o.order_so(n, q, sgn))
    omega = int(_o.order_omega(n, q, sgn))
    if kind == "Omega":
        return omega
    if kind == "POmega":
        return omega // _o.omega_center(n, q, sgn)
    raise UnknownName(render(node))


def _ppower_exp(q: int) -> int:
    pp = prime_power(q)
    if pp is None:
        raise _o.InvalidGroup(f"{q} is not a prime power")
    return pp[1]


def _psl_or_l(n: int, q: int) -> int:
    return int(_o.order_sl(n, q)) // math.gcd(n, q - 1)


def _psu(n: int, q: int) -> int:
    return int(_o.order_su(n, q)) // math.gcd(n, q + 1)


def _exc(kind: str, q: int) -> int:
    return int(_o.order_simple(_o.Exceptional(kind, q)))


_SPORADIC_ALIAS = {
    "M": {None: "M", 11: "M11", 12: "M12", 22: "M22", 23: "M23", 24: "M24"},
    "J": {1: "J1", 2: "J2", 3: "J3", 4: "J4"},
    "Co": {1: "Co1", 2: "Co2", 3: "Co3"},
    "Fi": {22: "Fi22", 23: "Fi23"},
    "HS": {None: "HS"},
    "McL": {None: "McL"},
    "He": {None: "He"},
    "Ru": {None: "Ru"},
    "Suz": {None: "Suz"},
    "O'N": {None: "O'N"},
    "HN": {None: "HN"},
    "Ly": {None: "Ly"},
    "Th": {None: "Th"},
    "B": {None: "B"},
}


# point stabilizers in the Mathieu chain that are not themselves sporadic
_SMALL_MATHIEU = {9: 72, 10: 720, 21: 20160}


def _need(node: Named, sub: bool = True, arg: bool = True) -> None:
    if (sub and node.sub is None) or (arg and node.arg is None):
        raise UnknownName(render(node))


def named_order(node: Named) -> int:
    """Order of a named group, or :class:`UnknownName`."""
    b, t, n, q = node.base, node.twist, node.sub, node.arg
    try:
        if t:
            key = f"{t}{b}{n if n is not None else ''}"
            if key == "2F4" and q == 2 and node.prime:
                return _o.sporadic_orders()["Tits"]
            table = {"2E6": "2E6", "3D4": "3D4", "2F4": "2F4", "2B2": "2B2", "2G2": "2G2"}
            if key in table and q is not None:
                if key == "2F4" and q == 2:
                    return 2 * _o.sporadic_orders()["Tits"]
                return _exc(table[key], q)
            raise UnknownName(render(node))
        if b == "Fi" and n == 24:
            spor = _o.sporadic_orders()["Fi24'"]
            return spor if node.prime else 2 * spor
        if b == "M" and n in _SMALL_MATHIEU and q is None:
            return _SMALL_MATHIEU[n]
        if b in _SPORADIC_ALIAS and q is None:
            alias = _SPORADIC_ALIAS[b].get(n)
            if alias is None:
                raise UnknownName(render(node))
            return _o.sporadic_orders()[alias]
        if q is None:
            if n is None:
                raise UnknownName(render(node))
            if b == "A":
                return math.factorial(n) // 2 if n >= 2 else 1
            if b == "S":
                return math.factorial(n)
            if b == "D":
                return n
            if b in ("Q", "SD"):
                return n
            raise UnknownName(render(node))
        if b == "Sz" and n is None:
            return _exc("2B2", q)
        if b == "R" and n is None:
            return _exc("2G2", q)
        _need(node)
        if b in ("L", "PSL"):
            return _psl_or_l(n, q)
        if b == "SL":
            return int(_o.order_sl(n, q))
        if b == "GL":
            return int(_o.order_gl(n, q))
        if b == "PGL":
            return int(_o.order_gl(n, q)) // (q - 1)
        if b == "PGammaL":
            return int(_o.order_gl(n, q)) // (q - 1) * _ppower_exp(q)
        if b == "PSigmaL":
            return _psl_or_l(n, q) * _ppower_exp(q)
        if b == "AGL":
            return q**n * int(_o.order_gl(n, q))
        if b == "ASL":
            return q**n * int(_o.order_sl(n, q))
        if b == "AGammaL":
            return q**n * int(_o.order_gl(n, q)) * _ppower_exp(q)
        if b in ("U", "PSU"):
            return _psu(n, q)
        if b == "SU":
            return int(_o.order_su(n, q))
        if b == "GU":
            return int(_o.order_gu(n, q))
        if b == "PGU":
            return int(_o.order_gu(n, q)) // (q + 1)
        if b in ("S", "PSp"):
            return _psp(n, q)
        if b == "Sp":
            return int(_o.order_sp(n, q))
        if b == "O":
            # ATLAS convention: the simple group
            if node.sup in ("+", "-"):
                return _omega_like(node, "POmega")
            return _omega_like(node, "Omega")
        if b == "Omega":
            return _omega_like(node, "Omega")
        if b == "POmega":
            return _omega_like(node, "POmega")
        if b == "SO":
            return _omega_like(node, "SO")
        if b == "GO":
            return _omega_like(node, "GO")
        if b in ("G", "F", "E") and n in (2, 4, 6, 7, 8):
            kind = f"{b}{n}"
            if kind in ("G2", "F4", "E6", "E7", "E8"):
                if kind == "G2" and q == 2:
                    return 12096
                return _exc(kind, q)
    except _o.InvalidGroup as exc:
        raise UnknownName(f"{render(node)} ({exc})") from None
    raise UnknownName(render(node))


def known_names() -> list[str]:
    return [
        "A_n", "S_n", "D_n (order n)", "Q_n (order n)", "SD_n (order n)", "M_9", "M_10", "M_21",
        "L_n(q)", "PSL_n(q)", "SL_n(q)", "GL_n(q)", "PGL_n(q)", "PGammaL_n(q)", "PSigmaL_n(q)",
        "AGL_n(q)", "ASL_n(q)", "AGammaL_n(q)",
        "U_n(q)", "SU_n(q)", "GU_n(q)", "PGU_n(q)", "S_n(q)", "PSp_n(q)", "Sp_n(q)",
        "O_n^e(q)", "Omega_n^e(q)", "POmega_n^e(q)", "SO_n^e(q)", "GO_n^e(q)",
        "G_2(q)", "F_4(q)", "E_6(q)", "E_7(q)", "E_8(q)", "^2E_6(q)", "^3D_4(q)", "^2F_4(q)",
        "^2F_4(2)'", "^2B_2(q)", "Sz(q)", "^2G_2(q)", "R(q)",
        "M_11", "M_12", "M_22", "M_23", "M_24", "J_1", "J_2", "J_3", "J_4", "Co_1", "Co_2", "Co_3",
        "Fi_22", "Fi_23", "Fi_24'", "Fi_24", "HS", "McL", "He", "Ru", "Suz", "O'N", "HN", "Ly", "Th", "B", "M",
    ]


# -- evaluation ---------------------------------------------------------------------------


def _degree(top: StructureExpr) -> int:
    if isinstance(top, Named) and top.base in ("S", "A") and top.arg is None and top.sub is not None:
        return top.sub
    if isinstance(top, Cyclic):
        return top.n
    raise ValueError(f"wreath top must be S_t, A_t or a cyclic group, got {render(top)}")


def eval_order(e: StructureExpr) -> FactoredNat:
    """Exact order of the group described by ``e``."""
    if isinstance(e, PPower):
        return FactoredNat(e.p) ** e.total
    if isinstance(e, Cyclic):
        return FactoredNat(e.n)
    if isinstance(e, Bracket):
        return FactoredNat(e.value)
    if isinstance(e, Named):
        return FactoredNat(named_order(e))
    if isinstance(e, (Product,)):
        return eval_order(e.left) * eval_order(e.right)
    if isinstance(e, Extension):
        return eval_order(e.normal) * eval_order(e.quotient)
    if isinstance(e, Wreath):
        return eval_order(e.base) ** _degree(e.top) * eval_order(e.top)
    raise TypeError(e)


def order_of(text: str) -> FactoredNat:
    """``eval_order(parse(text))``."""
    return eval_order(parse(text))
