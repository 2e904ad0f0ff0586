"""Dimensions of simple algebraic groups and of their maximal closed subgroups.

A proper closed subgroup ``H`` of an algebraic group ``G`` is large when
``3 dim H >= dim G``.  Positive roots are generated from the Dynkin
diagram, so parabolic dimensions are computed rather than copied; the
tabulated exceptional values are kept only to be checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Optional

__all__ = [
    "AlgSubgroupDescriptor",
    "EXCEPTIONAL_PARABOLIC_DIMS",
    "RootDatum",
    "classical_geometric_algebraic",
    "dim_classical",
    "dim_group",
    "dim_parabolic",
    "exceptional_large_subgroups",
    "expected_large_classical",
    "is_large_algebraic",
    "positive_roots",
    "triple_dim_necessary",
    "verify_algebraic_tables",
]

_EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}

# dim P_i for i = 1, ..., rank in Bourbaki numbering
EXCEPTIONAL_PARABOLIC_DIMS: dict[str, tuple[int, ...]] = {
    "E8": (170, 156, 150, 142, 144, 151, 165, 191),
    "E7": (100, 91, 86, 80, 83, 91, 106),
    "E6": (62, 57, 53, 49, 53, 62),
    "F4": (37, 32, 32, 37),
    "G2": (9, 9),
}


@dataclass(frozen=True, order=True)
class RootDatum:
    """A simple root system: ``lie_type`` is A, B, C, D or an exceptional name."""

    lie_type: str
    rank: int = 0

    def __post_init__(self) -> None:
        t, r = self.lie_type, self.rank
        if t in _EXCEPTIONAL_RANK:
            if r not in (0, _EXCEPTIONAL_RANK[t]):
                raise ValueError(f"{t} has rank {_EXCEPTIONAL_RANK[t]}")
            object.__setattr__(self, "rank", _EXCEPTIONAL_RANK[t])
        elif t in ("A", "B", "C", "D"):
            least = {"A": 1, "B": 2, "C": 2, "D": 3}[t]
            if r < least:
                raise ValueError(f"type {t} needs rank >= {least}")
        else:
            raise ValueError(f"unknown Lie type {t!r}")

    @property
    def label(self) -> str:
        return self.lie_type if self.lie_type in _EXCEPTIONAL_RANK else f"{self.lie_type}{self.rank}"

    @property
    def positive_root_count(self) -> int:
        t, r = self.lie_type, self.rank
        if t == "A":
            return r * (r + 1) // 2
        if t in ("B", "C"):
            return r * r
        if t == "D":
            return r * (r - 1)
        return {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}[t]

    @property
    def dimension(self) -> int:
        return 2 * self.positive_root_count + self.rank


def dim_group(d: RootDatum) -> int:
    """``2N + r``: twice the number of positive roots plus the rank."""
    return d.dimension


def dim_classical(kind: str, n: int) -> int:
    """Dimension of ``SL_n``, ``Sp_n`` or ``SO_n``."""
    if kind == "SL":
        return n * n - 1
    if kind == "Sp":
        return n * (n + 1) // 2
    if kind == "SO":
        return n * (n - 1) // 2
    raise ValueError(f"unknown classical kind {kind!r}")


# -- root systems --------------------------------------------------------------


def _diagram(d: RootDatum) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared root lengths and edges (0-based) in Bourbaki numbering."""
    t, r = d.lie_type, d.rank
    chain = [(i, i + 1) for i in range(r - 1)]
    if t == "A":
        return [Fraction(2)] * r, chain
    if t == "B":
        return [Fraction(2)] * (r - 1) + [Fraction(1)], chain
    if t == "C":
        return [Fraction(1)] * (r - 1) + [Fraction(2)], chain
    if t == "D":
        return [Fraction(2)] * r, [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)]
    if t == "G2":
        return [Fraction(1), Fraction(3)], [(0, 1)]
    if t == "F4":
        return [Fraction(2), Fraction(2), Fraction(1), Fraction(1)], [(0, 1), (1, 2), (2, 3)]
    # E_n: 1-3-4-5-...-n with 2 attached to 4
    edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, r - 1)]
    return [Fraction(2)] * r, edges


@lru_cache(maxsize=None)
def _cartan(d: RootDatum) -> tuple[tuple[int, ...], ...]:
    """``A[i][j] = 2 (a_i, a_j) / (a_j, a_j)``."""
    lengths, edges = _diagram(d)
    r = d.rank
    inner = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        inner[i][i] = lengths[i]
    for i, j in edges:
        inner[i][j] = inner[j][i] = -max(lengths[i], lengths[j]) / 2
    return tuple(tuple(int(2 * inner[i][j] / inner[j][j]) for j in range(r)) for i in range(r))


@lru_cache(maxsize=None)
def positive_roots(d: RootDatum) -> frozenset[tuple[int, ...]]:
    """Positive roots as coefficient vectors over the simple roots.

    Built by root strings: for a positive root ``b`` and simple root
    ``a_i`` with ``b - p a_i`` the bottom of the string, ``b + a_i`` is a
    root iff ``p - <b, a_i^vee> > 0``.
    """
    A, r = _cartan(d), d.rank
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for b in layer:
            for i in range(r):
                pair = sum(b[j] * A[j][i] for j in range(r))
                p, down = 0, list(b)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    up = list(b)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    if len(roots) != d.positive_root_count:
        raise ArithmeticError(f"{d.label}: generated {len(roots)} positive roots")
    return frozenset(roots)


def dim_parabolic(G: RootDatum, i: int) -> int:
    """Dimension of the maximal parabolic ``P_i`` (delete node ``i``).

    ``dim G`` minus the number of positive roots with a nonzero
    coefficient at ``a_i``, which is the dimension of the unipotent
    radical of the opposite parabolic.
    """
    if not 1 <= i <= G.rank:
        raise ValueError(f"node {i} out of range 1..{G.rank}")
    radical = sum(1 for b in positive_roots(G) if b[i - 1])
    return G.dimension - radical


# -- largeness -----------------------------------------------------------------


def is_large_algebraic(h_dim: int, g_dim: int) -> bool:
    """``3 dim H >= dim G`` for a proper closed subgroup ``H``."""
    if h_dim < 0 or h_dim >= g_dim:
        raise ValueError("need 0 <= dim H < dim G")
    return 3 * h_dim >= g_dim


def triple_dim_necessary(a_dim: int, b_dim: int, g_dim: int) -> bool:
    """``dim G <= 2 dim A + dim B``, necessary for ``G = ABA``."""
    return g_dim <= 2 * a_dim + b_dim


# -- subgroup descriptors ------------------------------------------------------


@dataclass(frozen=True)
class AlgSubgroupDescriptor:
    """A maximal closed subgroup type.

    ``ambient`` is a :class:`RootDatum` for exceptional groups or a pair
    ``(kind, n)`` for ``SL_n``, ``Sp_n``, ``SO_n``.  ``p_condition``
    restricts the characteristic; the finite part never adds dimension.
    """

    ambient: object
    kind: str
    label: str
    dimension: int
    p_condition: Optional[Callable[[int], bool]] = field(default=None, compare=False)
    components: tuple[RootDatum, ...] = ()
    torus_rank: int = 0
    finite_part: str = ""

    def allowed(self, p: int) -> bool:
        return self.p_condition is None or bool(self.p_condition(p))

    @property
    def ambient_dim(self) -> int:
        if isinstance(self.ambient, RootDatum):
            return self.ambient.dimension
        kind, n = self.ambient
        return dim_classical(kind, n)

    @property
    def ambient_label(self) -> str:
        if isinstance(self.ambient, RootDatum):
            return self.ambient.label
        kind, n = self.ambient
        return f"{kind}_{n}"

    def is_large(self) -> bool:
        return is_large_algebraic(self.dimension, self.ambient_dim)


def _reductive(G: RootDatum, parts: str, torus: int = 0, finite: str = "",
               p_condition: Optional[Callable[[int], bool]] = None) -> AlgSubgroupDescriptor:
    comps = []
    for token in parts.split():
        if token[0] in "ABCD":
            comps.append(RootDatum(token[0], int(token[1:])))
        else:
            comps.append(RootDatum(token))
    label = ("T%d" % torus if torus else "") + "".join(c.label for c in comps) + (f".{finite}" if finite else "")
    dim = sum(c.dimension for c in comps) + torus
    return AlgSubgroupDescriptor(G, "Reductive", label, dim, p_condition, tuple(comps), torus, finite)


def _p_odd(p: int) -> bool:
    return p != 2


def _p_two(p: int) -> bool:
    return p == 2


def exceptional_large_subgroups() -> list[AlgSubgroupDescriptor]:
    """Large non-parabolic maximal subgroups of the exceptional algebraic groups."""
    E8, E7, E6, F4, G2 = (RootDatum(t) for t in ("E8", "E7", "E6", "F4", "G2"))
    return [
        _reductive(E8, "D8"),
        _reductive(E8, "A1 E7"),
        _reductive(E8, "A2 E6", finite="2"),
        _reductive(E7, "E6", torus=1, finite="2"),
        _reductive(E7, "A1 D6"),
        _reductive(E7, "A7", finite="2"),
        _reductive(E7, "A1 F4"),
        _reductive(E6, "A1 A5"),
        _reductive(E6, "D4", torus=2, finite="S_3"),
        _reductive(E6, "F4"),
        _reductive(E6, "C4", p_condition=_p_odd),
        _reductive(F4, "B4"),
        _reductive(F4, "D4", finite="S_3"),
        _reductive(F4, "C4", p_condition=_p_two),
        _reductive(F4, "A1 C3", p_condition=_p_odd),
        _reductive(G2, "A2", finite="2"),
        _reductive(G2, "A1 A1"),
    ]


def _classical_root(kind: str, n: int) -> RootDatum:
    if kind == "SL":
        return RootDatum("A", n - 1)
    if kind == "Sp":
        return RootDatum("C", n // 2)
    return RootDatum("B", n // 2) if n % 2 else RootDatum("D", n // 2)


def _divisor_pairs(n: int) -> Iterator[tuple[int, int]]:
    for a in range(2, n):
        if n % a == 0 and a <= n // a:
            yield a, n // a


def _powers(n: int) -> Iterator[tuple[int, int]]:
    for a in range(2, n):
        t, m = 1, a
        while m < n:
            m *= a
            t += 1
        if m == n and t >= 2:
            yield a, t


def classical_geometric_algebraic(kind: str, n: int) -> list[AlgSubgroupDescriptor]:
    """Positive-dimensional geometric maximal subgroup types of ``SL_n``, ``Sp_n`` or ``SO_n``."""
    G = (kind, n)
    out: list[AlgSubgroupDescriptor] = []

    def add(col: str, label: str, dim: int, cond: Optional[Callable[[int], bool]] = None) -> None:
        if dim > 0:
            out.append(AlgSubgroupDescriptor(G, col, label, dim, cond))

    R = _classical_root(kind, n)
    if kind == "SL":
        for k in range(1, n):
            add("C1", f"P_{k}", n * n - 1 - k * (n - k))
        for t in range(2, n + 1):
            if n % t == 0:
                add("C2", f"GL_{n // t} wr S_{t}", n * n // t - 1)
        for a, b in _divisor_pairs(n):
            if a < b:
                add("C4", f"SL_{a} tensor SL_{b}", a * a + b * b - 2)
        for a, t in _powers(n):
            if (a, t) != (2, 2):
                add("C4", f"tensor SL_{a}^{t}", (a * a - 1) * t)
        if n >= 4 and n % 2 == 0:
            add("C6", f"Sp_{n}", dim_classical("Sp", n))
        add("C6", f"SO_{n}", dim_classical("SO", n), _p_odd)
        return out
    for i in range(1, R.rank + 1):
        add("C1", f"P_{i}", dim_parabolic(R, i))
    if kind == "Sp":
        for k in range(2, n // 2 + 1, 2):
            add("C1", f"Sp_{k} x Sp_{n - k}", dim_classical("Sp", k) + dim_classical("Sp", n - k))
        for t in range(2, n // 2 + 1):
            if n % t == 0 and (n // t) % 2 == 0:
                add("C2", f"Sp_{n // t} wr S_{t}", t * dim_classical("Sp", n // t))
        add("C3", f"GL_{n // 2}", n * n // 4, _p_odd)
        for a in range(2, n, 2):
            b = n // a
            if n % a == 0 and b >= 3:
                add("C4", f"Sp_{a} tensor SO_{b}", dim_classical("Sp", a) + dim_classical("SO", b), _p_odd)
        for a, t in _powers(n):
            if a % 2 == 0 and t % 2 == 1:
                add("C4", f"tensor Sp_{a}^{t}", dim_classical("Sp", a) * t, _p_odd)
        add("C6", f"O_{n}", dim_classical("SO", n), _p_two)
        return out
    for k in range(1, n // 2 + 1):
        add("C1", f"O_{k} x O_{n - k}", dim_classical("SO", k) + dim_classical("SO", n - k))
    for t in range(2, n + 1):
        if n % t == 0:
            add("C2", f"O_{n // t} wr S_{t}", t * dim_classical("SO", n // t))
    if n % 2 == 0:
        add("C3", f"GL_{n // 2}", n * n // 4)
    for a, b in _divisor_pairs(n):
        if a % 2 == 0 and b % 2 == 0:
            add("C4", f"Sp_{a} tensor Sp_{b}", dim_classical("Sp", a) + dim_classical("Sp", b))
        if a >= 3 and a < b:
            add("C4", f"SO_{a} tensor SO_{b}", dim_classical("SO", a) + dim_classical("SO", b), _p_odd)
    for a, t in _powers(n):
        if a % 2 == 0 and t % 2 == 0:
            add("C4", f"tensor Sp_{a}^{t}", dim_classical("Sp", a) * t)
        if a >= 3:
            add("C4", f"tensor SO_{a}^{t}", dim_classical("SO", a) * t, _p_odd)
    return out


def classical_s_rows() -> list[AlgSubgroupDescriptor]:
    """Large irreducible almost simple subgroups of classical algebraic groups."""
    g2 = RootDatum("G2").dimension
    b3 = RootDatum("B", 3).dimension
    return [
        AlgSubgroupDescriptor(("Sp", 6), "S", "G_2", g2, _p_two),
        AlgSubgroupDescriptor(("SO", 7), "S", "G_2", g2, _p_odd),
        AlgSubgroupDescriptor(("SO", 8), "S", "B_3", b3),
        AlgSubgroupDescriptor(("SO", 8), "S", "C_3", b3, _p_two),
    ]


def expected_large_classical(desc: AlgSubgroupDescriptor) -> bool:
    """Whether a geometric subgroup appears among the large ones.

    Reducible subgroups are always large; the irreducible ones are those
    listed for ``SL_n``, ``Sp_n`` and ``SO_n``.
    """
    kind, n = desc.ambient
    if desc.kind == "C1":
        return True
    lab = desc.label
    if kind == "SL":
        return lab in (f"GL_{n // 2} wr S_2", f"Sp_{n}", f"SO_{n}")
    if kind == "Sp":
        for t in (2, 3):
            if lab == f"Sp_{n // t} wr S_{t}" and n % t == 0:
                return True
        if n == 8 and lab == "Sp_2 wr S_4":
            return True
        return lab in (f"GL_{n // 2}", f"O_{n}")
    if lab in (f"O_{n // 2} wr S_2", f"GL_{n // 2}"):
        return n % 2 == 0
    return (n, lab) in ((8, "Sp_2 tensor Sp_4"), (12, "Sp_2 tensor Sp_6"))


# -- verification --------------------------------------------------------------


def verify_algebraic_tables(n_max: int = 40, characteristics: tuple[int, ...] = (0, 2, 3)):
    """Check the algebraic-group classification.

    (a) listed large subgroups satisfy ``3 dim H >= dim G``; (b) every
    maximal parabolic of an exceptional group is large and its dimension
    matches the tabulated value; (c) for ``SL_n``, ``Sp_n``, ``SO_n`` with
    ``n <= n_max`` the large geometric subgroups are exactly the expected
    ones, in each characteristic; (d) irreducible almost simple rows obey
    ``dim H <= 3n``.
    """
    from .classifier import VerificationReport

    expected: list[str] = []
    computed: list[str] = []
    notes: list[str] = []
    for row in exceptional_large_subgroups():
        label = f"(a) {row.ambient_label} > {row.label}"
        expected.append(label)
        if row.is_large():
            computed.append(label)
    for t, dims in EXCEPTIONAL_PARABOLIC_DIMS.items():
        G = RootDatum(t)
        for i, tab in enumerate(dims, start=1):
            label = f"(b) {t} P_{i}"
            expected.append(label)
            got = dim_parabolic(G, i)
            if got == tab and is_large_algebraic(got, G.dimension):
                computed.append(label)
            elif got != tab:
                notes.append(f"{label}: computed {got}, tabulated {tab}")
    for kind, lo in (("SL", 2), ("Sp", 4), ("SO", 7)):
        for n in range(lo, n_max + 1):
            if kind == "Sp" and n % 2:
                continue
            for p in characteristics:
                if kind == "SO" and p == 2 and n % 2:
                    continue
                for d in classical_geometric_algebraic(kind, n):
                    if not d.allowed(p):
                        continue
                    label = f"(c) {d.ambient_label} {d.kind} {d.label} [p={p}]"
                    if expected_large_classical(d):
                        expected.append(label)
                    if d.is_large():
                        computed.append(label)
    for row in classical_s_rows():
        kind, n = row.ambient
        label = f"(d) {row.ambient_label} > {row.label}"
        expected.append(label)
        if row.dimension <= 3 * n and row.is_large():
            computed.append(label)
    return VerificationReport(_AlgebraicScope(), expected, computed, notes=notes)


class _AlgebraicScope:
    label = "algebraic"
