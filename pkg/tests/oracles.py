"""Brute-force oracles: small finite fields and matrix-group counts by enumeration."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from sympy import factorint

# irreducible polynomials, lowest coefficient first, without the leading 1
_MODULI = {4: (2, (1, 1)), 8: (2, (1, 1, 0)), 9: (3, (1, 0))}


class GF:
    """The field with ``q`` elements; elements are integers ``0..q-1``."""

    def __init__(self, q: int):
        if q in _MODULI:
            p, low = _MODULI[q]
            k = len(low)
        else:
            p, low, k = q, (), 1
        self.q, self.p, self.k = q, p, k
        elems = list(product(range(p), repeat=k))  # little-endian coefficient vectors
        index = {e: i for i, e in enumerate(elems)}

        def mul_vec(a, b):
            res = [0] * (2 * k - 1)
            for i, x in enumerate(a):
                for j, y in enumerate(b):
                    res[i + j] = (res[i + j] + x * y) % p
            # reduce with x^k = -(low)
            for d in range(2 * k - 2, k - 1, -1):
                c = res[d]
                if c:
                    res[d] = 0
                    for i, l in enumerate(low):
                        res[d - k + i] = (res[d - k + i] - c * l) % p
            return tuple(res[:k])

        self.add = [[index[tuple((x + y) % p for x, y in zip(a, b))] for b in elems] for a in elems]
        self.mul = [[index[mul_vec(a, b)] for b in elems] for a in elems]
        self.neg = [index[tuple((-x) % p for x in a)] for a in elems]
        self.frob = [self._pow(i, p) for i in range(q)]

    def _pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul[r][a]
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]


def _det2(F: GF, m) -> int:
    a, b, c, d = m
    return F.sub(F.mul[a][d], F.mul[b][c])


def _det3(F: GF, m) -> int:
    a, b, c, d, e, f, g, h, i = m
    M, A, S = F.mul, F.add, F.sub
    t1 = M[a][S(M[e][i], M[f][h])]
    t2 = M[b][S(M[d][i], M[f][g])]
    t3 = M[c][S(M[d][h], M[e][g])]
    return A[S(t1, t2)][t3]


def count_gl(n: int, q: int) -> int:
    """Number of invertible ``n x n`` matrices, by enumeration (n = 2 or 3)."""
    F = GF(q)
    det = {2: _det2, 3: _det3}[n]
    return sum(1 for m in product(range(q), repeat=n * n) if det(F, m) != 0)


def count_sl2(q: int) -> int:
    F = GF(q)
    return sum(1 for m in product(range(q), repeat=4) if _det2(F, m) == 1)


def _matmul(F: GF, A, B, n: int):
    out = []
    for i in range(n):
        row = A[i * n:(i + 1) * n]
        for j in range(n):
            s = 0
            for k in range(n):
                s = F.add[s][F.mul[row[k]][B[k * n + j]]]
            out.append(s)
    return tuple(out)


def _transpose(A, n: int):
    return tuple(A[j * n + i] for i in range(n) for j in range(n))


@lru_cache(maxsize=None)
def count_sp4_2() -> int:
    """Matrices over GF(2) preserving the alternating form ``J = antidiag(1,1,-1,-1)``."""
    F = GF(2)
    n = 4
    J = (0, 0, 0, 1,
         0, 0, 1, 0,
         0, 1, 0, 0,
         1, 0, 0, 0)
    count = 0
    for m in product(range(2), repeat=16):
        if _matmul(F, _matmul(F, m, J, n), _transpose(m, n), n) == J:
            count += 1
    return count


def count_gu3_2() -> int:
    """``3 x 3`` matrices over GF(4) with ``M J conj(M)^T = J``, ``J`` the antidiagonal identity.

    Rows are enumerated one at a time and pruned by the form conditions.
    """
    F = GF(4)
    n = 3

    def herm(u, v):  # u J conj(v)^T with J antidiagonal
        s = 0
        for i in range(n):
            s = F.add[s][F.mul[u[i]][F.frob[v[n - 1 - i]]]]
        return s

    vectors = list(product(range(4), repeat=n))
    target = [[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)]
    count = 0
    for r0 in vectors:
        if herm(r0, r0) != target[0][0]:
            continue
        for r1 in vectors:
            if herm(r1, r1) != target[1][1] or herm(r0, r1) != target[0][1]:
                continue
            for r2 in vectors:
                if (herm(r2, r2) == target[2][2] and herm(r0, r2) == target[0][2]
                        and herm(r1, r2) == target[1][2]):
                    count += 1
    return count


def brute_zsigmondy(c: int, d: int):
    """Largest prime dividing ``c^d - 1`` but no ``c^i - 1`` with ``i < d``."""
    primes = factorint(c**d - 1)
    good = [r for r in set(primes) if all((c**i - 1) % r for i in range(1, d))]
    return max(good) if good else None
