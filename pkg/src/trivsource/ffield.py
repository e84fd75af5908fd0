"""Finite fields F_q and dense linear algebra over them.

Elements of ``F_q`` (``q = p^k``) are ints in ``range(q)`` whose base-p digits
are the coefficients of a polynomial in ``x`` modulo a fixed irreducible
``modulus``. Vectors are lists, matrices are lists of rows, and modules act on
column vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

_TABLE_LIMIT = 1024


def _digits(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    out = 0
    for d in reversed(ds):
        out = out * p + d
    return out


def _polymulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            for j in range(k + 1):
                prod[i - k + j] = (prod[i - k + j] - c * modulus[j]) % p
    return prod[:k]


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    # trial division by every monic polynomial of degree 1..deg/2
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            div = list(low) + [1]
            rem = list(poly)
            for i in range(len(rem) - 1, d - 1, -1):
                c = rem[i]
                if c:
                    for j in range(d + 1):
                        rem[i - d + j] = (rem[i - d + j] - c * div[j]) % p
            if not any(rem[:d]):
                return False
    return True


def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k, enumerating lower coefficients as base-p integers."""
    if k == 1:
        return (0, 1)
    for code in range(p ** k):
        poly = tuple(_digits(code, p, k)) + (1,)
        if poly[0] and _is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")


@dataclass(eq=False)
class FField:
    p: int
    k: int
    q: int
    modulus: tuple[int, ...]
    m: int
    generator: int
    omega: int
    exp: list[int] = field(repr=False)
    log: list[int] = field(repr=False)
    add_t: list[list[int]] | None = field(default=None, repr=False)
    mul_t: list[list[int]] | None = field(default=None, repr=False)

    # -- scalar arithmetic --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.add_t is not None:
            return self.add_t[a][b]
        p, k = self.p, self.k
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p, k = self.p, self.k
        return _undigits([(-x) % p for x in _digits(a, p, k)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if not a or not b:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def omega_power(self, j: int) -> int:
        """``omega ** j``; omega has multiplicative order exactly m."""
        return self.exp[(j % self.m) * ((self.q - 1) // self.m)]

    def elements(self) -> range:
        return range(self.q)

    # -- vector helpers -----------------------------------------------------

    def axpy(self, x: list[int], c: int, y: list[int]) -> list[int]:
        """``x + c*y``."""
        if not c:
            return list(x)
        if self.k == 1:
            p = self.p
            return [(a + c * b) % p for a, b in zip(x, y)]
        if self.add_t is not None:
            add, mc = self.add_t, self.mul_t[c]
            return [add[a][mc[b]] for a, b in zip(x, y)]
        return [self.add(a, self.mul(c, b)) for a, b in zip(x, y)]

    def scale(self, c: int, x: list[int]) -> list[int]:
        if self.k == 1:
            p = self.p
            return [c * a % p for a in x]
        if self.mul_t is not None:
            mc = self.mul_t[c]
            return [mc[a] for a in x]
        return [self.mul(c, a) for a in x]

    def dot(self, x: list[int], y: list[int]) -> int:
        if self.k == 1:
            return sum(a * b for a, b in zip(x, y)) % self.p
        acc = 0
        for a, b in zip(x, y):
            if a and b:
                acc = self.add(acc, self.mul(a, b))
        return acc


def build_field(p: int, m: int) -> FField:
    """Smallest ``F_{p^k}`` containing a primitive m-th root of unity ``omega``."""
    if gcd(p, m) != 1:
        raise ValueError(f"p={p} must not divide m={m}")
    k = 1
    while (p ** k - 1) % m:
        k += 1
    q = p ** k
    modulus = first_irreducible(p, k)

    def slow_mul(a, b):
        return _undigits(_polymulmod(_digits(a, p, k), _digits(b, p, k), modulus, p), p)

    gen = None
    for cand in range(1, q):
        x, order = cand, 1
        while x != 1:
            x = slow_mul(x, cand)
            order += 1
        if order == q - 1:
            gen = cand
            break
    exp = [1] * (q - 1)
    for i in range(1, q - 1):
        exp[i] = slow_mul(exp[i - 1], gen)
    log = [0] * q
    for i, x in enumerate(exp):
        log[x] = i
    omega = exp[((q - 1) // m) % (q - 1)]
    F = FField(p, k, q, modulus, m, gen, omega, exp, log)
    if k > 1 and q <= _TABLE_LIMIT:
        F.add_t = [[_undigits([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p)
                    for b in range(q)] for a in range(q)]
        F.mul_t = [[F.mul(a, b) for b in range(q)] for a in range(q)]
    return F


# -- matrices --------------------------------------------------------------

def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A: list[list[int]]) -> list[list[int]]:
    return [list(c) for c in zip(*A)]


def mat_mul(F: FField, A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    if not A:
        return []
    ncols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * ncols
        for a, brow in zip(row, B):
            if a:
                acc = F.axpy(acc, a, brow)
        out.append(acc)
    return out


def mat_vec(F: FField, A: list[list[int]], v: list[int]) -> list[int]:
    return [F.dot(row, v) for row in A]


def mat_add(F: FField, A, B):
    return [F.axpy(a, 1, b) for a, b in zip(A, B)]


def mat_sub_scalar(F: FField, A: list[list[int]], lam: int) -> list[list[int]]:
    """``A - lam*I``."""
    nl = F.neg(lam)
    return [[F.add(x, nl) if i == j else x for j, x in enumerate(row)] for i, row in enumerate(A)]


class Echelon:
    """Incrementally maintained reduced row-echelon basis of a subspace."""

    def __init__(self, F: FField, n: int):
        self.F = F
        self.n = n
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: list[int]) -> list[int]:
        F = self.F
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                v = F.axpy(v, F.neg(v[c]), row)
        return v

    def add(self, v: list[int]) -> bool:
        """Insert ``v``; returns False when it was already in the span."""
        F = self.F
        v = self.reduce(list(v))
        c = next((i for i, x in enumerate(v) if x), None)
        if c is None:
            return False
        v = F.scale(F.inv(v[c]), v)
        for i, row in enumerate(self.rows):
            if row[c]:
                self.rows[i] = F.axpy(row, F.neg(row[c]), v)
        pos = next((i for i, pc in enumerate(self.pivots) if pc > c), len(self.pivots))
        self.rows.insert(pos, v)
        self.pivots.insert(pos, c)
        return True

    def contains(self, v: list[int]) -> bool:
        return not any(self.reduce(list(v)))

    def coords(self, v: list[int]) -> list[int]:
        """Coordinates of ``v`` (assumed in the span) in the echelon basis."""
        return [v[c] for c in self.pivots]


def rref(F: FField, A: list[list[int]], ncols: int | None = None) -> Echelon:
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    E = Echelon(F, n)
    for row in A:
        E.add(row)
    return E


def rank(F: FField, A: list[list[int]]) -> int:
    return len(rref(F, A))


def nullspace(F: FField, A: list[list[int]], ncols: int | None = None) -> list[list[int]]:
    """Basis of ``{v : A v = 0}``."""
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    E = rref(F, A, n)
    piv = set(E.pivots)
    basis = []
    for free in range(n):
        if free in piv:
            continue
        v = [0] * n
        v[free] = 1
        for row, c in zip(E.rows, E.pivots):
            if row[free]:
                v[c] = F.neg(row[free])
        basis.append(v)
    return basis


def nullity(F: FField, A: list[list[int]], ncols: int | None = None) -> int:
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    return n - rank(F, A)


def spin(F: FField, vectors: list[list[int]], gens: list[list[list[int]]], n: int) -> Echelon:
    """Smallest subspace containing ``vectors`` and stable under every matrix in ``gens``."""
    E = Echelon(F, n)
    queue = []
    for v in vectors:
        if E.add(v):
            queue.append(v)
    while queue and len(E) < n:
        v = queue.pop()
        for g in gens:
            w = mat_vec(F, g, v)
            if E.add(w):
                queue.append(w)
    return E


def mat_inverse(F: FField, A: list[list[int]]) -> list[list[int]]:
    n = len(A)
    work = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if work[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix over F_q")
        work[c], work[piv] = work[piv], work[c]
        work[c] = F.scale(F.inv(work[c][c]), work[c])
        for r in range(n):
            if r != c and work[r][c]:
                work[r] = F.axpy(work[r], F.neg(work[r][c]), work[c])
    return [row[n:] for row in work]
