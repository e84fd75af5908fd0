"""Exact arithmetic in the cyclotomic field Q(zeta_m) and dense matrices over it.

Elements are stored in the power basis ``1, z, ..., z^(phi(m)-1)`` reduced
modulo the m-th cyclotomic polynomial, where ``z = exp(2*pi*i/m)``. The normal
form is unique, so ``==`` is exact equality in the field. Rationals are
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import DivisionByZero, ShapeMismatch, Singular

Rat = Fraction


def _poly_divmod_int(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic; coefficient lists low -> high
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial."""
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divmod_int(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def totient(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@lru_cache(maxsize=None)
def _zeta_power_coords(m: int, k: int) -> tuple[int, ...]:
    n = totient(m)
    k %= m
    poly = [0] * (k + 1)
    poly[k] = 1
    return tuple(int(c) for c in _reduce(m, poly, n))


def _reduce(m: int, poly: list, n: int) -> list:
    cp = cyclotomic_poly(m)
    poly = list(poly)
    for i in range(len(poly) - 1, n - 1, -1):
        c = poly[i]
        if c:
            poly[i] = 0
            base = i - n
            for j in range(n):
                if cp[j]:
                    poly[base + j] -= c * cp[j]
    poly = poly[:n]
    return poly + [0] * (n - len(poly))


class Cyclo:
    """An element of Q(zeta_m) in exact rational coordinates."""

    __slots__ = ("m", "coords", "_hash")

    def __init__(self, m: int, coords: Iterable = (0,)):
        n = totient(m)
        coords = [Fraction(c) for c in coords]
        if len(coords) > n:
            coords = _reduce(m, coords, n)
        coords = coords + [Fraction(0)] * (n - len(coords))
        self.m = m
        self.coords: tuple[Fraction, ...] = tuple(coords)
        self._hash = None

    @classmethod
    def _make(cls, m: int, coords: tuple) -> "Cyclo":
        obj = object.__new__(cls)
        obj.m = m
        obj.coords = coords
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, m: int) -> "Cyclo":
        return cls._make(m, (Fraction(0),) * totient(m))

    @classmethod
    def one(cls, m: int) -> "Cyclo":
        return cls.rational(m, 1)

    @classmethod
    def rational(cls, m: int, value) -> "Cyclo":
        n = totient(m)
        return cls._make(m, (Fraction(value),) + (Fraction(0),) * (n - 1))

    @classmethod
    def zeta_power(cls, m: int, k: int) -> "Cyclo":
        """``zeta_m ** k`` in normal form."""
        return cls._make(m, tuple(Fraction(c) for c in _zeta_power_coords(m, k)))

    def _coerce(self, other) -> "Cyclo":
        if isinstance(other, Cyclo):
            if other.m != self.m:
                raise ValueError(f"conductor mismatch: {self.m} vs {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo._make(self.m, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._make(self.m, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo._make(self.m, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo._make(self.m, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = len(self.coords)
        if n == 1:
            return Cyclo._make(self.m, (self.coords[0] * other.coords[0],))
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        return Cyclo._make(self.m, tuple(_reduce(self.m, prod, n)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(zeta_m)")
        if len(self.coords) == 1:
            return Cyclo._make(self.m, (1 / self.coords[0],))
        # the product of all other Galois conjugates is x^-1 times the (rational) norm
        others = Cyclo.one(self.m)
        for k in range(2, self.m):
            if gcd(k, self.m) == 1:
                others = others * self.galois(k)
        norm = (self * others).coords[0]
        return others * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def galois(self, k: int) -> "Cyclo":
        """Image under the automorphism ``zeta -> zeta^k`` (``gcd(k, m) = 1``)."""
        if gcd(k, self.m) != 1:
            raise ValueError(f"{k} is not a unit mod {self.m}")
        out = [Fraction(0)] * len(self.coords)
        for i, a in enumerate(self.coords):
            if a:
                for j, c in enumerate(_zeta_power_coords(self.m, i * k)):
                    if c:
                        out[j] += a * c
        return Cyclo._make(self.m, tuple(out))

    def conjugate(self) -> "Cyclo":
        """Complex conjugate, i.e. ``zeta -> zeta^-1``."""
        return self.galois(-1 % self.m if self.m > 1 else 1)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coords[0].denominator == 1

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if isinstance(other, Cyclo):
            return self.m == other.m and self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, self.coords))
        return self._hash

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(complex(float(a)) * z ** i for i, a in enumerate(self.coords))

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coords):
            if not a:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(a))
            elif a == 1:
                terms.append(mono)
            elif a == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{a}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Cyclo(m={self.m}, {self})"

    def to_json(self) -> dict:
        return {"m": self.m, "coords": [str(a) for a in self.coords]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclo":
        return cls(data["m"], [Fraction(c) for c in data["coords"]])


class CycloMatrix:
    """Dense matrix over Q(zeta_m)."""

    def __init__(self, m: int, entries: Sequence[Sequence]):
        self.m = m
        rows = [[e if isinstance(e, Cyclo) else Cyclo.rational(m, e) for e in row] for row in entries]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise ShapeMismatch("ragged matrix")
        self.entries: list[list[Cyclo]] = rows

    @classmethod
    def identity(cls, m: int, n: int) -> "CycloMatrix":
        one, zero = Cyclo.one(m), Cyclo.zero(m)
        return cls(m, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, rows: int, cols: int) -> "CycloMatrix":
        zero = Cyclo.zero(m)
        out = cls(m, [])
        out.rows, out.cols = rows, cols
        out.entries = [[zero] * cols for _ in range(rows)]
        return out

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.entries[i][j] = value

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> list[Cyclo]:
        return list(self.entries[i])

    def col(self, j: int) -> list[Cyclo]:
        return [r[j] for r in self.entries]

    def transpose(self) -> "CycloMatrix":
        out = CycloMatrix.zeros(self.m, self.cols, self.rows)
        out.entries = [list(c) for c in zip(*self.entries)] if self.rows else []
        return out

    def __matmul__(self, other: "CycloMatrix") -> "CycloMatrix":
        return mat_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, CycloMatrix) and self.shape == other.shape and self.entries == other.entries

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == (1 if i == j else 0) for i in range(self.rows) for j in range(self.cols))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "CycloMatrix":
        return CycloMatrix(self.m, [[self.entries[i][j] for j in cols] for i in rows]) if rows else \
            CycloMatrix.zeros(self.m, 0, len(cols))

    def __repr__(self) -> str:
        return "CycloMatrix(" + "; ".join("[" + ", ".join(map(str, r)) + "]" for r in self.entries) + ")"


def mat_mul(A: CycloMatrix, B: CycloMatrix) -> CycloMatrix:
    if A.cols != B.rows:
        raise ShapeMismatch(f"cannot multiply {A.shape} by {B.shape}")
    out = CycloMatrix.zeros(A.m, A.rows, B.cols)
    Bt = list(zip(*B.entries)) if B.rows else [()] * B.cols
    for i, row in enumerate(A.entries):
        nz = [(k, a) for k, a in enumerate(row) if a]
        for j in range(B.cols):
            col = Bt[j]
            acc = Cyclo.zero(A.m)
            for k, a in nz:
                b = col[k]
                if b:
                    acc = acc + a * b
            out.entries[i][j] = acc
    return out


def mat_vec(A: CycloMatrix, v: Sequence[Cyclo]) -> list[Cyclo]:
    if A.cols != len(v):
        raise ShapeMismatch(f"cannot apply {A.shape} to a vector of length {len(v)}")
    out = []
    for row in A.entries:
        acc = Cyclo.zero(A.m)
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def mat_inverse(A: CycloMatrix) -> CycloMatrix:
    """Exact inverse by Gauss-Jordan elimination, pivoting on the first nonzero entry."""
    if A.rows != A.cols:
        raise ShapeMismatch(f"cannot invert non-square {A.shape}")
    n, m = A.rows, A.m
    one, zero = Cyclo.one(m), Cyclo.zero(m)
    work = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(A.entries)]
    for c in range(n):
        piv = next((r for r in range(c, n) if work[r][c]), None)
        if piv is None:
            raise Singular("matrix is singular")
        work[c], work[piv] = work[piv], work[c]
        inv = work[c][c].inverse()
        work[c] = [x * inv if x else x for x in work[c]]
        for r in range(n):
            if r != c and work[r][c]:
                f = work[r][c]
                work[r] = [x - f * y if y else x for x, y in zip(work[r], work[c])]
    return CycloMatrix(m, [row[n:] for row in work])
