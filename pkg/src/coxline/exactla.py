"""Exact dense linear algebra over the rationals.

Everything here is built on :class:`fractions.Fraction`; no floating point is
involved, so products and inverses of the design matrices come out bit-exact.
Matrices are small (at most ``2**b`` by ``b+1`` with ``b`` around 8) and dense.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction


class SingularMatrix(ArithmeticError):
    """Raised when inverting a matrix of deficient rank."""


def as_rational(x) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: silently importing a binary approximation would
    defeat the purpose of the module.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (bool, float, np.floating)):
        raise TypeError(f"refusing inexact value {x!r}")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to Fraction")


class RatMatrix:
    """Immutable dense matrix of Fractions stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if not data:
            raise ValueError("matrix needs at least one row")
        width = len(data[0])
        if width == 0 or any(len(r) != width for r in data):
            raise ValueError("ragged or empty rows")
        self.rows = len(data)
        self.cols = width
        self._data = data

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diag(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __len__(self) -> int:
        return self.rows

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self._data[i][j]
        return self._data[key]

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(zip(*self._data))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        return mat_mul(self, other)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-x for x in r] for r in self._data])

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return RatMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self, other)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-other)

    def scale(self, c) -> "RatMatrix":
        c = as_rational(c)
        return RatMatrix([[c * x for x in r] for r in self._data])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def is_diagonal(self) -> bool:
        return all(
            x == 0 for i, r in enumerate(self._data) for j, x in enumerate(r) if i != j
        )

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.T

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self._data], dtype=np.float64)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"RatMatrix([{body}])"


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    bt = b.T._data
    return RatMatrix([[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a._data])


def mat_inverse(m: RatMatrix) -> RatMatrix:
    """Gauss-Jordan inverse with first-nonzero pivoting."""
    if m.rows != m.cols:
        raise ValueError(f"matrix is not square: {m.shape}")
    n = m.rows
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"matrix is singular (no pivot in column {col})")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return RatMatrix([r[n:] for r in aug])


def gram(d: RatMatrix) -> RatMatrix:
    """Return ``d @ d.T``."""
    rows = d._data
    g = [[Fraction(0)] * len(rows) for _ in rows]
    for i, r in enumerate(rows):
        for j in range(i, len(rows)):
            g[i][j] = g[j][i] = dot(r, rows[j])
    return RatMatrix(g)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def norm_sq(v: Sequence):
    return dot(v, v)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale ``v`` by a positive rational so its entries are coprime integers."""
    q = [as_rational(x) for x in v]
    if all(x == 0 for x in q):
        raise ValueError("zero vector has no primitive scaling")
    den = math.lcm(*(x.denominator for x in q))
    ints = [int(x * den) for x in q]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints)


def vec_mat(v: Sequence, m: RatMatrix) -> tuple[Fraction, ...]:
    """Row vector times matrix."""
    if len(v) != m.rows:
        raise ValueError("length mismatch")
    return tuple(dot(v, c) for c in m.T._data)
