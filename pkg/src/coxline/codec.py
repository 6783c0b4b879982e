"""Detection matrix, ``W M^T = B D`` factorisation, encoder and slicer decoder."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from .coxeter import Codebook, RootSet
from .errors import NotOrthotope
from .exactla import RatMatrix, mat_inverse, mat_mul, norm_sq, primitive, vec_mat


@dataclass(frozen=True)
class DetectionMatrix:
    M: RatMatrix
    row_norms_sq: tuple[Fraction, ...]

    @classmethod
    def from_matrix(cls, M: RatMatrix) -> "DetectionMatrix":
        return cls(M, tuple(norm_sq(r) for r in M))

    @property
    def b(self) -> int:
        return self.M.rows - 1


@dataclass(frozen=True)
class CodecBundle:
    B: RatMatrix
    D: RatMatrix
    K: RatMatrix | None = None

    @property
    def eye(self) -> tuple[Fraction, ...]:
        """Slicer distances ``d_1..d_b`` (the eye opening)."""
        return tuple(self.D[i, i] for i in range(1, self.D.rows))


@dataclass(frozen=True)
class DecodeResult:
    bits: tuple[int, ...]
    common_mode: float
    ambiguous: bool


def detection_matrix(rs: RootSet) -> DetectionMatrix:
    """All-ones row followed by the primitive integer root differences."""
    rows = [(1,) * rs.w1.n] + [primitive(d) for d in rs.diffs]
    return DetectionMatrix.from_matrix(RatMatrix(rows))


def _as_matrix(x) -> RatMatrix:
    if isinstance(x, Codebook):
        return x.W
    if isinstance(x, DetectionMatrix):
        return x.M
    return x


def factor_bd(W, M) -> CodecBundle:
    """Split ``W M^T`` into sign matrix ``B`` and diagonal ``D``.

    Raises NotOrthotope unless the first column vanishes and every other
    column has a single nonzero magnitude.
    """
    W, M = _as_matrix(W), _as_matrix(M)
    P = mat_mul(W, M.T)
    if any(P[i, 0] != 0 for i in range(P.rows)):
        raise NotOrthotope("codewords are not balanced against the first row of M")
    mags = [Fraction(0)]
    for j in range(1, P.cols):
        col = {abs(P[i, j]) for i in range(P.rows)}
        if len(col) != 1 or 0 in col:
            raise NotOrthotope(f"column {j} magnitudes {sorted(col)} are not constant")
        mags.append(col.pop())
    B = RatMatrix([[0] + [1 if P[i, j] > 0 else -1 for j in range(1, P.cols)] for i in range(P.rows)])
    return CodecBundle(B, RatMatrix.diag(mags))


def encoding_matrix(bundle: CodecBundle, M) -> RatMatrix:
    """``K = D M^{-T}`` with the free first row set to zero."""
    M = _as_matrix(M)
    K = mat_mul(bundle.D, mat_inverse(M.T))
    return RatMatrix([[0] * K.cols] + [list(K.row(i)) for i in range(1, K.rows)])


def codec_bundle(W, M) -> CodecBundle:
    bundle = factor_bd(W, M)
    return replace(bundle, K=encoding_matrix(bundle, M))


def encode(bits: Sequence[int], K: RatMatrix) -> tuple[Fraction, ...]:
    """Codeword ``(0, bits) @ K`` for bits in {+1, -1}."""
    if len(bits) != K.rows - 1:
        raise ValueError(f"expected {K.rows - 1} bits, got {len(bits)}")
    if any(x not in (1, -1) for x in bits):
        raise ValueError("bits must be +1 or -1")
    return vec_mat((0, *bits), K)


def decode(y: Sequence, M) -> DecodeResult:
    """Slice ``y @ M^T``; entry 0 is the common mode, the rest give the bits.

    An exact zero at a slicer input decides +1 and sets ``ambiguous``.
    """
    M = _as_matrix(M)
    if all(isinstance(a, (int, Fraction)) for a in y):
        s = list(vec_mat(y, M.T))
    else:
        s = (np.asarray(y, dtype=np.float64) @ M.to_numpy().T).tolist()
    bits = tuple(1 if v >= 0 else -1 for v in s[1:])
    return DecodeResult(bits, float(s[0]), any(v == 0 for v in s[1:]))


def bits_to_mask(bits: Sequence[int]) -> int:
    """Bit j of the mask is set when bit j is -1."""
    return sum(1 << j for j, x in enumerate(bits) if x < 0)


def peterson_matrix(n: int):
    """Projection matrix onto the balanced hyperplane plus the all-ones axis.

    Exact (RatMatrix) when ``sqrt(n)`` is an integer, float ndarray otherwise.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    r = math.isqrt(n)
    if r * r == n:
        gamma = Fraction(1, r)
        beta = Fraction(-1, n - r)
    else:
        s = math.sqrt(n)
        gamma, beta = 1.0 / s, -1.0 / (n - s)
    rows = []
    for i in range(n - 1):
        rows.append([(1 + beta) if j == i else beta for j in range(n - 1)] + [gamma])
    rows.append([gamma] * n)
    if isinstance(gamma, Fraction):
        return RatMatrix(rows)
    return np.array(rows, dtype=np.float64)


def peterson_project(w: Sequence, n: int | None = None):
    """``w @ A``; exact tuple of Fractions when possible, else float ndarray."""
    n = len(w) if n is None else n
    if len(w) != n:
        raise ValueError("length mismatch")
    A = peterson_matrix(n)
    if isinstance(A, RatMatrix) and all(isinstance(x, (int, Fraction)) for x in w):
        return vec_mat(w, A)
    if isinstance(A, RatMatrix):
        A = A.to_numpy()
    return np.asarray(w, dtype=np.float64) @ A
