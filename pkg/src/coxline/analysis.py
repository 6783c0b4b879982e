"""Error-rate descriptors of an orthotope line code.

The squared alpha coefficients are kept as Fractions so the identity
``sum(alpha**2) == b`` can be checked exactly; one square root is taken at
the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import brentq

from .errors import ProfileMismatch
from .exactla import RatMatrix, mat_mul, norm_sq
from .linecode import LineCode


@dataclass(frozen=True)
class PerformanceProfile:
    alpha_sq: tuple[Fraction, ...]
    alphas: tuple[float, ...]
    alpha_min: float
    nu: int
    d_min_sq: Fraction
    energy_per_tuple: Fraction
    eye_row: tuple[Fraction, ...]

    @property
    def b(self) -> int:
        return len(self.alphas)

    @classmethod
    def from_alphas(cls, alphas: Sequence[float]) -> "PerformanceProfile":
        """Profile carrying only alpha values (for formula-level work)."""
        a = tuple(float(x) for x in alphas)
        amin = min(a)
        nu = sum(1 for x in a if math.isclose(x, amin, rel_tol=1e-12))
        return cls((), a, amin, nu, Fraction(0), Fraction(0), ())


@dataclass(frozen=True)
class CurvePoint:
    eta: float
    p_exact: float
    p_union: float
    p_asymptotic: float


def alpha_sq_detection(W: RatMatrix, M: RatMatrix, b: int) -> tuple[Fraction, ...]:
    """Squared alphas from the eye opening and the noise scales of ``M``.

    ``alpha_j = |W M^T|_{1j} / xi_j / sqrt(|W|^2 / (b 2^b))``.
    """
    P = mat_mul(W, M.T)
    frob = sum(norm_sq(r) for r in W)
    scale = frob / (b * W.rows)
    return tuple(P[0, j] ** 2 / norm_sq(M.row(j)) / scale for j in range(1, M.rows))


def alpha_sq_geometric(w1: Sequence, diffs: Sequence[Sequence], b: int) -> tuple[Fraction, ...]:
    """``alpha_j^2 = b |w1 - w_j|^2 / (4 |w1|^2)``."""
    e = norm_sq(w1)
    return tuple(Fraction(b) * norm_sq(d) / (4 * e) for d in diffs)


def numeric_alphas(W: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Float version of :func:`alpha_sq_detection` (square-rooted), any real W."""
    W = np.asarray(W, dtype=np.float64)
    M = np.asarray(M, dtype=np.float64)
    b = M.shape[0] - 1
    P = np.abs(W @ M.T)
    xi = np.sqrt((M * M).sum(axis=1))
    scale = math.sqrt((W * W).sum() / (b * W.shape[0]))
    return P[0, 1:] / xi[1:] / scale


def codebook_min_distance(W) -> Fraction:
    """Minimum squared distance, scanned from the first row (group-code uniformity)."""
    rows = W.W if hasattr(W, "W") else W
    rows = list(rows)
    if len(rows) < 2:
        raise ValueError("need at least two codewords")
    w = rows[0]
    return min(sum((a - c) ** 2 for a, c in zip(w, r)) for r in rows[1:])


def distance_spectrum(W) -> tuple[Fraction, ...]:
    rows = list(W.W if hasattr(W, "W") else W)
    w = rows[0]
    return tuple(sorted(sum((a - c) ** 2 for a, c in zip(w, r)) for r in rows[1:]))


def alphas(code: LineCode, tol: float = 1e-12) -> PerformanceProfile:
    """Alpha profile by both formulas; they must agree.

    Also verifies the uniform-error property: every row of ``|W M^T|`` equals
    the first.
    """
    b = code.b
    a_det = alpha_sq_detection(code.W, code.M, b)
    a_geo = alpha_sq_geometric(code.w1.components, code.rootset.diffs, b)
    if a_det != a_geo:
        fd = [math.sqrt(x) for x in a_det]
        fg = [math.sqrt(x) for x in a_geo]
        if any(abs(x - y) > tol for x, y in zip(fd, fg)):
            raise ProfileMismatch(f"alpha mismatch {fd} vs {fg}")
    P = mat_mul(code.W, code.M.T)
    eye_row = tuple(abs(x) for x in P.row(0))
    if any(tuple(abs(x) for x in P.row(i)) != eye_row for i in range(P.rows)):
        raise ProfileMismatch("rows of |W M^T| differ: error probability is not uniform")
    amin_sq = min(a_det)
    return PerformanceProfile(
        alpha_sq=a_det,
        alphas=tuple(math.sqrt(x) for x in a_det),
        alpha_min=math.sqrt(amin_sq),
        nu=sum(1 for x in a_det if x == amin_sq),
        d_min_sq=codebook_min_distance(code.W),
        energy_per_tuple=sum(norm_sq(r) for r in code.W) / code.W.rows,
        eye_row=eye_row,
    )


def qfunc(x: float) -> float:
    """Gaussian tail probability ``P(N(0,1) > x)``."""
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def exact_word_error(profile: PerformanceProfile, eta: float) -> float:
    """``1 - prod_j (1 - Q(alpha_j sqrt(2 eta)))``."""
    if eta <= 0:
        raise ValueError("eta must be positive")
    r = math.sqrt(2.0 * eta)
    # 1 - prod(1 - q) = -expm1(sum(log1p(-q))) keeps precision at small q
    return -math.expm1(sum(math.log1p(-qfunc(a * r)) for a in profile.alphas))


def union_bound(profile: PerformanceProfile, eta: float) -> float:
    if eta <= 0:
        raise ValueError("eta must be positive")
    r = math.sqrt(2.0 * eta)
    return min(1.0, sum(qfunc(a * r) for a in profile.alphas))


def asymptotic_wer(profile: PerformanceProfile, eta: float) -> float:
    if eta <= 0:
        raise ValueError("eta must be positive")
    return profile.nu * qfunc(profile.alpha_min * math.sqrt(2.0 * eta))


def bit_error_rate(profile: PerformanceProfile, eta: float) -> float:
    """Average per-bit slicer error probability."""
    r = math.sqrt(2.0 * eta)
    return sum(qfunc(a * r) for a in profile.alphas) / profile.b


def error_curve(profile: PerformanceProfile, etas: Iterable[float]) -> list[CurvePoint]:
    return [
        CurvePoint(e, exact_word_error(profile, e), union_bound(profile, e), asymptotic_wer(profile, e))
        for e in etas
    ]


def snr_noise_map(code: LineCode | RatMatrix, eta: float) -> float:
    """Noise density ``N0 = |W|^2 / (2^b b eta)``."""
    if eta <= 0:
        raise ValueError("eta must be positive")
    W = code.W if hasattr(code, "W") else code
    b = W.cols - 1
    frob = sum(norm_sq(r) for r in W)
    return float(frob / (W.rows * b)) / eta


def eta_from_noise(code: LineCode | RatMatrix, n0: float) -> float:
    """Inverse of :func:`snr_noise_map`."""
    return snr_noise_map(code, 1.0) / n0


def eta_for_word_error(profile: PerformanceProfile, target: float) -> float:
    """Solve ``exact_word_error(profile, eta) == target`` for eta."""
    if not 0 < target < 1 - 0.5**profile.b:
        raise ValueError("target outside the attainable range")
    def f(le):
        return math.log(max(exact_word_error(profile, math.exp(le)), 1e-300)) - math.log(target)

    return math.exp(brentq(f, math.log(1e-6), math.log(1e4), xtol=1e-12))
