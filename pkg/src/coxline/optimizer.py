"""Design search over partitions of ``b + 1`` and hypercube-optimal initial vectors."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .analysis import PerformanceProfile, alphas, distance_spectrum
from .coxeter import MAX_VERTICES, RootSet
from .errors import DesignError, NoBalancedRounding, SearchTooLarge
from .exactla import norm_sq, primitive
from .linecode import LineCode, design_with_report
from .pmset import InitialVector, initial_vector_from_partition, integer_partitions

MAX_B = 8


@dataclass
class DesignCandidate:
    partition: tuple[int, ...]
    w1: InitialVector | None
    feasible: bool
    reason: str = ""
    code: LineCode | None = None
    profile: PerformanceProfile | None = None
    negation: bool = False
    cliques: int = 0
    spectrum: tuple[Fraction, ...] = field(default=(), repr=False)
    skipped: bool = False  # refused by the search-size limit, feasibility unknown

    @property
    def rootset(self) -> RootSet | None:
        return self.code.rootset if self.code else None

    @property
    def normalized_d_min(self) -> Fraction | None:
        """``d_min^2 / |w1|^2``; comparable across integer scalings."""
        return self.spectrum[0] if self.spectrum else None

    def rank_key(self):
        dev = max(abs(a - 1.0) for a in self.profile.alphas)
        return (tuple(-x for x in self.spectrum), dev)


def evaluate_partition(
    partition: Sequence[int], b: int, allow_negation="auto", max_vertices: int = MAX_VERTICES
) -> DesignCandidate:
    partition = tuple(partition)
    if len(partition) == 1:
        return DesignCandidate(partition, None, False, "single part gives the zero vector")
    w1 = initial_vector_from_partition(partition, b)
    try:
        code, report = design_with_report(w1, allow_negation=allow_negation, max_vertices=max_vertices)
    except SearchTooLarge as exc:
        return DesignCandidate(partition, w1, False, str(exc), skipped=True)
    except DesignError as exc:
        return DesignCandidate(partition, w1, False, str(exc))
    e = Fraction(w1.norm_sq)
    spectrum = tuple(d / e for d in distance_spectrum(code.W))
    return DesignCandidate(
        partition,
        w1,
        True,
        code=code,
        profile=alphas(code),
        negation=any(sorted(r) != sorted(w1) for r in code.rootset.roots),
        cliques=len(report) if report else 0,
        spectrum=spectrum,
    )


def enumerate_designs(
    b: int, max_b: int = MAX_B, workers: int = 1, max_vertices: int = MAX_VERTICES
) -> list[DesignCandidate]:
    """One candidate per partition of ``b + 1``; feasible ones ranked first.

    Ranking: larger normalised distance spectrum (d_min first, then the next
    distances), then alphas closest to all-ones, then partition order.
    Infeasible partitions follow in partition order with their reason;
    partitions whose graph exceeds ``max_vertices`` are marked ``skipped``.
    """
    if not 1 <= b <= max_b:
        raise ValueError(f"b must lie in 1..{max_b}")
    parts = list(integer_partitions(b + 1))
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            cands = list(ex.map(lambda p: evaluate_partition(p, b, max_vertices=max_vertices), parts))
    else:
        cands = [evaluate_partition(p, b, max_vertices=max_vertices) for p in parts]
    feasible = [c for c in cands if c.feasible]
    feasible.sort(key=DesignCandidate.rank_key)  # stable: partition order breaks ties
    return feasible + [c for c in cands if not c.feasible]


def optimal_initial_vector(rs: RootSet) -> np.ndarray:
    """Sum of the unit root differences; equidistant from every mirror."""
    d = np.array(rs.diffs, dtype=np.float64)
    return (d / np.linalg.norm(d, axis=1)[:, None]).sum(axis=0)


@dataclass(frozen=True)
class IntegerApproximation:
    vector: InitialVector
    scale: int
    alpha_sq: tuple[Fraction, ...]
    max_deviation: float

    @property
    def alphas(self) -> tuple[float, ...]:
        return tuple(math.sqrt(a) for a in self.alpha_sq)


def alpha_sq_for_vector(w: Sequence[int], rs: RootSet) -> tuple[Fraction, ...]:
    """Squared alphas of the code generated from ``w`` by the group of ``rs``."""
    rows = [primitive(d) for d in rs.diffs]
    e = norm_sq(w)
    return tuple(
        Fraction(rs.b) * Fraction(sum(a * c for a, c in zip(w, m))) ** 2 / (norm_sq(m) * e)
        for m in rows
    )


def _balanced_round(x: np.ndarray) -> np.ndarray:
    v = np.rint(x).astype(np.int64)
    excess = int(v.sum())
    if excess:
        resid = v - x
        order = np.argsort(-resid if excess > 0 else resid, kind="stable")
        v[order[: abs(excess)]] -= np.sign(excess)
    return v


def integer_approximation(w_opt: Sequence[float], max_scale: int, rs: RootSet) -> IntegerApproximation:
    """Best balanced integer rounding of ``s * w_opt`` for ``s = 1..max_scale``.

    Quality is ``max |alpha_j - 1|`` for the code generated by ``rs``'s group;
    the smallest scale wins ties.
    """
    w = np.asarray(w_opt, dtype=np.float64)
    if abs(w.sum()) > 1e-9 * max(1.0, np.abs(w).max()):
        raise ValueError("w_opt is not balanced")
    best: IntegerApproximation | None = None
    for s in range(1, max_scale + 1):
        v = _balanced_round(s * w)
        if not v.any():
            continue
        a2 = alpha_sq_for_vector(v.tolist(), rs)
        if any(a == 0 for a in a2):  # on a mirror
            continue
        dev = max(abs(math.sqrt(a) - 1.0) for a in a2)
        if best is None or dev < best.max_deviation - 1e-15:
            best = IntegerApproximation(InitialVector(tuple(int(t) for t in v)), s, a2, dev)
    if best is None:
        raise NoBalancedRounding(f"no usable balanced rounding for scales 1..{max_scale}")
    return best
