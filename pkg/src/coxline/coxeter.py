"""Root permutations, reflection generators, the group they generate, and the
codebook obtained as the orbit of the initial vector.

Differences ``d = w1 - root`` are kept as unnormalised integer vectors; the
reflection ``I - 2 d d^T / <d, d>`` stays rational that way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .errors import (
    DegenerateCodebook,
    DegenerateGroup,
    DesignInfeasible,
    RelationViolation,
    SearchTooLarge,
)
from .exactla import RatMatrix, dot, mat_mul, vec_mat
from .pmset import InitialVector, distinct_permutations

# Exhaustive search is meant for desk-scale graphs; larger ones are refused.
MAX_VERTICES = 12000


@dataclass(frozen=True)
class Candidate:
    root: tuple[int, ...]
    diff: tuple[int, ...]
    negated: bool = False

    @property
    def norm_sq(self) -> int:
        return sum(x * x for x in self.diff)


@dataclass(frozen=True)
class RootSet:
    w1: InitialVector
    roots: tuple[tuple[int, ...], ...]
    diffs: tuple[tuple[int, ...], ...]
    norms_sq: tuple[int, ...]

    def __post_init__(self):
        for i, j in itertools.combinations(range(len(self.diffs)), 2):
            if dot(self.diffs[i], self.diffs[j]) != 0:
                raise DesignInfeasible(
                    f"differences {self.diffs[i]} and {self.diffs[j]} are not orthogonal"
                )
        if any(n == 0 for n in self.norms_sq):
            raise DesignInfeasible("a root coincides with w1")

    @classmethod
    def from_roots(cls, w1, roots: Sequence[Sequence[int]]) -> "RootSet":
        if not isinstance(w1, InitialVector):
            w1 = InitialVector(tuple(w1))
        roots = tuple(tuple(int(x) for x in r) for r in roots)
        ms, msn = sorted(w1), sorted(-x for x in w1)
        for r in roots:
            if len(r) != w1.n:
                raise ValueError(f"root {r} has wrong length")
            if sorted(r) != ms and sorted(r) != msn:
                raise DesignInfeasible(f"root {r} is not a permutation of +/-w1")
        diffs = tuple(tuple(a - c for a, c in zip(w1, r)) for r in roots)
        return cls(w1, roots, diffs, tuple(sum(x * x for x in d) for d in diffs))

    @property
    def b(self) -> int:
        return len(self.roots)

    @property
    def sorted_norms(self) -> tuple[int, ...]:
        return tuple(sorted(self.norms_sq))


@dataclass
class CliqueReport:
    """All size-``b`` cliques of the orthogonality graph on the candidates.

    ``cliques`` hold candidate indices in increasing order; ``pm_closed``
    flags the cliques whose whole orbit stays inside the +/-w1 permutation set.
    """

    w1: InitialVector
    b: int
    candidates: list[Candidate]
    cliques: list[tuple[int, ...]]
    ranking: list[tuple[int, ...]] = field(default_factory=list)
    pm_closed: list[bool] = field(default_factory=list)

    def __len__(self):
        return len(self.cliques)

    def rootset(self, i: int) -> RootSet:
        return RootSet.from_roots(self.w1, [self.candidates[v].root for v in self.cliques[i]])


@dataclass(frozen=True)
class ReflectionGroup:
    generators: tuple[RatMatrix, ...]
    elements: tuple[RatMatrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class Codebook:
    W: RatMatrix
    b: int

    @property
    def size(self) -> int:
        return self.W.rows

    def rows(self) -> list[tuple[Fraction, ...]]:
        return [tuple(r) for r in self.W]


def _as_w1(w1) -> InitialVector:
    return w1 if isinstance(w1, InitialVector) else InitialVector(tuple(w1))


def candidate_differences(w1, allow_negation: bool = False) -> list[Candidate]:
    """Every permutation of ``w1`` other than itself, plus those of ``-w1`` on request.

    Permutations of ``-w1`` are only added when ``-w1`` is not already a
    permutation of ``w1``.
    """
    w1 = _as_w1(w1)
    base = distinct_permutations(w1).vectors
    out = [
        Candidate(p, tuple(a - c for a, c in zip(w1, p)))
        for p in base
        if p != w1.components
    ]
    neg = w1.negated()
    if allow_negation and sorted(neg) != sorted(w1):
        out += [
            Candidate(p, tuple(a - c for a, c in zip(w1, p)), negated=True)
            for p in distinct_permutations(neg).vectors
        ]
    return out


def orthogonality_graph(cands: Sequence[Candidate]) -> np.ndarray:
    """Boolean adjacency: exact zero inner product between differences."""
    d = np.array([c.diff for c in cands], dtype=np.int64)
    if d.size and np.abs(d).max() > 2**20:
        raise OverflowError("differences too large for exact int64 Gram")
    n = len(d)
    adj = np.zeros((n, n), dtype=bool)
    step = 1024  # bounded int64 scratch space
    for i in range(0, n, step):
        adj[i : i + step] = (d[i : i + step] @ d.T) == 0
    np.fill_diagonal(adj, False)
    return adj


def _orbit_closed(w1: InitialVector, diffs: Sequence[Sequence[int]], members: set) -> bool:
    b = len(diffs)
    masks = np.arange(1 << b, dtype=np.int64)
    sel = (masks[:, None] >> np.arange(b)) & 1
    orbit = np.array(w1.components, dtype=np.int64) - sel @ np.array(diffs, dtype=np.int64)
    return all(tuple(v) in members for v in orbit.tolist())


def orthogonal_cliques(
    cands: Sequence[Candidate], b: int, w1=None, max_vertices: int = MAX_VERTICES
) -> CliqueReport:
    """Enumerate every size-``b`` set of mutually orthogonal differences."""
    if b < 1:
        raise ValueError("b must be positive")
    cands = list(cands)
    if w1 is None:
        if not cands:
            raise DesignInfeasible("no candidate differences")
        c0 = cands[0]
        w1 = tuple(r + d for r, d in zip(c0.root, c0.diff))
    w1 = _as_w1(w1)
    if len(cands) < b:
        raise DesignInfeasible(f"only {len(cands)} candidates for a size-{b} clique")
    if len(cands) > max_vertices:
        raise SearchTooLarge(
            f"not searched: {len(cands)} candidates exceed the limit of {max_vertices}"
        )
    adj = orthogonality_graph(cands)
    found = kernels.enumerate_cliques(adj, b)
    cliques = [tuple(int(x) for x in row) for row in found]
    if not cliques:
        raise DesignInfeasible(f"no size-{b} orthogonal clique")
    members = {c.root for c in cands} | {w1.components}
    ranking = [tuple(sorted(cands[v].norm_sq for v in cl)) for cl in cliques]
    closed = [
        _orbit_closed(w1, [cands[v].diff for v in cl], members) for cl in cliques
    ]
    return CliqueReport(w1, b, cands, cliques, ranking, closed)


def select_clique(report: CliqueReport, require_closed: bool = True) -> RootSet:
    """Best clique: lexicographic max of ascending squared norms, first on ties.

    With ``require_closed`` only cliques whose codebook stays inside the PM
    set are eligible.
    """
    if not report.cliques:
        raise DesignInfeasible("empty clique report")
    eligible = [
        i for i in range(len(report)) if report.pm_closed[i] or not require_closed
    ]
    if not eligible:
        raise DesignInfeasible("no clique keeps the codebook inside the permutation set")
    best = max(eligible, key=lambda i: report.ranking[i])
    return report.rootset(best)


def find_rootset(
    w1, allow_negation: str | bool = "auto", max_vertices: int = MAX_VERTICES
) -> tuple[RootSet, CliqueReport]:
    """Candidate generation, clique search and selection in one step.

    ``allow_negation="auto"`` turns negation on when the permutation orbit is
    smaller than ``2**b`` or has no size-``b`` clique.
    """
    w1 = _as_w1(w1)
    b = w1.b
    if allow_negation in ("on", True):
        modes = [True]
    elif allow_negation in ("off", False):
        modes = [False]
    elif allow_negation == "auto":
        orbit = len(distinct_permutations(w1))
        modes = [True] if orbit < 2**b else [False, True]
    else:
        raise ValueError(f"bad allow_negation {allow_negation!r}")
    last: DesignInfeasible | None = None
    for neg in modes:
        cands = candidate_differences(w1, allow_negation=neg)
        if neg and not any(c.negated for c in cands) and len(modes) > 1:
            break
        try:
            report = orthogonal_cliques(cands, b, w1, max_vertices)
            return select_clique(report), report
        except DesignInfeasible as exc:
            last = exc
    size = len(distinct_permutations(w1))
    if size < 2**b and sorted(w1.negated()) == sorted(w1):
        raise DesignInfeasible(
            f"too few permutations: {size} < {2**b} and -w1 adds none"
        )
    raise last or DesignInfeasible(f"no size-{b} orthogonal clique")


def reflection_matrix(d: Sequence) -> RatMatrix:
    """``I - 2 d d^T / <d, d>``."""
    nn = dot(d, d)
    if nn == 0:
        raise ValueError("zero vector has no reflection")
    n = len(d)
    return RatMatrix(
        [
            [Fraction(int(i == j)) - Fraction(2) * d[i] * d[j] / nn for j in range(n)]
            for i in range(n)
        ]
    )


def subset_product(gens: Sequence[RatMatrix], mask: int) -> RatMatrix:
    out = RatMatrix.identity(gens[0].rows)
    for i, g in enumerate(gens):
        if (mask >> i) & 1:
            out = mat_mul(out, g)
    return out


def generate_group(gens: Sequence[RatMatrix]) -> ReflectionGroup:
    """All ``2**b`` subset products in binary-counting order (I, O1, O2, O1O2, ...)."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    eye = RatMatrix.identity(gens[0].rows)
    for i, g in enumerate(gens):
        if mat_mul(g, g) != eye:
            raise RelationViolation(f"O{i + 1}^2 != I")
    for i, j in itertools.combinations(range(len(gens)), 2):
        p = mat_mul(gens[i], gens[j])
        if mat_mul(p, p) != eye:
            raise RelationViolation(f"(O{i + 1} O{j + 1})^2 != I")
    elems: list[RatMatrix] = [eye]
    for i, g in enumerate(gens):
        elems += [mat_mul(e, g) for e in elems[: 1 << i]]
    if len(set(elems)) != len(elems):
        raise DegenerateGroup(f"only {len(set(elems))} distinct elements, expected {len(elems)}")
    return ReflectionGroup(gens, tuple(elems))


def build_codebook(w1, g: ReflectionGroup) -> Codebook:
    """Rows ``w1 @ O`` for every group element, in the group's order."""
    comps = w1.components if isinstance(w1, InitialVector) else tuple(w1)
    rows = [vec_mat(comps, e) for e in g.elements]
    if len(set(rows)) != len(rows):
        raise DegenerateCodebook("codewords collide: w1 lies on a mirror")
    return Codebook(RatMatrix(rows), len(g.generators))


def numeric_codebook(w: Sequence[float], g: ReflectionGroup) -> np.ndarray:
    """Floating-point orbit of an arbitrary real initial vector."""
    w = np.asarray(w, dtype=np.float64)
    return np.array([w @ e.to_numpy() for e in g.elements])


def group_from_rootset(rs: RootSet) -> ReflectionGroup:
    return generate_group([reflection_matrix(d) for d in rs.diffs])
