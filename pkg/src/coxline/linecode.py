"""The complete design bundle and its invariant checker."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .codec import CodecBundle, DetectionMatrix, codec_bundle, detection_matrix
from .coxeter import (
    MAX_VERTICES,
    Codebook,
    CliqueReport,
    ReflectionGroup,
    RootSet,
    build_codebook,
    find_rootset,
    group_from_rootset,
)
from .exactla import RatMatrix, mat_mul
from .pmset import InitialVector


class InvariantViolation(AssertionError):
    """A generated code failed one of its structural checks."""


@dataclass(frozen=True)
class LineCode:
    rootset: RootSet
    group: ReflectionGroup
    codebook: Codebook
    detection: DetectionMatrix
    bundle: CodecBundle

    @property
    def w1(self) -> InitialVector:
        return self.rootset.w1

    @property
    def b(self) -> int:
        return self.rootset.b

    @property
    def W(self) -> RatMatrix:
        return self.codebook.W

    @property
    def M(self) -> RatMatrix:
        return self.detection.M

    @property
    def B(self) -> RatMatrix:
        return self.bundle.B

    @property
    def D(self) -> RatMatrix:
        return self.bundle.D

    @property
    def K(self) -> RatMatrix:
        return self.bundle.K

    @property
    def generators(self) -> tuple[RatMatrix, ...]:
        return self.group.generators


def code_from_rootset(rs: RootSet) -> LineCode:
    group = group_from_rootset(rs)
    cb = build_codebook(rs.w1, group)
    det = detection_matrix(rs)
    return LineCode(rs, group, cb, det, codec_bundle(cb, det))


def design_code(
    w1: Sequence[int] | InitialVector,
    roots: Sequence[Sequence[int]] | None = None,
    allow_negation: str | bool = "auto",
) -> LineCode:
    """Build a code from ``w1``; roots are searched for unless given."""
    code, _ = design_with_report(w1, roots, allow_negation)
    return code


def design_with_report(
    w1, roots=None, allow_negation="auto", max_vertices: int = MAX_VERTICES
) -> tuple[LineCode, CliqueReport | None]:
    if not isinstance(w1, InitialVector):
        w1 = InitialVector(tuple(w1))
    if roots is not None:
        return code_from_rootset(RootSet.from_roots(w1, roots)), None
    rs, report = find_rootset(w1, allow_negation, max_vertices)
    return code_from_rootset(rs), report


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise InvariantViolation(what)


def verify_code(code: LineCode) -> None:
    """Re-check every structural property of a code; raises InvariantViolation."""
    b, n = code.b, code.w1.n
    eye = RatMatrix.identity(n)
    gens = code.generators
    for i, g in enumerate(gens):
        _check(g.is_symmetric(), f"O{i + 1} not symmetric")
        _check(mat_mul(g, g) == eye, f"O{i + 1}^2 != I")
        _check(mat_mul(g, g.T) == eye, f"O{i + 1} not orthogonal")
    for i, j in itertools.combinations(range(b), 2):
        p = mat_mul(gens[i], gens[j])
        _check(mat_mul(p, p) == eye, f"(O{i + 1}O{j + 1})^2 != I")
    _check(len(set(code.group.elements)) == 2**b, "group order != 2^b")

    rows = code.codebook.rows()
    _check(len(rows) == 2**b and len(set(rows)) == 2**b, "codewords not distinct")
    e1 = code.w1.norm_sq
    ms, msn = sorted(code.w1), sorted(-x for x in code.w1)
    rowset = set(rows)
    for r in rows:
        _check(sum(r) == 0, f"row {r} unbalanced")
        _check(sum(x * x for x in r) == e1, f"row {r} energy differs")
        _check(tuple(-x for x in r) in rowset, f"-{r} missing")
        _check(sorted(r) in (ms, msn), f"row {r} not a permutation of +/-w1")

    for i, d in enumerate(code.rootset.diffs):
        w = tuple(a - c for a, c in zip(code.w1, d))
        img = tuple(sum(g * x for g, x in zip(gr, code.w1)) for gr in gens[i])
        _check(img == w, f"O{i + 1} w1 != root {i + 1}")

    MMt = mat_mul(code.M, code.M.T)
    _check(MMt.is_diagonal(), "M M^T not diagonal")
    _check(MMt[0, 0] == n, "first row of M is not all-ones")

    _check(mat_mul(code.W, code.M.T) == mat_mul(code.B, code.D), "W M^T != B D")
    _check(all(code.B[i, 0] == 0 for i in range(code.B.rows)), "B first column nonzero")
    patterns = {tuple(r[1:]) for r in code.B}
    _check(
        patterns == set(itertools.product((-1, 1), repeat=b)),
        "B does not cover all sign patterns",
    )
    _check(mat_mul(code.B, code.K) == code.W, "B K != W")
