"""Permutation-modulation (Variant I) sets and initial-vector construction."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactla import primitive


@dataclass(frozen=True)
class InitialVector:
    """Balanced integer vector ``w1`` of length ``n = b + 1``."""

    components: tuple[int, ...]

    def __post_init__(self):
        comps = tuple(int(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) < 2:
            raise ValueError("initial vector needs at least two components")
        if sum(comps) != 0:
            raise ValueError(f"initial vector {comps} is not balanced")

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def b(self) -> int:
        return self.n - 1

    @property
    def values(self) -> tuple[int, ...]:
        """Distinct component values, ascending."""
        return tuple(sorted(set(self.components)))

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """Counts of each value in :attr:`values` order."""
        c = Counter(self.components)
        return tuple(c[v] for v in self.values)

    def negated(self) -> "InitialVector":
        return InitialVector(tuple(-c for c in self.components))

    @property
    def norm_sq(self) -> int:
        return sum(c * c for c in self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)


@dataclass(frozen=True)
class PMSet:
    initial: InitialVector
    vectors: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.vectors)


def distinct_permutations(w1: InitialVector | Sequence[int]) -> PMSet:
    """All distinct permutations of ``w1`` in lexicographic order."""
    if not isinstance(w1, InitialVector):
        w1 = InitialVector(tuple(w1))
    vecs = tuple(sorted(set(itertools.permutations(w1.components))))
    return PMSet(w1, vecs)


def pm_cardinality(multiplicities: Sequence[int]) -> int:
    if any(m < 1 for m in multiplicities):
        raise ValueError("multiplicities must be positive")
    out = math.factorial(sum(multiplicities))
    for m in multiplicities:
        out //= math.factorial(m)
    return out


def pairing_order(k: int) -> list[int]:
    """Value slots assigned to multiplicities sorted ascending.

    Smallest multiplicity takes the smallest value, the next the largest,
    the next the second smallest, and so on.
    """
    lo, hi = 0, k - 1
    out = []
    for i in range(k):
        if i % 2 == 0:
            out.append(lo)
            lo += 1
        else:
            out.append(hi)
            hi -= 1
    return out


def initial_vector_from_partition(partition: Sequence[int], b: int) -> InitialVector:
    """Balanced integer initial vector for a partition of ``b + 1``.

    Values are equally spaced, paired with multiplicities by
    :func:`pairing_order`, centred by subtracting the weighted mean, and
    cleared to coprime integers. The sign is fixed so the first component is
    negative.
    """
    parts = [int(p) for p in partition]
    if sum(parts) != b + 1 or any(p < 1 for p in parts):
        raise ValueError(f"{parts} is not a partition of {b + 1}")
    k = len(parts)
    if k == 1:
        raise ValueError("single-part partition gives the zero vector")
    mult = [0] * k
    # stable sort: equal multiplicities keep their original order
    for m, slot in zip(sorted(parts), pairing_order(k)):
        mult[slot] = m
    n = b + 1
    mean = Fraction(sum(i * m for i, m in enumerate(mult)), n)
    values = primitive([Fraction(i) - mean for i in range(k)])
    comps = [v for v, m in zip(values, mult) for _ in range(m)]
    if comps[0] > 0:
        comps = [-c for c in reversed(comps)]
    return InitialVector(tuple(comps))


def pm_min_distance(s: PMSet) -> int:
    """Minimum squared distance of a PM set.

    A PM set is the orbit of ``w1`` under coordinate permutations, so every
    point sees the same distance profile and it suffices to scan from ``w1``.
    """
    if len(s) < 2:
        raise ValueError("need at least two vectors")
    w = s.initial.components
    return min(
        sum((a - c) ** 2 for a, c in zip(w, v)) for v in s.vectors if v != w
    )


def integer_partitions(n: int, max_part: int | None = None):
    """Partitions of ``n`` as non-increasing tuples, largest first part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in integer_partitions(n - k, k):
            yield (k,) + rest
