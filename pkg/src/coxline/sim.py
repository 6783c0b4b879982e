"""Monte Carlo AWGN simulation of encode -> noise -> slicer decode.

Trials are cut into fixed-size blocks. Block ``j`` of grid point ``i`` draws
from ``PCG64(SeedSequence(seed, spawn_key=(i, j)))``, so results depend only
on the seed, never on how blocks are spread across workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import binomtest

from . import kernels
from .analysis import (
    PerformanceProfile,
    alphas,
    asymptotic_wer,
    bit_error_rate,
    exact_word_error,
    snr_noise_map,
    union_bound,
)
from .codec import bits_to_mask
from .linecode import LineCode

BLOCK = 1 << 16
SAMPLER = "numpy PCG64 + ziggurat standard_normal; SeedSequence(seed, spawn_key=(point, block))"


@dataclass(frozen=True)
class SimConfig:
    eta_grid: tuple[float, ...]
    trials_per_point: int
    seed: int = 0
    shards: int = 1
    oracle: bool = False
    block_size: int = BLOCK

    def __post_init__(self):
        object.__setattr__(self, "eta_grid", tuple(float(e) for e in self.eta_grid))
        if self.trials_per_point < 1:
            raise ValueError("trials_per_point must be >= 1")
        if any(e <= 0 for e in self.eta_grid):
            raise ValueError("eta values must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


@dataclass(frozen=True)
class SimPoint:
    eta: float
    trials: int
    word_errors: int
    bit_errors: int
    wer: float
    ber: float
    wer_ci: tuple[float, float]
    ber_ci: tuple[float, float]
    theory_exact: float
    theory_ber: float
    z_score: float
    slicer_ties: int = 0
    oracle_checked: int = 0
    oracle_disagreements: int = 0

    @property
    def sigma(self) -> float:
        """Binomial standard deviation of the WER estimate under theory."""
        p = self.theory_exact
        return math.sqrt(p * (1.0 - p) / self.trials)


@dataclass
class SimResult:
    points: list[SimPoint]
    b: int
    seed: int
    metadata: dict = field(default_factory=dict)


@dataclass(frozen=True)
class _Tally:
    word: int = 0
    bit: int = 0
    ties: int = 0
    checked: int = 0
    disagree: int = 0

    def __add__(self, o: "_Tally") -> "_Tally":
        return _Tally(
            self.word + o.word,
            self.bit + o.bit,
            self.ties + o.ties,
            self.checked + o.checked,
            self.disagree + o.disagree,
        )


def wilson_interval(k: int, n: int) -> tuple[float, float]:
    ci = binomtest(k, n).proportion_ci(confidence_level=0.95, method="wilson")
    return float(ci.low), float(ci.high)


class _Channel:
    """Float copies of the code tables used inside the trial loop."""

    def __init__(self, code: LineCode):
        self.W = code.W.to_numpy()
        self.rows = np.ascontiguousarray(code.M.to_numpy()[1:])
        self.tx_masks = np.array([bits_to_mask(r[1:]) for r in code.B], dtype=np.int64)
        self.row_of_mask = np.empty(len(self.tx_masks), dtype=np.int64)
        self.row_of_mask[self.tx_masks] = np.arange(len(self.tx_masks))
        self.n = self.W.shape[1]


def _run_block(ch: _Channel, sigma: float, seed: int, point: int, block: int, size: int, oracle: bool) -> _Tally:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(point, block))))
    tx = rng.integers(0, len(ch.W), size=size)
    y = ch.W[tx] + sigma * rng.standard_normal((size, ch.n))
    y = np.ascontiguousarray(y)
    werr, berr, ties = kernels.slicer_tally(y, ch.rows, ch.tx_masks[tx])
    if not oracle:
        return _Tally(werr, berr, ties)
    masks, _ = kernels.slicer_masks(y, ch.rows)
    ml, ml_tie = kernels.nearest_codeword(y, ch.W)
    ok = ~ml_tie
    disagree = int(np.count_nonzero(ch.row_of_mask[masks][ok] != ml[ok]))
    return _Tally(werr, berr, ties, int(ok.sum()), disagree)


def simulate(code: LineCode, cfg: SimConfig, profile: PerformanceProfile | None = None) -> SimResult:
    """Tally word and bit errors at every grid point."""
    if profile is None:
        profile = alphas(code)
    ch = _Channel(code)
    points = []
    for i, eta in enumerate(cfg.eta_grid):
        sigma = math.sqrt(snr_noise_map(code, eta) / 2.0)
        sizes = [cfg.block_size] * (cfg.trials_per_point // cfg.block_size)
        if cfg.trials_per_point % cfg.block_size:
            sizes.append(cfg.trials_per_point % cfg.block_size)
        jobs = [(ch, sigma, cfg.seed, i, j, s, cfg.oracle) for j, s in enumerate(sizes)]
        if cfg.shards > 1:
            with ThreadPoolExecutor(cfg.shards) as ex:
                tallies = list(ex.map(lambda a: _run_block(*a), jobs))
        else:
            tallies = [_run_block(*a) for a in jobs]
        t = sum(tallies, _Tally())
        n = cfg.trials_per_point
        p = exact_word_error(profile, eta)
        sd = math.sqrt(p * (1.0 - p) / n)
        points.append(
            SimPoint(
                eta=eta,
                trials=n,
                word_errors=t.word,
                bit_errors=t.bit,
                wer=t.word / n,
                ber=t.bit / (n * code.b),
                wer_ci=wilson_interval(t.word, n),
                ber_ci=wilson_interval(t.bit, n * code.b),
                theory_exact=p,
                theory_ber=bit_error_rate(profile, eta),
                z_score=(t.word / n - p) / sd if sd > 0 else 0.0,
                slicer_ties=t.ties,
                oracle_checked=t.checked,
                oracle_disagreements=t.disagree,
            )
        )
    meta = {"sampler": SAMPLER, "backend": kernels.BACKEND, "block_size": cfg.block_size}
    return SimResult(points, code.b, cfg.seed, meta)


@dataclass(frozen=True)
class ComparisonRow:
    eta: float
    measured: float
    sigma: float
    z_score: float
    p_exact: float
    p_union: float
    p_asymptotic: float
    flagged: bool
    union_ok: bool


def compare_theory(result: SimResult, profile: PerformanceProfile) -> list[ComparisonRow]:
    """Measured WER against the exact, union and asymptotic expressions.

    ``flagged`` marks ``|z| > 4``; ``union_ok`` means the union bound is at
    least the measured rate minus three standard deviations.
    """
    out = []
    for pt in result.points:
        pu = union_bound(profile, pt.eta)
        out.append(
            ComparisonRow(
                eta=pt.eta,
                measured=pt.wer,
                sigma=pt.sigma,
                z_score=pt.z_score,
                p_exact=pt.theory_exact,
                p_union=pu,
                p_asymptotic=asymptotic_wer(profile, pt.eta),
                flagged=abs(pt.z_score) > 4,
                union_ok=pu >= pt.wer - 3 * pt.sigma,
            )
        )
    return out
