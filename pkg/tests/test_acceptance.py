"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` (the lines appear in
the terminal summary) or ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

import reference as ref  # noqa: E402
from coxline.analysis import (  # noqa: E402
    alphas,
    eta_for_word_error,
    exact_word_error,
    numeric_alphas,
    union_bound,
)
from coxline.codec import codec_bundle, encode  # noqa: E402
from coxline.coxeter import (  # noqa: E402
    RootSet,
    candidate_differences,
    group_from_rootset,
    numeric_codebook,
    orthogonal_cliques,
)
from coxline.errors import DesignInfeasible  # noqa: E402
from coxline.exactla import RatMatrix, mat_mul  # noqa: E402
from coxline.linecode import design_code, verify_code  # noqa: E402
from coxline.optimizer import enumerate_designs, integer_approximation, optimal_initial_vector  # noqa: E402
from coxline.pmset import distinct_permutations  # noqa: E402
from coxline.sim import SimConfig, simulate  # noqa: E402
from coxline.tables import TABLE  # noqa: E402

RESULTS: list[str] = []


@contextmanager
def criterion(n: int, title: str, budget_s: float):
    notes: list[str] = []
    t0 = time.perf_counter()
    ok = False
    try:
        yield notes
        elapsed = time.perf_counter() - t0
        assert elapsed < budget_s, f"runtime {elapsed:.2f}s exceeds {budget_s}s"
        ok = True
    except AssertionError as exc:
        notes.append(str(exc).splitlines()[0] if str(exc) else "assertion failed")
        raise
    finally:
        elapsed = time.perf_counter() - t0
        extra = ("; " + "; ".join(notes)) if notes else ""
        RESULTS.append(
            f"criterion {n} {'PASS' if ok else 'FAIL'}: {title} [{elapsed:.2f}s / {budget_s:g}s]{extra}"
        )


def _product_rows(code, subsets):
    out = []
    for subset in subsets:
        m = RatMatrix.identity(code.w1.n)
        for i in subset:
            m = m @ code.generators[i]
        out.append(tuple(sum(a * x for a, x in zip(code.w1, col)) for col in m.T))
    return out


def test_criterion_1_exact_fixtures():
    with criterion(1, "worked-example matrices reproduced exactly", 1.0) as notes:
        # b=2: codebook, generators, published M/B/D/K
        c2 = design_code(ref.B2_W1, ref.B2_ROOTS)
        assert c2.generators == (ref.rat(ref.B2_O1), ref.rat(ref.B2_O2))
        assert _product_rows(c2, [(), (0,), (0, 1), (1,)]) == [tuple(r) for r in ref.B2_W]
        assert ref.rows_equal_up_to_sign(c2.M, ref.rat(ref.B2_M))
        W2, M2 = ref.rat(ref.B2_W), ref.rat(ref.B2_M)
        bundle = codec_bundle(W2, M2)
        assert mat_mul(W2, M2.T) == ref.rat(ref.B2_WMT)
        assert bundle.B == ref.rat(ref.B2_B) and bundle.D == RatMatrix.diag(ref.B2_D)
        assert mat_mul(bundle.B, bundle.K) == W2
        assert encode((1, -1), bundle.K) == (-1, 0, 1)
        Mm = ref.rat(ref.B2_M_MOTIVATION)
        assert mat_mul(W2, Mm.T) == ref.rat(ref.B2_WMT_MOTIVATION)
        half_m = RatMatrix([[0, 0, 0], Mm.row(1), Mm.row(2)]).scale(Fraction(1, 2))
        assert codec_bundle(W2, Mm).K == half_m

        # b=3 graded: W in published product order, O1..O3, M, D, K
        c3 = design_code(ref.B3_W1, ref.B3_ROOTS)
        assert c3.generators == tuple(ref.rat(o) for o in ref.B3_O)
        assert _product_rows(c3, ref.B3_PRODUCTS) == [tuple(r) for r in ref.B3_W]
        assert c3.M == ref.rat(ref.B3_M)
        assert c3.D == RatMatrix.diag(ref.B3_D)
        assert c3.K == ref.rat(ref.B3_K)

        # ENRZ: codebook and Hadamard M (row sign/order), K = M on the bit rows
        ce = design_code(ref.ENRZ_W1, ref.ENRZ_ROOTS)
        assert set(ce.codebook.rows()) == set(ref.ENRZ_W)
        H = ref.rat(ref.ENRZ_M)
        assert ref.rows_equal_up_to_sign_and_order(ce.M, H)
        kb = codec_bundle(ce.W, H)
        assert kb.D == RatMatrix.diag((0, 4, 4, 4))
        assert [kb.K.row(i) for i in (1, 2, 3)] == [H.row(i) for i in (1, 2, 3)]

        # b=3 ternary: M exact
        assert design_code(ref.T3_W1, ref.T3_ROOTS).M == ref.rat(ref.T3_M)

        # b=4: M exact, eye pattern (0,2,2,10,2)
        c4 = design_code(ref.B4_W1, ref.B4_ROOTS)
        assert c4.M == ref.rat(ref.B4_M) and c4.D == RatMatrix.diag(ref.B4_EYE)

        # b=5: listed roots give the pattern; the published M up to row sign
        c5 = design_code(ref.B5_W1, ref.B5_ROOTS)
        assert c5.D == RatMatrix.diag(ref.B5_EYE)
        c5m = design_code(ref.B5_W1, [ref.reflect(ref.B5_W1, m) for m in ref.B5_M[1:]])
        assert ref.rows_equal_up_to_sign(c5m.M, ref.rat(ref.B5_M))
        notes.append("row-sign convention: d = w1 - root")


def test_criterion_2_table_alphas():
    with criterion(2, "performance-table alphas match printed values to 2 decimals", 5.0) as notes:
        bad = []
        for e in TABLE:
            got = sorted(round(a, 2) for a in alphas(design_code(e.w1)).alphas)
            want = sorted(e.printed_alphas)
            if got != want:
                bad.append(f"w1={e.w1}: computed {got}, printed {want}")
        notes.extend(bad)
        assert not bad, f"{len(bad)} of {len(TABLE)} rows differ"


def test_criterion_3_structure():
    with criterion(3, "structural invariants on every design, b=1..6", 30.0) as notes:
        count = 0
        for b in range(1, 7):
            for c in enumerate_designs(b):
                if not c.feasible:
                    continue
                verify_code(c.code)
                assert sum(c.profile.alpha_sq) == b
                count += 1
        notes.append(f"{count} codes checked")


def test_criterion_4_oracle():
    with criterion(4, "slicer equals exhaustive ML on every table code", 60.0) as notes:
        total = 0
        for e in TABLE:
            code = design_code(e.w1)
            res = simulate(code, SimConfig((1.0, 4.0), 10_000, seed=2024, oracle=True))
            for p in res.points:
                assert p.oracle_disagreements == 0, f"w1={e.w1} eta={p.eta}"
                total += p.oracle_checked
        notes.append(f"{total} non-tie samples agree")


def test_criterion_5_theory_vs_simulation():
    with criterion(5, "Monte Carlo word error within 3 Wilson sigma of theory", 300.0) as notes:
        codes = {
            "b=1": design_code((-1, 1)),
            "b=2": design_code(ref.B2_W1, ref.B2_ROOTS),
            "ENRZ": design_code(ref.ENRZ_W1, ref.ENRZ_ROOTS),
        }
        worst = 0.0
        for name, code in codes.items():
            prof = alphas(code)
            etas = tuple(eta_for_word_error(prof, p) for p in (2e-3, 8e-3))
            res = simulate(code, SimConfig(etas, 1_000_000, seed=77), prof)
            for p in res.points:
                assert 1e-3 <= p.theory_exact <= 1e-2
                sigma_w = (p.wer_ci[1] - p.wer_ci[0]) / (2 * 1.959963984540054)
                dev = abs(p.wer - p.theory_exact) / sigma_w
                worst = max(worst, dev)
                assert dev <= 3, f"{name} eta={p.eta:.4f}: {dev:.2f} sigma"
                assert union_bound(prof, p.eta) >= p.wer - 3 * sigma_w
        notes.append(f"largest deviation {worst:.2f} sigma")


def test_criterion_6_optimizer():
    with criterion(6, "clique counts, infeasibility, optimal and integer initial vectors", 60.0) as notes:
        w1 = ref.B5_W1
        assert len(distinct_permutations(w1)) == 180
        assert len(orthogonal_cliques(candidate_differences(w1), 5, w1)) == 24
        try:
            design_code((-1, 0, 0, 0, 1))
            raise AssertionError("(-1,0,0,0,1) should be infeasible")
        except DesignInfeasible:
            pass
        rs2 = RootSet.from_roots(ref.B2_W1, ref.B2_ROOTS)
        w = optimal_initial_vector(rs2)
        closed = np.array([0, -1, 1]) / math.sqrt(2) + np.array([-2, 1, 1]) / math.sqrt(6)
        assert np.allclose(w, closed, atol=1e-3) and np.allclose(w, [-0.816, -0.299, 1.115], atol=1e-3)
        W = numeric_codebook(w, group_from_rootset(rs2))
        assert np.allclose(numeric_alphas(W, design_code(ref.B2_W1, ref.B2_ROOTS).M.to_numpy()), 1, atol=1e-9)
        rs3 = RootSet.from_roots(ref.B3_W1, ref.B3_ROOTS)
        approx = integer_approximation(optimal_initial_vector(rs3), 10, rs3)
        assert approx.vector.components == (-6, -1, 1, 6)
        assert approx.max_deviation <= 0.05
        notes.append(f"(-6,-1,1,6) max|alpha-1| = {approx.max_deviation:.6f}")


def test_criterion_7_hypercube_dominance():
    with criterion(7, "hypercube profile beats the graded b=3 profile", 5.0) as notes:
        enrz = alphas(design_code(ref.ENRZ_W1, ref.ENRZ_ROOTS))
        graded = alphas(design_code(ref.B3_W1, ref.B3_ROOTS))
        for eta in (2, 4, 8):
            pe, pg = exact_word_error(enrz, eta), exact_word_error(graded, eta)
            assert pe < pg, f"eta={eta}"
            notes.append(f"eta={eta}: {pe:.3e} < {pg:.3e}")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
