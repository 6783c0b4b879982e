"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends run on identical inputs and their outputs are compared before
any timing is reported.
"""

import argparse
import time

import numpy as np

from coxline import _pure, kernels
from coxline.coxeter import candidate_differences, orthogonality_graph
from coxline.linecode import design_code


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def clique_cases():
    for w1 in [
        (1, -1, -3, -1, 1, 3),
        (-5, -3, -1, 1, 3, 5),
        (-3, -1, -1, 0, 1, 1, 3),
        (-3, -2, -1, 0, 1, 2, 3),
    ]:
        if sum(w1):
            continue
        cands = candidate_differences(w1)
        yield f"cliques w1={w1} ({len(cands)} vertices)", orthogonality_graph(cands), len(w1) - 1


def slicer_case(n):
    code = design_code((-2, -1, 0, 1, 2))
    rng = np.random.default_rng(0)
    W = code.W.to_numpy()
    tx = rng.integers(0, len(W), n)
    y = np.ascontiguousarray(W[tx] + rng.standard_normal((n, W.shape[1])))
    rows = np.ascontiguousarray(code.M.to_numpy()[1:])
    return y, rows, tx.astype(np.int64), W


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--samples", type=int, default=200_000)
    args = ap.parse_args()
    if kernels.compiled is None:
        raise SystemExit("compiled extension not built; run pip install -e . first")
    ext = kernels.compiled
    rows_out = []

    for label, adj, k in clique_cases():
        tc, rc = best_of(lambda: ext.enumerate_cliques(adj, k), args.repeat)
        tp, rp = best_of(lambda: _pure.enumerate_cliques(adj, k), 1)
        assert np.array_equal(rc, rp), label
        rows_out.append((label, tc, tp))

    y, rows, tx, W = slicer_case(args.samples)
    tc, rc = best_of(lambda: ext.slicer_tally(y, rows, tx), args.repeat)
    tp, rp = best_of(lambda: _pure.slicer_tally(y, rows, tx), args.repeat)
    assert rc == rp
    rows_out.append((f"slicer_tally {args.samples} samples", tc, tp))

    tc, (ic, _) = best_of(lambda: ext.nearest_codeword(y, W), args.repeat)
    tp, (ip, _) = best_of(lambda: _pure.nearest_codeword(y, W), args.repeat)
    assert np.array_equal(ic, ip)
    rows_out.append((f"nearest_codeword {args.samples} samples", tc, tp))

    width = max(len(r[0]) for r in rows_out)
    print(f"{'kernel':<{width}}  {'compiled s':>10}  {'python s':>10}  {'speedup':>8}")
    for label, tc, tp in rows_out:
        print(f"{label:<{width}}  {tc:>10.4f}  {tp:>10.4f}  {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
