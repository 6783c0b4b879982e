"""The compiled kernels must agree exactly with the pure-Python fallback."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxline import _pure, kernels
from coxline.linecode import design_code

import reference as ref

needs_ext = pytest.mark.skipif(kernels.compiled is None, reason="extension not built")
BACKENDS = [_pure] + ([kernels.compiled] if kernels.compiled is not None else [])


def brute_cliques(adj, k):
    n = len(adj)
    return [
        c for c in itertools.combinations(range(n), k)
        if all(adj[i, j] for i, j in itertools.combinations(c, 2))
    ]


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 14))
    bits = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    a = np.array(bits, dtype=bool).reshape(n, n)
    a = a | a.T
    np.fill_diagonal(a, False)
    return a


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=60, deadline=None)
@given(graphs(), st.integers(1, 5))
def test_cliques_match_brute_force(impl, adj, k):
    got = [tuple(r) for r in impl.enumerate_cliques(adj, k).tolist()]
    assert got == brute_cliques(adj, k)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_cliques_edge_cases(impl):
    adj = np.zeros((3, 3), dtype=bool)
    assert impl.enumerate_cliques(adj, 4).shape == (0, 4)
    assert impl.enumerate_cliques(adj, 1).tolist() == [[0], [1], [2]]
    assert impl.enumerate_cliques(adj, 2).shape == (0, 2)


def test_cliques_wider_than_one_word():
    rng = np.random.default_rng(7)
    a = rng.random((150, 150)) < 0.3
    a = a | a.T
    np.fill_diagonal(a, False)
    ref_ = _pure.enumerate_cliques(a, 4)
    assert np.array_equal(kernels.enumerate_cliques(a, 4), ref_)


def _noisy(code, n, sigma, seed):
    rng = np.random.default_rng(seed)
    W = code.W.to_numpy()
    tx = rng.integers(0, len(W), n)
    return W, tx, np.ascontiguousarray(W[tx] + sigma * rng.standard_normal((n, W.shape[1])))


@needs_ext
@pytest.mark.parametrize("w1,roots", [(ref.B3_W1, ref.B3_ROOTS), (ref.B4_W1, ref.B4_ROOTS)])
def test_slicer_kernels_agree(w1, roots):
    code = design_code(w1, roots)
    W, tx, y = _noisy(code, 5000, 1.5, 1)
    rows = np.ascontiguousarray(code.M.to_numpy()[1:])
    tx_masks = np.arange(len(W), dtype=np.int64)[tx]
    m1, t1 = kernels.compiled.slicer_masks(y, rows)
    m2, t2 = _pure.slicer_masks(y, rows)
    assert np.array_equal(m1, m2) and t1 == t2
    assert kernels.compiled.slicer_tally(y, rows, tx_masks) == _pure.slicer_tally(y, rows, tx_masks)


@needs_ext
def test_nearest_codeword_agrees():
    code = design_code(ref.ENRZ_W1, ref.ENRZ_ROOTS)
    W, _, y = _noisy(code, 4000, 2.0, 2)
    i1, t1 = kernels.compiled.nearest_codeword(y, W)
    i2, t2 = _pure.nearest_codeword(y, W)
    ok = ~(t1 | t2)
    assert np.array_equal(i1[ok], i2[ok])
    assert np.array_equal(t1, t2)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_exact_ties_reported(impl):
    code = design_code(ref.B2_W1, ref.B2_ROOTS)
    W = code.W.to_numpy()
    rows = np.ascontiguousarray(code.M.to_numpy()[1:])
    y = np.zeros((1, 3))
    masks, ties = impl.slicer_masks(y, rows)
    assert masks.tolist() == [0] and ties == 2
    idx, tie = impl.nearest_codeword(y, W)
    assert tie.tolist() == [True]


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    assert (kernels.BACKEND == "cython") == (kernels.compiled is not None)
