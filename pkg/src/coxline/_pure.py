"""Pure Python / numpy versions of the compiled kernels.

Same signatures and results as ``_kernels``; used when the extension is not
built or when ``COXLINE_PURE=1``.
"""

from __future__ import annotations

import numpy as np


def _bitsets(adj: np.ndarray) -> list[int]:
    a = np.ascontiguousarray(adj, dtype=bool).copy()
    np.fill_diagonal(a, False)
    packed = np.packbits(a, axis=1, bitorder="little")
    return [int.from_bytes(r.tobytes(), "little") for r in packed]


def enumerate_cliques(adj, k: int) -> np.ndarray:
    n = len(adj)
    if k < 1 or n < k:
        return np.zeros((0, max(k, 0)), dtype=np.int64)
    nbr = _bitsets(adj)
    out: list[tuple[int, ...]] = []

    def extend(chosen: tuple[int, ...], cand: int) -> None:
        if len(chosen) == k:
            out.append(chosen)
            return
        need = k - len(chosen)
        while cand and cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            extend(chosen + (v,), cand & nbr[v])

    extend((), (1 << n) - 1)
    if not out:
        return np.zeros((0, k), dtype=np.int64)
    return np.array(out, dtype=np.int64)


def slicer_masks(y: np.ndarray, rows: np.ndarray):
    s = y @ rows.T
    weights = np.left_shift(1, np.arange(rows.shape[0], dtype=np.int64))
    masks = ((s < 0) * weights).sum(axis=1).astype(np.int64)
    return masks, int(np.count_nonzero(s == 0))


def slicer_tally(y: np.ndarray, rows: np.ndarray, tx_masks: np.ndarray):
    masks, ties = slicer_masks(y, rows)
    diff = masks ^ tx_masks
    berr = int(np.bitwise_count(diff).sum()) if hasattr(np, "bitwise_count") else int(
        sum(bin(int(x)).count("1") for x in diff[diff != 0])
    )
    return int(np.count_nonzero(diff)), berr, ties


def nearest_codeword(y: np.ndarray, code: np.ndarray, rtol: float = 1e-9):
    d = ((y[:, None, :] - code[None, :, :]) ** 2).sum(axis=2)
    order = np.argsort(d, axis=1, kind="stable")
    idx = order[:, 0].astype(np.int64)
    rows = np.arange(len(y))
    d1 = d[rows, idx]
    if code.shape[0] < 2:
        return idx, np.zeros(len(y), dtype=bool)
    d2 = d[rows, order[:, 1]]
    return idx, (d2 - d1) <= rtol * (1.0 + d1)
