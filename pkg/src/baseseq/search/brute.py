"""Meet-in-the-middle enumeration of BS(n+1, n): an oracle independent of the quad search.

All (A, B) with a_1 = a_{n+1} = b_1 = +1, b_{n+1} = -1 (first quad label 0)
are indexed by their summed autocorrelation vector; all (C, D) are joined
against the negated vectors.  No quad alphabet or pruning is involved.
"""
from __future__ import annotations

import numpy as np

from ..seqcore import BaseQuadruple

MAX_N = 12


def _all_pm(length: int) -> np.ndarray:
    """Every +/-1 row of the given length, as int8 (row k encodes k in binary, bit set = -1)."""
    k = np.arange(1 << length, dtype=np.int64)
    bits = (k[:, None] >> np.arange(length, dtype=np.int64)) & 1
    return (1 - 2 * bits).astype(np.int8)


def _with_ends(length: int, first: int, last: int) -> np.ndarray:
    if length == 1:
        return np.array([[first]], dtype=np.int8) if first == last else np.zeros((0, 1), np.int8)
    inner = _all_pm(length - 2)
    rows = np.empty((inner.shape[0], length), dtype=np.int8)
    rows[:, 0] = first
    rows[:, -1] = last
    rows[:, 1:-1] = inner
    return rows


def _autocorr(rows: np.ndarray, lags: int) -> np.ndarray:
    L = rows.shape[1]
    out = np.zeros((rows.shape[0], lags), dtype=np.int64)
    r = rows.astype(np.int64)
    for s in range(1, lags + 1):
        if s < L:
            out[:, s - 1] = (r[:, : L - s] * r[:, s:]).sum(axis=1)
    return out


def _keys(vectors: np.ndarray, m: int) -> np.ndarray:
    # mixed radix, lag s ranges over [-2(m-s), 2(m-s)]
    key = np.zeros(vectors.shape[0], dtype=np.int64)
    for s in range(1, vectors.shape[1] + 1):
        bound = 2 * (m - s)
        key = key * (2 * bound + 1) + (vectors[:, s - 1] + bound)
    return key


def _pair_keys(acX: np.ndarray, acY: np.ndarray, m: int, sign: int, block: int = 256) -> np.ndarray:
    """Keys of ``sign * (acX[i] + acY[j])`` for all i, j, flattened as i * len(acY) + j."""
    out = np.empty(acX.shape[0] * acY.shape[0], dtype=np.int64)
    ny = acY.shape[0]
    for start in range(0, acX.shape[0], block):
        chunk = acX[start:start + block]
        vec = sign * (chunk[:, None, :] + acY[None, :, :]).reshape(-1, acX.shape[1])
        out[start * ny:(start + chunk.shape[0]) * ny] = _keys(vec, m)
    return out


def brute_force(n: int) -> set[BaseQuadruple]:
    """Every member of BS(n+1, n) whose first (A;B) quad is the label-0 pattern."""
    if n > MAX_N:
        raise ValueError(f"brute_force is limited to n <= {MAX_N}")
    m = n + 1
    if n == 0:
        return {BaseQuadruple((1,), (1,), (), ())}
    A = _with_ends(m, 1, 1)
    B = _with_ends(m, 1, -1)
    C = _all_pm(n)
    D = _all_pm(n)
    lags = n
    acA, acB = _autocorr(A, lags), _autocorr(B, lags)
    acC, acD = _autocorr(C, lags), _autocorr(D, lags)

    ab_key = _pair_keys(acA, acB, m, sign=1)
    cd_key = _pair_keys(acC, acD, m, sign=-1)

    order = np.argsort(ab_key, kind="stable")
    sorted_keys = ab_key[order]
    lo = np.searchsorted(sorted_keys, cd_key, side="left")
    hi = np.searchsorted(sorted_keys, cd_key, side="right")
    counts = hi - lo
    hits = np.flatnonzero(counts)

    out = set()
    nB, nD = B.shape[0], D.shape[0]
    for ci in hits:
        c_idx, d_idx = divmod(int(ci), nD)
        Cs, Ds = tuple(C[c_idx].tolist()), tuple(D[d_idx].tolist())
        for j in order[lo[ci]:hi[ci]]:
            a_idx, b_idx = divmod(int(j), nB)
            out.add(BaseQuadruple(tuple(A[a_idx].tolist()), tuple(B[b_idx].tolist()), Cs, Ds))
    return out
