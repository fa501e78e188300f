"""Compiled hot path of the quad-by-quad backtracking search.

All state lives in caller-owned int64 arrays so a run can stop (solution
found, node budget spent) and resume exactly where it left off:

    seq[4, m]   entries of A, B, C, D (0 = not yet placed)
    R[m]        R[s] = sum of products at lag s >= 1 over placed position pairs (R[0] unused)
    P[4, K, 2]  real/imaginary parts of each sequence evaluated at K frequencies
                (placed entries only); K = 0 disables the spectral bound
    choice[L]   index into allowed[d] of the label placed at level d (-1 = none)
    st[0]       current depth
"""
from __future__ import annotations

import numpy as np
from numba import njit, uint64

from ..codec import COLUMNS, QUADS

QUAD_VALUES = np.array([QUADS[k] for k in range(9)], dtype=np.int64)
COLUMN_VALUES = np.array([COLUMNS[k] for k in range(4)], dtype=np.int64)

EXHAUSTED = 0
FOUND = 1
BUDGET = 2


@njit(cache=True)
def _band(seq, R, x, y, p1, p2, a1, a2, b1, b2, m):
    # products of new entries at p1 < p2 (rows x, y) with the filled band [0, p1) and (p2, m);
    # unsigned indices skip the negative-index wraparound test
    for q in range(p1):
        u = seq[x, uint64(q)]
        w = seq[y, uint64(q)]
        R[uint64(p1 - q)] += a1 * u + b1 * w
        R[uint64(p2 - q)] += a2 * u + b2 * w
    for q in range(p2 + 1, m):
        u = seq[x, uint64(q)]
        w = seq[y, uint64(q)]
        R[uint64(q - p1)] += a1 * u + b1 * w
        R[uint64(q - p2)] += a2 * u + b2 * w


@njit(cache=True)
def _column(seq, R, x, y, p, a, b, m):
    for q in range(p):
        R[uint64(p - q)] += a * seq[x, uint64(q)] + b * seq[y, uint64(q)]
    for q in range(p + 1, m):
        R[uint64(q - p)] += a * seq[x, uint64(q)] + b * seq[y, uint64(q)]


@njit(cache=True)
def _spectral(P, x, y, p1, p2, a1, a2, b1, b2, cos_t, sin_t):
    for j in range(P.shape[1]):
        c1 = cos_t[j, p1]
        c2 = cos_t[j, p2]
        s1 = sin_t[j, p1]
        s2 = sin_t[j, p2]
        P[x, j, 0] += a1 * c1 + a2 * c2
        P[x, j, 1] += a1 * s1 + a2 * s2
        P[y, j, 0] += b1 * c1 + b2 * c2
        P[y, j, 1] += b1 * s1 + b2 * s2


@njit(cache=True)
def place(seq, R, P, d, label, lev_pair, lev_kind, lev_p1, lev_p2, qv, cv, cos_t, sin_t):
    """Place the label of level d.  Levels are always placed outside-in, so
    before level d the filled part of its rows is the band outside [p1, p2]."""
    m = seq.shape[1]
    x = 2 * lev_pair[d]
    y = x + 1
    p1 = lev_p1[d]
    if lev_kind[d] == 0:
        p2 = lev_p2[d]
        a1 = qv[label, 0]
        a2 = qv[label, 1]
        b1 = qv[label, 2]
        b2 = qv[label, 3]
        _band(seq, R, x, y, p1, p2, a1, a2, b1, b2, m)
        R[p2 - p1] += a1 * a2 + b1 * b2
        _spectral(P, x, y, p1, p2, a1, a2, b1, b2, cos_t, sin_t)
        seq[x, p1] = a1
        seq[x, p2] = a2
        seq[y, p1] = b1
        seq[y, p2] = b2
    else:
        a = cv[label, 0]
        b = cv[label, 1]
        _column(seq, R, x, y, p1, a, b, m)
        _spectral(P, x, y, p1, p1, a, 0, b, 0, cos_t, sin_t)
        seq[x, p1] = a
        seq[y, p1] = b


@njit(cache=True)
def unplace(seq, R, P, d, lev_pair, lev_kind, lev_p1, lev_p2, cos_t, sin_t):
    m = seq.shape[1]
    x = 2 * lev_pair[d]
    y = x + 1
    p1 = lev_p1[d]
    if lev_kind[d] == 0:
        p2 = lev_p2[d]
        a1 = seq[x, p1]
        a2 = seq[x, p2]
        b1 = seq[y, p1]
        b2 = seq[y, p2]
        seq[x, p1] = 0
        seq[x, p2] = 0
        seq[y, p1] = 0
        seq[y, p2] = 0
        _band(seq, R, x, y, p1, p2, -a1, -a2, -b1, -b2, m)
        R[p2 - p1] -= a1 * a2 + b1 * b2
        _spectral(P, x, y, p1, p2, -a1, -a2, -b1, -b2, cos_t, sin_t)
    else:
        a = seq[x, p1]
        b = seq[y, p1]
        seq[x, p1] = 0
        seq[y, p1] = 0
        _column(seq, R, x, y, p1, -a, -b, m)
        _spectral(P, x, y, p1, p1, -a, 0, -b, 0, cos_t, sin_t)


@njit(cache=True)
def spectral_ok(P, unknown, d, energy):
    """At every frequency the four moduli must fit in the total energy 2(m+n).

    |X(w)| >= |placed part| - (number of unplaced entries of X).
    """
    for j in range(P.shape[1]):
        tot = 0.0
        for row in range(4):
            re = P[row, j, 0]
            im = P[row, j, 1]
            mod2 = re * re + im * im
            u = unknown[d, row]
            if mod2 > u * u:
                gap = np.sqrt(mod2) - u
                tot += gap * gap
        if tot > energy:
            return False
    return True


@njit(cache=True)
def check(R, limit, d):
    # large lags are decided first and fail most often
    for s in range(R.shape[0] - 1, 0, -1):
        r = R[uint64(s)]
        if r < 0:
            r = -r
        if r > limit[d, uint64(s)]:
            return False
    return True


@njit(cache=True)
def recompute(seq):
    m = seq.shape[1]
    R = np.zeros(m, dtype=np.int64)
    for row in range(4):
        for s in range(1, m):
            acc = 0
            for i in range(m - s):
                acc += seq[row, i] * seq[row, i + s]
            R[s] += acc
    return R


@njit(cache=True)
def dfs(seq, R, P, choice, st, lev_pair, lev_kind, lev_p1, lev_p2, allowed, nallowed, limit,
        qv, cv, cos_t, sin_t, unknown, energy, stop, budget):
    """Advance the depth-first search; returns (status, nodes visited).

    The body repeats the arithmetic of place/unplace/check/spectral_ok by hand:
    calls into helpers taking arrays cost about half the throughput here.
    A column level is handled as a quad with p2 = p1 and zero second values.
    """
    depth = st[0]
    nodes = 0
    m = seq.shape[1]
    nfreq = P.shape[1]
    while True:
        if depth < 0:
            st[0] = depth
            return EXHAUSTED, nodes
        c = choice[depth]
        x = 2 * lev_pair[depth]
        y = x + 1
        p1 = lev_p1[depth]
        quad = lev_kind[depth] == 0
        p2 = lev_p2[depth] if quad else p1
        if c >= 0:
            a1 = -seq[x, p1]
            b1 = -seq[y, p1]
            seq[x, p1] = 0
            seq[y, p1] = 0
            if quad:
                a2 = -seq[x, p2]
                b2 = -seq[y, p2]
                seq[x, p2] = 0
                seq[y, p2] = 0
                R[p2 - p1] -= a1 * a2 + b1 * b2
            else:
                a2 = 0
                b2 = 0
            for q in range(p1):
                u = seq[x, uint64(q)]
                w = seq[y, uint64(q)]
                R[uint64(p1 - q)] += a1 * u + b1 * w
                R[uint64(p2 - q)] += a2 * u + b2 * w
            for q in range(p2 + 1, m):
                u = seq[x, uint64(q)]
                w = seq[y, uint64(q)]
                R[uint64(q - p1)] += a1 * u + b1 * w
                R[uint64(q - p2)] += a2 * u + b2 * w
            for j in range(nfreq):
                P[x, j, 0] += a1 * cos_t[j, p1] + a2 * cos_t[j, p2]
                P[x, j, 1] += a1 * sin_t[j, p1] + a2 * sin_t[j, p2]
                P[y, j, 0] += b1 * cos_t[j, p1] + b2 * cos_t[j, p2]
                P[y, j, 1] += b1 * sin_t[j, p1] + b2 * sin_t[j, p2]
        c += 1
        if c >= nallowed[depth]:
            choice[depth] = -1
            depth -= 1
            continue
        choice[depth] = c
        label = allowed[depth, c]
        if quad:
            a1 = qv[label, 0]
            a2 = qv[label, 1]
            b1 = qv[label, 2]
            b2 = qv[label, 3]
            R[p2 - p1] += a1 * a2 + b1 * b2
        else:
            a1 = cv[label, 0]
            b1 = cv[label, 1]
            a2 = 0
            b2 = 0
        for q in range(p1):
            u = seq[x, uint64(q)]
            w = seq[y, uint64(q)]
            R[uint64(p1 - q)] += a1 * u + b1 * w
            R[uint64(p2 - q)] += a2 * u + b2 * w
        for q in range(p2 + 1, m):
            u = seq[x, uint64(q)]
            w = seq[y, uint64(q)]
            R[uint64(q - p1)] += a1 * u + b1 * w
            R[uint64(q - p2)] += a2 * u + b2 * w
        for j in range(nfreq):
            P[x, j, 0] += a1 * cos_t[j, p1] + a2 * cos_t[j, p2]
            P[x, j, 1] += a1 * sin_t[j, p1] + a2 * sin_t[j, p2]
            P[y, j, 0] += b1 * cos_t[j, p1] + b2 * cos_t[j, p2]
            P[y, j, 1] += b1 * sin_t[j, p1] + b2 * sin_t[j, p2]
        seq[x, p1] = a1
        seq[y, p1] = b1
        if quad:
            seq[x, p2] = a2
            seq[y, p2] = b2
        nodes += 1
        ok = True
        for s in range(m - 1, 0, -1):
            r = R[uint64(s)]
            if r < 0:
                r = -r
            if r > limit[depth, uint64(s)]:
                ok = False
                break
        if not ok:
            continue
        if nfreq > 0:
            for j in range(nfreq):
                tot = 0.0
                for row in range(4):
                    re = P[row, j, 0]
                    im = P[row, j, 1]
                    mod2 = re * re + im * im
                    uu = unknown[depth, row]
                    if mod2 > uu * uu:
                        gap = np.sqrt(mod2) - uu
                        tot += gap * gap
                if tot > energy:
                    ok = False
                    break
            if not ok:
                continue
        if depth == stop - 1:
            st[0] = depth
            return FOUND, nodes
        depth += 1
        choice[depth] = -1
        if nodes >= budget:
            st[0] = depth
            return BUDGET, nodes


@njit(cache=True)
def collect(seq, R, P, choice, st, lev_pair, lev_kind, lev_p1, lev_p2, allowed, nallowed, limit,
            qv, cv, cos_t, sin_t, unknown, energy, stop, out):
    """Write the labels of successive leaves at depth ``stop`` into rows of ``out``.

    Returns (rows written, nodes, status); status is BUDGET when ``out`` filled up.
    """
    count = 0
    nodes = 0
    while count < out.shape[0]:
        status, k = dfs(seq, R, P, choice, st, lev_pair, lev_kind, lev_p1, lev_p2, allowed,
                        nallowed, limit, qv, cv, cos_t, sin_t, unknown, energy, stop, 1 << 62)
        nodes += k
        if status == EXHAUSTED:
            return count, nodes, EXHAUSTED
        for d in range(stop):
            out[count, d] = allowed[d, choice[d]]
        count += 1
    return count, nodes, BUDGET
