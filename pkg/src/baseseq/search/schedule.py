"""Placement order of quads and central columns, and per-level residual limits."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..codec import COLUMNS, QUADS, CodePair

AB, CD = 0, 1
QUAD, COLUMN = 0, 1
_BIG = 1 << 30


@dataclass(frozen=True)
class Level:
    pair: int  # AB or CD
    kind: int  # QUAD or COLUMN
    index: int  # 1-based quad number (for columns: number of quads + 1)
    p1: int  # 0-based positions
    p2: int  # -1 for a column

    @property
    def positions(self) -> tuple[int, ...]:
        return (self.p1,) if self.kind == COLUMN else (self.p1, self.p2)


def _quad(pair: int, length: int, i: int) -> Level:
    return Level(pair, QUAD, i, i - 1, length - i)


def _column(pair: int, length: int) -> Level:
    return Level(pair, COLUMN, length // 2 + 1, length // 2, -1)


def build_levels(n: int) -> list[Level]:
    """AB quad 1, then (AB quad k, CD quad k-1) for k = 2, 3, ..., then the leftovers.

    The leftovers are the AB central column and last CD quad (n even) or
    the CD central column (n odd), in that order.
    """
    m = n + 1
    ka, kc = m // 2, n // 2
    levels: list[Level] = []
    if ka >= 1:
        levels.append(_quad(AB, m, 1))
    for k in range(2, ka + 1):
        levels.append(_quad(AB, m, k))
        if k - 1 <= kc:
            levels.append(_quad(CD, n, k - 1))
    if m % 2:
        levels.append(_column(AB, m))
    for k in range(ka, kc + 1):
        if k >= 1:
            levels.append(_quad(CD, n, k))
    if n % 2:
        levels.append(_column(CD, n))
    return levels


@dataclass
class Schedule:
    n: int

    @property
    def m(self) -> int:
        return self.n + 1

    @cached_property
    def levels(self) -> list[Level]:
        return build_levels(self.n)

    def __len__(self) -> int:
        return len(self.levels)

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        lv = self.levels
        return (
            np.array([x.pair for x in lv], dtype=np.int64),
            np.array([x.kind for x in lv], dtype=np.int64),
            np.array([x.p1 for x in lv], dtype=np.int64),
            np.array([x.p2 for x in lv], dtype=np.int64),
        )

    def ab_quads(self) -> int:
        return sum(1 for x in self.levels if x.pair == AB and x.kind == QUAD)

    def level_count(self, ab_quads: int, cd_quads: int) -> int:
        """Number of leading levels covering the first ``ab_quads`` AB and ``cd_quads`` CD quads."""
        ab = cd = 0
        for d, x in enumerate(self.levels):
            if x.kind == QUAD:
                ab += x.pair == AB
                cd += x.pair == CD
            if ab == ab_quads and cd == cd_quads:
                return d + 1
        raise ValueError(f"n={self.n} has no prefix with {ab_quads} AB and {cd_quads} CD quads")

    @cached_property
    def undetermined(self) -> np.ndarray:
        """U[d, s]: lag-s products with an unplaced factor after levels 0..d are placed."""
        m, n = self.m, self.n
        lengths = (m, m, n, n)
        filled = [np.zeros(L, dtype=bool) for L in lengths]
        U = np.zeros((len(self.levels), m), dtype=np.int64)
        for d, lev in enumerate(self.levels):
            for row in (2 * lev.pair, 2 * lev.pair + 1):
                for p in lev.positions:
                    filled[row][p] = True
            for s in range(1, m):
                total = 0
                for row, L in enumerate(lengths):
                    if s < L:
                        f = filled[row]
                        total += int(np.count_nonzero(~(f[: L - s] & f[s:])))
                U[d, s] = total
        return U

    @cached_property
    def unknown(self) -> np.ndarray:
        """unknown[d, row]: entries of each sequence still unplaced after level d."""
        left = np.array([self.m, self.m, self.n, self.n], dtype=np.float64)
        out = np.zeros((len(self.levels), 4), dtype=np.float64)
        for d, lev in enumerate(self.levels):
            for row in (2 * lev.pair, 2 * lev.pair + 1):
                left[row] -= len(lev.positions)
            out[d] = left
        return out

    def spectral_tables(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        """cos/sin of p * w_j for k frequencies w_j = pi * j / (k - 1), j = 0..k-1."""
        if k == 0:
            z = np.zeros((0, self.m), dtype=np.float64)
            return z, z.copy()
        w = np.pi * np.arange(k) / max(k - 1, 1)
        arg = w[:, None] * np.arange(self.m)[None, :]
        return np.cos(arg), np.sin(arg)

    def limits(self, prune: str) -> np.ndarray:
        """Residual bound per level: exact zero on decided lags; |R| <= U elsewhere ("bound")."""
        U = self.undetermined
        if prune in ("bound", "spectral"):
            return U.copy()
        if prune == "decided":
            return np.where(U == 0, 0, _BIG).astype(np.int64)
        raise ValueError(f"unknown prune mode {prune!r}")

    def default_allowed(self) -> list[list[int]]:
        out = []
        for d, lev in enumerate(self.levels):
            if lev.kind == COLUMN:
                labels = [0] if (self.n == 0 and lev.pair == AB) else [0, 1, 2, 3]
            elif lev.pair == AB and lev.index == 1:
                labels = [0]
            else:
                labels = list(range(1, 9))
            out.append(labels)
        return out

    def restricted_allowed(self, kind: str | None) -> list[list[int]]:
        """Allowed labels when B is tied to A: ``normal`` (b_i = a_i) or ``near-normal``."""
        allowed = self.default_allowed()
        if kind is None:
            return allowed
        n = self.n
        if kind == "normal":
            sign = lambda p: 1  # noqa: E731
        elif kind == "near-normal":
            sign = lambda p: 1 if p % 2 == 0 else -1  # noqa: E731  (0-based p)
        else:
            raise ValueError(f"unknown restriction {kind!r}")
        for d, lev in enumerate(self.levels):
            if lev.pair != AB:
                continue
            keep = []
            for label in allowed[d]:
                if lev.kind == QUAD:
                    tl, tr, bl, br = QUADS[label]
                    pairs = [(lev.p1, tl, bl), (lev.p2, tr, br)]
                else:
                    top, bot = COLUMNS[label]
                    pairs = [(lev.p1, top, bot)]
                # only indices 1..n (0-based < n) are tied
                if all(p >= n or b == sign(p) * a for p, a, b in pairs):
                    keep.append(label)
            allowed[d] = keep
        return allowed

    def code_from_labels(self, labels) -> CodePair:
        ab = [str(l) for lev, l in zip(self.levels, labels) if lev.pair == AB]
        cd = [str(l) for lev, l in zip(self.levels, labels) if lev.pair == CD]
        return CodePair("".join(ab), "".join(cd), self.n)

    def labels_from_code(self, code: CodePair) -> list[int]:
        ab = iter(code.ab_code)
        cd = iter(code.cd_code)
        return [int(next(ab) if lev.pair == AB else next(cd)) for lev in self.levels]
