"""Depth-first enumeration of BS(n+1, n) over quad labels."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .. import codec
from ..bsq import canonicalize
from ..errors import NearNormalParity
from ..seqcore import BaseQuadruple, alternate
from . import kernel
from .cases import CaseSpec, case_table
from .schedule import Schedule

log = logging.getLogger(__name__)

PRUNE_MODES = ("bound", "decided", "spectral")
DEFAULT_PRUNE = "spectral"
SPECTRAL_FREQUENCIES = 17
# rounding slack for the floating-point spectral test
_SLACK = 1e-6
DEFAULT_BUDGET = 1 << 22


class SearchState:
    """A partial assignment of quad labels with incrementally maintained residuals."""

    def __init__(self, n: int, schedule: Schedule | None = None):
        self.schedule = schedule or Schedule(n)
        self.n = n
        m = n + 1
        self.seq = np.zeros((4, m), dtype=np.int64)
        self.R = np.zeros(m, dtype=np.int64)
        self.P = np.zeros((4, 0, 2), dtype=np.float64)
        self._trig = self.schedule.spectral_tables(0)
        self.labels: list[int] = []
        self._lev = self.schedule.arrays

    @property
    def depth(self) -> int:
        return len(self.labels)

    def place(self, label: int) -> None:
        d = len(self.labels)
        kernel.place(self.seq, self.R, self.P, d, label, *self._lev, kernel.QUAD_VALUES,
                     kernel.COLUMN_VALUES, *self._trig)
        self.labels.append(label)

    def retract(self) -> int:
        d = len(self.labels) - 1
        kernel.unplace(self.seq, self.R, self.P, d, *self._lev, *self._trig)
        return self.labels.pop()

    def residuals(self) -> np.ndarray:
        return self.R.copy()

    def recomputed(self) -> np.ndarray:
        return kernel.recompute(self.seq)

    def decided_lags(self) -> list[int]:
        if not self.labels:
            return []
        U = self.schedule.undetermined[len(self.labels) - 1]
        return [s for s in range(1, self.n + 1) if U[s] == 0]

    def consistent(self) -> bool:
        return all(self.R[s] == 0 for s in self.decided_lags())


@dataclass
class SearchStats:
    nodes: int = 0
    emitted: int = 0
    elapsed: float = 0.0


def _allowed_array(allowed: list[list[int]]) -> tuple[np.ndarray, np.ndarray]:
    arr = np.zeros((len(allowed), 9), dtype=np.int64)
    cnt = np.zeros(len(allowed), dtype=np.int64)
    for d, labels in enumerate(allowed):
        arr[d, : len(labels)] = labels
        cnt[d] = len(labels)
    return arr, cnt


def prefix_labels(prefix) -> tuple[list[int], list[int]] | None:
    """(AB quad labels, CD quad labels) of a CaseSpec, SegmentRow, CodePair-like or tuple."""
    if prefix is None:
        return None
    if hasattr(prefix, "ab") and hasattr(prefix, "cd"):
        return list(prefix.ab), list(prefix.cd)
    ab, cd = prefix
    return list(ab), list(cd)


def _apply_prefix(schedule: Schedule, allowed: list[list[int]], prefix) -> list[list[int]] | None:
    """Force the leading levels to the prefix labels; None if the prefix is not allowed."""
    labels = prefix_labels(prefix)
    if labels is None:
        return allowed
    ab, cd = labels
    count = schedule.level_count(len(ab), len(cd))
    ab_it, cd_it = iter(ab), iter(cd)
    out = [list(a) for a in allowed]
    for d in range(count):
        lev = schedule.levels[d]
        label = next(ab_it) if lev.pair == 0 else next(cd_it)
        if label not in out[d]:
            return None
        out[d] = [label]
    return out


class Runner:
    """Resumable DFS over one unit of work (a prefix, or the whole tree)."""

    def __init__(self, n: int, prefix=None, prune: str = DEFAULT_PRUNE, restrict: str | None = None,
                 stop: int | None = None, schedule: Schedule | None = None):
        if prune not in PRUNE_MODES:
            raise ValueError(f"prune must be one of {PRUNE_MODES}")
        self.n = n
        self.schedule = schedule or Schedule(n)
        allowed = _apply_prefix(self.schedule, self.schedule.restricted_allowed(restrict), prefix)
        L = len(self.schedule)
        self.stop = L if stop is None else stop
        self.dead = allowed is None or L == 0
        if allowed is None:
            allowed = self.schedule.default_allowed()
        self.allowed, self.nallowed = _allowed_array(allowed)
        self.limit = self.schedule.limits(prune)
        self.seq = np.zeros((4, n + 1), dtype=np.int64)
        self.R = np.zeros(n + 1, dtype=np.int64)
        k = SPECTRAL_FREQUENCIES if prune == "spectral" else 0
        self.P = np.zeros((4, k, 2), dtype=np.float64)
        self.trig = self.schedule.spectral_tables(k)
        self.unknown = self.schedule.unknown
        self.energy = 2.0 * (2 * n + 1) + _SLACK
        self.choice = np.full(max(L, 1), -1, dtype=np.int64)
        self.st = np.zeros(1, dtype=np.int64)
        self.stats = SearchStats()

    def labels(self) -> list[int]:
        return [int(self.allowed[d, self.choice[d]]) for d in range(self.stop)]

    def step(self, budget: int = DEFAULT_BUDGET) -> int:
        if self.dead:
            return kernel.EXHAUSTED
        lev = self.schedule.arrays
        status, nodes = kernel.dfs(self.seq, self.R, self.P, self.choice, self.st, *lev, self.allowed,
                                   self.nallowed, self.limit, kernel.QUAD_VALUES, kernel.COLUMN_VALUES,
                                   *self.trig, self.unknown, self.energy, self.stop, budget)
        self.stats.nodes += int(nodes)
        if status == kernel.EXHAUSTED:
            self.dead = True
        return int(status)

    def collect(self, chunk: int = 1 << 16) -> np.ndarray:
        """Labels of every remaining leaf as an int8 array of shape (leaves, stop)."""
        parts = []
        lev = self.schedule.arrays
        t0 = time.perf_counter()
        while not self.dead:
            out = np.empty((chunk, self.stop), dtype=np.int8)
            count, nodes, status = kernel.collect(
                self.seq, self.R, self.P, self.choice, self.st, *lev, self.allowed, self.nallowed,
                self.limit, kernel.QUAD_VALUES, kernel.COLUMN_VALUES, *self.trig, self.unknown,
                self.energy, self.stop, out)
            self.stats.nodes += int(nodes)
            self.stats.emitted += int(count)
            parts.append(out[:count])
            if status == kernel.EXHAUSTED:
                self.dead = True
        self.stats.elapsed += time.perf_counter() - t0
        if not parts:
            return np.empty((0, self.stop), dtype=np.int8)
        return np.concatenate(parts)

    def __iter__(self) -> Iterator[list[int]]:
        """Yield label lists of every accepted leaf, in deterministic order."""
        t0 = time.perf_counter()
        while True:
            status = self.step()
            if status == kernel.FOUND:
                self.stats.emitted += 1
                yield self.labels()
            elif status == kernel.EXHAUSTED:
                break
        self.stats.elapsed += time.perf_counter() - t0


def search_codes(n: int, prefix=None, prune: str = DEFAULT_PRUNE, restrict: str | None = None,
                 stats: SearchStats | None = None) -> Iterator[codec.CodePair]:
    """Every member of BS(n+1, n) (first quad 0, quads in the 1..8 alphabet) extending ``prefix``."""
    run = Runner(n, prefix, prune, restrict)
    for labels in run:
        yield run.schedule.code_from_labels(labels)
    if stats is not None:
        stats.nodes += run.stats.nodes
        stats.emitted += run.stats.emitted
        stats.elapsed += run.stats.elapsed


def search_case(n: int, prefix=None, mode: str = DEFAULT_PRUNE, restrict: str | None = None
                ) -> Iterator[BaseQuadruple]:
    for code in search_codes(n, prefix, mode, restrict):
        yield codec.decode(code)


def enumerate_prefixes(n: int, restrict: str | None = None) -> list[CaseSpec]:
    """All (q2, q3; c1, c2) whose decided lags n, n-1, n-2 vanish."""
    sched = Schedule(n)
    stop = sched.level_count(3, 2)
    run = Runner(n, None, "decided", restrict, stop=stop, schedule=sched)
    out = []
    for labels in run:
        ab = tuple(l for lev, l in zip(sched.levels, labels) if lev.pair == 0)
        cd = tuple(l for lev, l in zip(sched.levels, labels) if lev.pair == 1)
        out.append(CaseSpec(len(out) + 1, ab, cd))
    return out


def units(n: int, mode: str, restrict: str | None = None) -> list[CaseSpec]:
    if mode == "paper":
        return case_table(n % 2)
    if mode == "all":
        return enumerate_prefixes(n, restrict)
    raise ValueError(f"unknown unit mode {mode!r}")


def search(n: int, mode: str = "all", prune: str = DEFAULT_PRUNE, restrict: str | None = None,
           cases: Sequence[int] | None = None) -> Iterator[codec.CodePair]:
    """Run every unit of ``mode`` in order: "all" prefixes, or the 18 starting cases ("paper").

    Small n (too short for a 5-quad prefix) is searched from the root.
    """
    if n < 7 and mode == "all":
        yield from search_codes(n, None, prune, restrict)
        return
    for unit in units(n, mode, restrict):
        if cases is not None and unit.id not in cases:
            continue
        yield from search_codes(n, unit, prune, restrict)


def search_normal(n: int, prune: str = DEFAULT_PRUNE) -> Iterator[codec.CodePair]:
    return search_codes(n, None, prune, "normal")


def search_near_normal(n: int, prune: str = DEFAULT_PRUNE) -> Iterator[codec.CodePair]:
    if n % 2 and n != 1:
        raise NearNormalParity(f"near-normal sequences need n even or n = 1, got {n}")
    return search_codes(n, None, prune, "near-normal")


def first_solution(n: int, restrict: str | None = None) -> codec.CodePair | None:
    return next(iter(search_codes(n, None, DEFAULT_PRUNE, restrict)), None)


def three_square_feasible(n: int) -> bool:
    """True iff 2n = x^2 + y^2 + z^2 for some nonnegative integers."""
    target = 2 * n
    x = 0
    while x * x <= target:
        y = x
        while x * x + y * y <= target:
            r = target - x * x - y * y
            z = int(round(r ** 0.5))
            for zz in (z - 1, z, z + 1):
                if zz >= y and zz * zz == r:
                    return True
            y += 1
        x += 1
    return False


@dataclass
class OrbitCoverage:
    n: int
    cases: set[codec.CodePair]
    all: set[codec.CodePair]

    @property
    def missing(self) -> set[codec.CodePair]:
        """Classes reached by the full prefix enumeration but not by the 18 cases."""
        return self.all - self.cases

    @property
    def unexplained(self) -> set[codec.CodePair]:
        """Missing classes whose alternated image is not reached by the 18 cases either."""
        return {c for c in self.missing if _alternated_class(c) not in self.cases}

    def summary(self) -> str:
        return (f"n={self.n} classes_all={len(self.all)} classes_cases={len(self.cases)} "
                f"missing={len(self.missing)} unexplained={len(self.unexplained)}")


def _alternated_class(code: codec.CodePair) -> codec.CodePair:
    # multiplying entry i of every sequence by (-1)^i scales lag s by (-1)^s
    q = codec.decode(code)
    return canonicalize(BaseQuadruple(*(alternate(x) for x in q)), check=False)


def orbit_coverage(n: int, prune: str = DEFAULT_PRUNE) -> OrbitCoverage:
    """Compare symmetry classes reached by the 18 starting cases and by all prefixes."""
    def classes(mode: str) -> set[codec.CodePair]:
        return {canonicalize(codec.decode(c), check=False) for c in search(n, mode, prune)}

    return OrbitCoverage(n, classes("paper"), classes("all"))
