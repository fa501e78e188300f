"""Two-phase segment mode.

Phase 1 lists every valid extension of a case to 8 AB quads and 7 CD quads
(one row per line, ``caseId q1..q8 | c1..c7``).  Phase 2 resumes the full
search from a block of ``r`` consecutive rows; sampled runs pick ``s``
random entry points without replacement.
"""
from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, TextIO

import numpy as np

from ..codec import CodePair
from ..errors import EntryOutOfRange
from . import kernel
from .engine import DEFAULT_PRUNE, Runner, SearchStats
from .schedule import AB, Schedule

log = logging.getLogger(__name__)

SEGMENT_AB = 8
SEGMENT_CD = 7
MIN_N = 15


class SegmentRow(NamedTuple):
    case_id: int
    ab: tuple[int, ...]
    cd: tuple[int, ...]

    def to_line(self) -> str:
        return f"{self.case_id} {' '.join(map(str, self.ab))} | {' '.join(map(str, self.cd))}"

    @classmethod
    def from_line(cls, line: str) -> "SegmentRow":
        head, tail = line.split("|")
        parts = head.split()
        return cls(int(parts[0]), tuple(int(x) for x in parts[1:]), tuple(int(x) for x in tail.split()))


@dataclass
class SegmentTable:
    """Phase-1 rows held as compact arrays (millions of rows at n near 30)."""

    case_ids: np.ndarray  # (N,) int32
    ab: np.ndarray        # (N, ab_len) int8
    cd: np.ndarray        # (N, cd_len) int8

    def __len__(self) -> int:
        return int(self.case_ids.shape[0])

    def __getitem__(self, i: int) -> SegmentRow:
        return SegmentRow(int(self.case_ids[i]), tuple(self.ab[i].tolist()), tuple(self.cd[i].tolist()))

    def __iter__(self) -> Iterator[SegmentRow]:
        for i in range(len(self)):
            yield self[i]

    @classmethod
    def empty(cls, ab_len: int = SEGMENT_AB, cd_len: int = SEGMENT_CD) -> "SegmentTable":
        return cls(np.zeros(0, np.int32), np.zeros((0, ab_len), np.int8), np.zeros((0, cd_len), np.int8))

    @classmethod
    def concat(cls, tables: list["SegmentTable"]) -> "SegmentTable":
        if not tables:
            return cls.empty()
        return cls(np.concatenate([t.case_ids for t in tables]),
                   np.concatenate([t.ab for t in tables]),
                   np.concatenate([t.cd for t in tables]))

    @classmethod
    def from_rows(cls, rows: Iterable[SegmentRow]) -> "SegmentTable":
        rows = list(rows)
        if not rows:
            return cls.empty()
        return cls(np.array([r.case_id for r in rows], np.int32),
                   np.array([r.ab for r in rows], np.int8),
                   np.array([r.cd for r in rows], np.int8))


def segment_phase1(n: int, case, prune: str = DEFAULT_PRUNE,
                   ab_len: int = SEGMENT_AB, cd_len: int = SEGMENT_CD) -> SegmentTable:
    if n < MIN_N and (ab_len, cd_len) == (SEGMENT_AB, SEGMENT_CD):
        raise ValueError(f"segment mode needs n >= {MIN_N}")
    sched = Schedule(n)
    stop = sched.level_count(ab_len, cd_len)
    run = Runner(n, case, prune, stop=stop, schedule=sched)
    labels = run.collect()
    ab_cols = [d for d in range(stop) if sched.levels[d].pair == AB]
    cd_cols = [d for d in range(stop) if sched.levels[d].pair != AB]
    ids = np.full(labels.shape[0], case.id, dtype=np.int32)
    return SegmentTable(ids, labels[:, ab_cols], labels[:, cd_cols])


def write_segments(table: SegmentTable | Iterable[SegmentRow], fh: TextIO) -> int:
    count = 0
    for row in table:
        fh.write(row.to_line() + "\n")
        count += 1
    return count


def read_segments(path: str | os.PathLike) -> SegmentTable:
    with open(path) as fh:
        return SegmentTable.from_rows(
            SegmentRow.from_line(line) for line in fh if line.strip() and not line.startswith("#"))


def _run_prefix(n: int, row: SegmentRow, prune: str, schedule: Schedule, stats: SearchStats | None,
                max_nodes: int | None) -> Iterator[CodePair]:
    run = Runner(n, row, prune, schedule=schedule)
    t0 = time.perf_counter()
    try:
        while True:
            budget = _budget(run, max_nodes)
            if budget <= 0:
                break
            status = run.step(budget)
            if status == kernel.FOUND:
                run.stats.emitted += 1
                yield schedule.code_from_labels(run.labels())
            elif status == kernel.EXHAUSTED:
                break
    finally:
        run.stats.elapsed += time.perf_counter() - t0
        if stats is not None:
            stats.nodes += run.stats.nodes
            stats.emitted += run.stats.emitted
            stats.elapsed += run.stats.elapsed


def _budget(run: Runner, max_nodes: int | None) -> int:
    step = 1 << 22
    if max_nodes is None:
        return step
    return min(step, max_nodes - run.stats.nodes)


def segment_phase2(n: int, rows: SegmentTable, entry: int, r: int, prune: str = DEFAULT_PRUNE,
                   stats: SearchStats | None = None, max_nodes: int | None = None,
                   schedule: Schedule | None = None) -> Iterator[CodePair]:
    """Search below rows[entry:entry + r]; ``max_nodes`` caps the work spent on each row."""
    if not 0 <= entry < len(rows):
        raise EntryOutOfRange(f"entry {entry} outside 0..{len(rows) - 1}")
    schedule = schedule or Schedule(n)
    for i in range(entry, min(entry + r, len(rows))):
        yield from _run_prefix(n, rows[i], prune, schedule, stats, max_nodes)


def sample_entries(num_rows: int, repeats: int, seed: int = 0) -> list[int]:
    """Distinct entry points drawn with a seeded PCG64 generator."""
    rng = np.random.Generator(np.random.PCG64(seed))
    k = min(repeats, num_rows)
    return [int(x) for x in rng.choice(num_rows, size=k, replace=False)]


def sampled_search(n: int, rows: SegmentTable, r: int, repeats: int, seed: int = 0,
                   prune: str = DEFAULT_PRUNE, stats: SearchStats | None = None,
                   max_nodes: int | None = None, deadline: float | None = None) -> Iterator[CodePair]:
    """Phase 2 on ``repeats`` sampled blocks of ``r`` rows.

    ``deadline`` is a ``time.monotonic()`` value; no new unit starts after it.
    """
    schedule = Schedule(n)
    for unit, entry in enumerate(sample_entries(len(rows), repeats, seed)):
        if deadline is not None and time.monotonic() >= deadline:
            log.info("deadline reached after %d units", unit)
            return
        t0 = time.perf_counter()
        emitted = 0
        for code in segment_phase2(n, rows, entry, r, prune, stats, max_nodes, schedule):
            emitted += 1
            yield code
        log.info("unit=%d entry=%d emitted=%d elapsed=%.3f", unit, entry, emitted,
                 time.perf_counter() - t0)
