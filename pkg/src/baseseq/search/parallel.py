"""Controller that runs disjoint units of a search, optionally in worker processes.

Units share no state.  Each yields its codes in deterministic order; the
controller reports per-unit progress and leaves order normalization of the
merged result to the caller (``merge``).
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, NamedTuple

from ..codec import CodePair
from .engine import DEFAULT_PRUNE, SearchStats, search_codes

log = logging.getLogger(__name__)


class UnitResult(NamedTuple):
    unit_id: int
    codes: list[CodePair]
    nodes: int
    elapsed: float


def run_unit(n: int, unit_id: int, prefix, prune: str = DEFAULT_PRUNE,
             restrict: str | None = None) -> UnitResult:
    stats = SearchStats()
    t0 = time.perf_counter()
    codes = list(search_codes(n, prefix, prune, restrict, stats=stats))
    return UnitResult(unit_id, codes, stats.nodes, time.perf_counter() - t0)


def _job(args) -> UnitResult:
    return run_unit(*args)


def run_units(n: int, units: Iterable[tuple[int, object]], prune: str = DEFAULT_PRUNE,
              restrict: str | None = None, jobs: int = 1) -> Iterator[UnitResult]:
    """Run (unit_id, prefix) units; results arrive in unit order."""
    tasks = [(n, uid, prefix, prune, restrict) for uid, prefix in units]
    if jobs <= 1:
        results: Iterable[UnitResult] = map(_job, tasks)
        for res in results:
            _log(res)
            yield res
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for res in pool.map(_job, tasks):
            _log(res)
            yield res


def _log(res: UnitResult) -> None:
    log.info("unit=%d emitted=%d elapsed=%.3f", res.unit_id, len(res.codes), res.elapsed)


def merge(results: Iterable[Iterable[CodePair]]) -> list[CodePair]:
    """Union of unit outputs, deduplicated by code and sorted."""
    seen: set[CodePair] = set()
    for codes in results:
        seen.update(codes)
    return sorted(seen)
