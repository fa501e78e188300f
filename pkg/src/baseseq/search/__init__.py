"""Exhaustive and sampled searches for base sequences BS(n+1, n)."""
from .brute import brute_force
from .cases import CaseSpec, case, case_table
from .engine import (
    Runner,
    SearchState,
    SearchStats,
    OrbitCoverage,
    enumerate_prefixes,
    orbit_coverage,
    units,
    first_solution,
    search,
    search_case,
    search_codes,
    search_near_normal,
    search_normal,
    three_square_feasible,
)
from .parallel import UnitResult, merge, run_units
from .schedule import Schedule
from .segment import (
    SegmentRow,
    SegmentTable,
    read_segments,
    sample_entries,
    sampled_search,
    segment_phase1,
    segment_phase2,
    write_segments,
)

__all__ = [
    "CaseSpec",
    "OrbitCoverage",
    "Runner",
    "Schedule",
    "SearchState",
    "SearchStats",
    "SegmentRow",
    "SegmentTable",
    "UnitResult",
    "brute_force",
    "case",
    "case_table",
    "enumerate_prefixes",
    "first_solution",
    "merge",
    "orbit_coverage",
    "read_segments",
    "run_units",
    "sample_entries",
    "sampled_search",
    "search",
    "search_case",
    "search_codes",
    "search_near_normal",
    "search_normal",
    "segment_phase1",
    "segment_phase2",
    "three_square_feasible",
    "units",
    "write_segments",
]
