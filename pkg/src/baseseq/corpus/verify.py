"""Re-verification of every corpus row against its printed claims."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .. import codec, gamma
from ..bsq import check_bs, is_near_normal, sums_profile
from .data import ExampleRow, WitnessRow, load_examples, table_rows


@dataclass
class RowReport:
    label: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append((name, passed, detail))
        return passed

    def failures(self) -> list[str]:
        return [f"{name}: {detail}" for name, passed, detail in self.checks if not passed]


def _decode_and_check(report: RowReport, code: codec.CodePair):
    try:
        q = codec.decode(code)
    except ValueError as exc:
        report.add("decode", False, str(exc))
        return None
    report.add("decode", True)
    res = check_bs(q)
    detail = "" if res.ok else f"lag {res.failing_lag} residual {res.residual}"
    if not report.add("is_bs", res.ok, detail):
        return None
    return q


def verify_row(row: WitnessRow) -> RowReport:
    """Checks in order: decode, is_bs, printed sums, printed edge id."""
    report = RowReport(f"table{row.table}:{row.row}")
    q = _decode_and_check(report, row.code)
    if q is None:
        return report
    prof = sums_profile(q)
    got = (prof.plain, prof.starred)
    want = (row.sums, row.starred)
    report.add("sums", got == want, "" if got == want else f"computed {got}, printed {want}")
    try:
        edge = gamma.edge_id(q)
    except ValueError as exc:
        report.add("edge", False, str(exc))
    else:
        report.add("edge", edge == row.edge, "" if edge == row.edge else f"computed {edge}, printed {row.edge}")
    return report


def verify_example(row: ExampleRow) -> RowReport:
    report = RowReport(f"examples:{row.row}")
    q = _decode_and_check(report, row.code)
    if q is not None and row.near_normal:
        report.add("near_normal", is_near_normal(q), "" if is_near_normal(q) else "not near-normal")
    return report


@dataclass
class Summary:
    rows: list[RowReport]
    examples: list[RowReport]
    coverage: dict[int, gamma.Comparison]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows) and all(r.ok for r in self.examples)

    def covered(self, n: int) -> tuple[int, int]:
        cmp = self.coverage[n]
        return len(cmp.present), len(cmp.present) + len(cmp.missing)

    def to_tsv(self) -> str:
        lines = ["row\tstatus\tdetail"]
        for r in self.rows + self.examples:
            lines.append(f"{r.label}\t{'pass' if r.ok else 'FAIL'}\t{'; '.join(r.failures())}")
        lines.append("")
        lines.append("n\tcovered\texpected\textra")
        for n in sorted(self.coverage):
            have, want = self.covered(n)
            lines.append(f"{n}\t{have}\t{want}\t{len(self.coverage[n].extra)}")
        return "\n".join(lines) + "\n"


def verify_all(base: Path | None = None) -> Summary:
    rows = table_rows(base)
    reports = [verify_row(r) for r in rows]
    examples = [verify_example(e) for e in load_examples(base)]
    coverage = {}
    for n in sorted({r.n for r in rows}):
        good = [r.code for r, rep in zip(rows, reports) if r.n == n and rep.ok]
        coverage[n] = gamma.compare(gamma.build_gamma(good, n), gamma.expected_gamma(n))
    return Summary(reports, examples, coverage)
