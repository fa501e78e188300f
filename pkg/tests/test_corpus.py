import dataclasses
import shutil
from collections import Counter

import pytest

from baseseq import codec
from baseseq.corpus import (
    ENV_VAR,
    corpus_dir,
    load_examples,
    load_table,
    load_table1,
    table_rows,
    verify_all,
    verify_example,
    verify_row,
)
from baseseq.gamma import nu_counts, parse_edge

from conftest import row_for

TABLE_SIZES = {2: 21, 3: 28, 4: 16, 5: 36, 6: 31, 7: 28, 8: 25, 9: 15, 10: 19}


def test_table_sizes(witness_rows):
    assert Counter(r.table for r in witness_rows) == TABLE_SIZES
    assert len(witness_rows) == 219
    assert {r.table: r.n for r in witness_rows} == {k: k + 26 for k in TABLE_SIZES}


def test_row_checks_pass(witness_rows):
    for row in witness_rows:
        report = verify_row(row)
        assert report.ok, (report.label, report.failures())
        assert [name for name, *_ in report.checks] == ["decode", "is_bs", "sums", "edge"]


def test_named_rows(witness_rows):
    r = row_for(witness_rows, 2, "1-1")
    assert (r.sums, r.starred) == ((9, -1, 4, -4), (9, -1, 4, 4))
    r = row_for(witness_rows, 8, "5-10")
    assert (r.sums, r.starred) == ((-7, -7, 6, 2), (7, 3, 8, 4))
    assert verify_row(r).ok


def test_trailing_comma_normalized(witness_rows):
    r = row_for(witness_rows, 4, "4-8")
    assert r.sums == (5, 5, 6, 6)
    raw = (corpus_dir() / "table4.claims.tsv").read_text()
    assert "5,5,6,6," in raw


def _corrupt(code, pos):
    digits = list(code.ab_code)
    old = int(digits[pos])
    digits[pos] = str(old % 8 + 1)
    return dataclasses.replace(code, ab_code="".join(digits))


@pytest.mark.parametrize("pos", [1, 5, 9])
def test_corrupted_row_fails(witness_rows, pos):
    row = row_for(witness_rows, 2, "1-1")
    bad = dataclasses.replace(row, code=_corrupt(row.code, pos))
    report = verify_row(bad)
    assert not report.ok
    assert {"is_bs", "sums"} & {name for name, ok, *_ in report.checks if not ok}


def test_wrong_edge_claim_reported(witness_rows):
    row = dataclasses.replace(row_for(witness_rows, 2, "1-1"), edge="1-2")
    report = verify_row(row)
    assert not report.ok and report.failures()


def test_examples(example_rows):
    assert [e.n for e in example_rows] == [8, 36, 37, 38]
    assert [e.near_normal for e in example_rows] == [False, True, False, True]
    assert all(verify_example(e).ok for e in example_rows)


def test_no_duplicate_edges_per_table(witness_rows):
    for k in TABLE_SIZES:
        edges = [r.edge for r in witness_rows if r.table == k]
        assert len(edges) == len(set(edges)), k


def test_table4_cross_parity_only():
    for r in load_table(4):
        i, j = parse_edge(r.edge)
        assert 1 <= i <= 4 and 5 <= j <= 8


def test_table1_matches_counts_except_misprints():
    printed = load_table1()
    assert {n for n in range(41) if nu_counts(n) != printed[n]} == {37, 38}


def test_verify_all_summary():
    summary = verify_all()
    assert summary.ok
    assert len(summary.rows) == 219 and len(summary.examples) == 4
    for n in range(28, 36):
        have, want = summary.covered(n)
        assert have == want and not summary.coverage[n].extra
    assert summary.covered(36) == (19, 27)
    tsv = summary.to_tsv()
    assert tsv.startswith("row\tstatus\tdetail") and "FAIL" not in tsv


def test_env_override(tmp_path, monkeypatch):
    shutil.copytree(corpus_dir(), tmp_path / "c")
    path = tmp_path / "c" / "table9.witness"
    lines = path.read_text().splitlines()
    i = next(k for k, line in enumerate(lines) if line and not line.startswith("#"))
    n, code = lines[i].split(":")
    lines[i] = f"{n}: {_corrupt(codec.CodePair.parse(code.strip()), 2)}"
    path.write_text("\n".join(lines) + "\n")
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "c"))
    assert corpus_dir() == tmp_path / "c"
    summary = verify_all()
    assert not summary.ok
    assert sum(not r.ok for r in summary.rows) == 1
    assert summary.covered(35)[0] == 14


def test_loaders_are_consistent():
    rows = table_rows()
    assert rows == [r for k in TABLE_SIZES for r in load_table(k)]
    assert load_examples()[0].code == codec.CodePair("06142", "1675", 8)
