"""Loading of the checked-in corpus assets.

Layout: ``tables/table<k>.witness`` (codec witness format) beside
``tables/table<k>.claims.tsv`` holding the printed edge and sums per row.
"""
from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from pathlib import Path

from .. import codec

WITNESS_TABLES = tuple(range(2, 11))
EXAMPLE_TABLE = "examples"
ENV_VAR = "BASESEQ_CORPUS_DIR"


def corpus_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "tables"


@dataclass(frozen=True)
class WitnessRow:
    table: int
    row: int
    n: int
    edge: str
    code: codec.CodePair
    sums: tuple[int, int, int, int]
    starred: tuple[int, int, int, int]


@dataclass(frozen=True)
class ExampleRow:
    row: int
    n: int
    code: codec.CodePair
    near_normal: bool


def _ints(text: str) -> tuple[int, int, int, int]:
    # tolerate a stray trailing comma in the printed sums
    parts = [p for p in text.strip().split(",") if p.strip()]
    vals = tuple(int(p) for p in parts)
    if len(vals) != 4:
        raise ValueError(f"expected four sums, got {text!r}")
    return vals  # type: ignore[return-value]


def _claims(path: Path) -> list[dict[str, str]]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh, delimiter="\t"))


def load_table(k: int, base: Path | None = None) -> list[WitnessRow]:
    base = base or corpus_dir()
    codes = codec.read_witnesses(base / f"table{k}.witness")
    claims = _claims(base / f"table{k}.claims.tsv")
    if len(codes) != len(claims):
        raise ValueError(f"table {k}: {len(codes)} witnesses but {len(claims)} claim rows")
    return [
        WitnessRow(k, int(c["row"]), code.n, c["edge"].strip(), code, _ints(c["sums"]), _ints(c["starred"]))
        for code, c in zip(codes, claims)
    ]


def table_rows(base: Path | None = None) -> list[WitnessRow]:
    return [r for k in WITNESS_TABLES for r in load_table(k, base)]


def load_examples(base: Path | None = None) -> list[ExampleRow]:
    base = base or corpus_dir()
    codes = codec.read_witnesses(base / f"{EXAMPLE_TABLE}.witness")
    claims = _claims(base / f"{EXAMPLE_TABLE}.claims.tsv")
    return [
        ExampleRow(int(c["row"]), code.n, code, c["near_normal"].strip() == "yes")
        for code, c in zip(codes, claims)
    ]


def load_table1(base: Path | None = None) -> dict[int, int | tuple[int, int]]:
    """Printed vertex counts: nu for odd n, (nu0, nu1) for even n."""
    out: dict[int, int | tuple[int, int]] = {}
    for c in _claims((base or corpus_dir()) / "table1.tsv"):
        n = int(c["n"])
        out[n] = int(c["nu"]) if n % 2 else (int(c["nu0"]), int(c["nu1"]))
    return out
