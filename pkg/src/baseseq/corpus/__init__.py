"""Embedded witness tables and the harness that re-checks every printed claim."""
from .data import (
    ENV_VAR,
    EXAMPLE_TABLE,
    WITNESS_TABLES,
    ExampleRow,
    WitnessRow,
    corpus_dir,
    load_examples,
    load_table,
    load_table1,
    table_rows,
)
from .verify import RowReport, Summary, verify_all, verify_example, verify_row

__all__ = [
    "ENV_VAR",
    "EXAMPLE_TABLE",
    "WITNESS_TABLES",
    "ExampleRow",
    "RowReport",
    "Summary",
    "WitnessRow",
    "corpus_dir",
    "load_examples",
    "load_table",
    "load_table1",
    "table_rows",
    "verify_all",
    "verify_example",
    "verify_row",
]
