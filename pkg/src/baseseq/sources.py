"""Witness sources for T-sequence derivation: embedded corpus, Golay pairs, live search."""
from __future__ import annotations

from functools import lru_cache

from . import codec
from .constructions import Derivation, golay_source, ts_derive
from .seqcore import BaseQuadruple

SEARCH_LIMIT = 16


@lru_cache(maxsize=None)
def _corpus_index() -> dict[int, tuple[codec.CodePair, str]]:
    from .corpus import load_examples, table_rows

    index: dict[int, tuple[codec.CodePair, str]] = {}
    for r in table_rows():
        index.setdefault(r.n, (r.code, f"corpus table {r.table} row {r.row}"))
    for e in load_examples():
        index.setdefault(e.n, (e.code, f"corpus example {e.row}"))
    return index


def corpus_source(n: int) -> tuple[BaseQuadruple, str] | None:
    hit = _corpus_index().get(n)
    if hit is None:
        return None
    code, origin = hit
    return codec.decode(code), origin


def search_source(n: int, limit: int = SEARCH_LIMIT) -> tuple[BaseQuadruple, str] | None:
    if n < 0 or n > limit:
        return None
    from .search import first_solution

    code = first_solution(n)
    if code is None:
        return None
    return codec.decode(code), f"search n={n} ({code})"


DEFAULT_SOURCES = (corpus_source, golay_source, search_source)


def derive(t: int) -> Derivation:
    return ts_derive(t, DEFAULT_SOURCES)
