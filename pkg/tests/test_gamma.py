import itertools
import json
import math

import pytest
from hypothesis import given, strategies as st

from baseseq import codec
from baseseq.bsq import EVEN, Partition4, parity_class
from baseseq.corpus import load_table, load_table1
from baseseq.errors import NotBaseSequences, VertexNotFound
from baseseq.gamma import (
    build_gamma,
    compare,
    edge_id,
    expected_gamma,
    four_square_partitions,
    nu_counts,
    question_coverage,
    vertex_order,
)

from conftest import row_for

TABLE_FOR_N = {n: n - 26 for n in range(28, 37)}


def partitions_oracle(N):
    r = math.isqrt(N)
    found = {
        tuple(sorted(c, reverse=True))
        for c in itertools.product(range(r + 1), repeat=4)
        if sum(x * x for x in c) == N
    }
    return sorted(found, reverse=True)


@pytest.mark.parametrize("N", [2, 6, 10, 34, 114, 150, 162])
def test_partitions_match_oracle(N):
    assert [p.roots for p in four_square_partitions(N)] == partitions_oracle(N)


def test_partition_counts():
    assert [p.roots for p in four_square_partitions(6)] == [(2, 1, 1, 0)]
    assert len(four_square_partitions(114)) == 8
    # 150 has 11 representations, one fewer than the printed count for n=37
    assert len(four_square_partitions(150)) == 11


def test_nu_counts_examples():
    assert nu_counts(28) == (5, 3)
    assert nu_counts(40) == (9, 4)
    assert nu_counts(0) == (1, 0)
    assert nu_counts(1) == 1


def test_table1_agrees_except_two_misprints():
    printed = load_table1()
    assert sorted(printed) == list(range(41))
    wrong = {n for n, v in printed.items() if nu_counts(n) != v}
    assert wrong == {37, 38}
    assert (printed[37], nu_counts(37)) == (12, 11)
    assert (printed[38], nu_counts(38)) == ((5, 6), (5, 5))


@pytest.mark.parametrize("n", range(0, 61))
def test_partition_structure(n):
    for p in four_square_partitions(4 * n + 2):
        assert p.total == 4 * n + 2
        assert sum(r % 2 for r in p.roots) == 2
        if n % 2 == 0:
            a, b = p.even_roots()
            assert (a - b) % 4 == 0


def test_vertex_order_n28():
    order = vertex_order(28)
    assert [p.roots for p in order] == [
        (9, 4, 4, 1), (8, 7, 1, 0), (8, 5, 5, 0), (8, 5, 4, 3), (7, 7, 4, 0),
        (10, 3, 2, 1), (9, 5, 2, 2), (7, 6, 5, 2),
    ]
    assert [parity_class(p, 28) for p in order] == [EVEN] * 5 + ["odd"] * 3


def test_edge_ids_from_tables():
    t2 = load_table(2)
    assert edge_id(codec.decode(row_for(t2, 2, "6-7").code)) == "6-7"
    t6 = load_table(6)
    assert edge_id(codec.decode(row_for(t6, 6, "1-1").code)) == "1-1"


def test_edge_id_rejects_foreign_sums(example8):
    from baseseq.gamma import edge_of
    with pytest.raises(VertexNotFound):
        edge_of(example8, vertex_order(9))


@pytest.mark.parametrize("n, total, kind", [
    (28, 21, "two_complete_with_loops"),
    (36, 27, "two_complete_with_loops"),
    (30, 16, "complete_bipartite"),
    (29, 28, "complete_with_loops"),
    (8, 0, "excepted"),
])
def test_expected_shapes(n, total, kind):
    exp = expected_gamma(n)
    assert exp.kind == kind and len(exp.edges) == total


def test_expected_n28_components():
    exp = expected_gamma(28)
    first = {e for e in exp.edges if max(e) <= 5}
    assert len(first) == 15 and len(exp.edges - first) == 6


@given(st.integers(0, 80))
def test_expected_edge_count_formula(n):
    exp = expected_gamma(n)
    if n in (4, 8, 12):
        assert exp.kind == "excepted"
        return
    if n % 2:
        nu = nu_counts(n)
        assert len(exp.edges) == nu * (nu + 1) // 2
        assert len(exp.loops) == nu
        return
    nu0, nu1 = nu_counts(n)
    if n % 4 == 2:
        assert len(exp.edges) == nu0 * nu1 and not exp.loops
    else:
        assert len(exp.edges) == nu0 * (nu0 + 1) // 2 + nu1 * (nu1 + 1) // 2


def test_table_row_counts_match_expected():
    counts = {n: len(load_table(k)) for n, k in TABLE_FOR_N.items() if n < 36}
    assert counts == {28: 21, 29: 28, 30: 16, 31: 36, 32: 31, 33: 28, 34: 25, 35: 15}
    for n, c in counts.items():
        assert c == len(expected_gamma(n).edges)


@pytest.mark.parametrize("n", range(28, 36))
def test_tables_realize_expected_graph(n):
    rows = load_table(TABLE_FOR_N[n])
    g = build_gamma([r.code for r in rows], n)
    cmp = compare(g, expected_gamma(n))
    assert cmp.ok


def test_table10_partial_coverage():
    g = build_gamma([r.code for r in load_table(10)], 36)
    cmp = compare(g, expected_gamma(36))
    assert (len(cmp.present), len(cmp.missing), len(cmp.extra)) == (19, 8, 0)


def test_empty_witness_list():
    g = build_gamma([], 1)
    assert len(g.vertices) == 1 and not g.edges
    assert compare(g, expected_gamma(1)).missing == [(1, 1)]


def test_build_rejects_corrupt_witness():
    bad = codec.CodePair("06143", "1675", 8)
    with pytest.raises(NotBaseSequences, match="witness 1"):
        build_gamma([bad], 8)


def test_graph_formats():
    g = build_gamma([r.code for r in load_table(2)], 28)
    doc = json.loads(g.to_json())
    assert doc["n"] == 28 and len(doc["vertices"]) == 8
    assert len(doc["loops"]) + len(doc["edges"]) == 21
    dot = g.to_dot()
    assert dot.startswith("graph Gamma_28 {") and dot.count(" -- ") == 21


def test_question_small_limits():
    assert question_coverage(0) == ([], [])
    assert question_coverage(50) == ([], [])


def _question_oracle(limit):
    tri = [k * (k + 1) // 2 for k in range(limit + 1) if k * (k + 1) // 2 <= limit]
    sq = [k * k for k in range(limit + 1) if k * k <= limit]
    t2 = {x + y for x in tri for y in tri if x + y <= limit}
    s2 = {x + y for x in sq for y in sq if x + y <= limit}
    even = {4 * x + y for x in t2 for y in t2}
    odd = {2 * x + y for x in s2 for y in t2}
    return ([v for v in range(0, limit + 1, 2) if v not in even],
            [v for v in range(1, limit + 1, 2) if v not in odd])


@pytest.mark.parametrize("limit", [0, 1, 7, 50, 300])
def test_question_matches_oracle(limit):
    assert question_coverage(limit) == _question_oracle(limit)


def test_question_large_limit():
    assert question_coverage(10 ** 4) == ([], [])
