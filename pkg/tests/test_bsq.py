import functools
import random

import pytest
from hypothesis import given, strategies as st

from baseseq import codec
from baseseq.bsq import (
    EVEN,
    GENERATORS,
    ODD,
    Partition4,
    canonicalize,
    check_bs,
    covertex,
    is_bs,
    is_near_normal,
    is_normal,
    orbit,
    parity_class,
    sums_profile,
    symmetry_apply,
    vertex,
)
from baseseq.errors import NotBaseSequences, ParityUndefined
from baseseq.gamma import four_square_partitions
from baseseq.search import brute_force
from baseseq.seqcore import BaseQuadruple, pm

from conftest import row_for

N37 = "0686287846153524326;1153175814738523732"


def test_reference_is_member(example8):
    assert is_bs(example8)
    assert check_bs(example8).failing_lag is None


def test_n37_string_is_member():
    q = codec.decode(N37)
    assert q.n == 37 and is_bs(q)
    assert not is_near_normal(q)


def test_flip_reports_failing_lag(example8):
    A = list(example8.A)
    A[-1] = -A[-1]
    res = check_bs(example8._replace(A=tuple(A)))
    assert not res.ok
    assert res.failing_lag == 1 and res.residual != 0


def test_sums_profiles(witness_rows):
    q = codec.decode(row_for(witness_rows, 2, "1-1").code)
    assert sums_profile(q) == (9, -1, 4, -4, 9, -1, 4, 4)
    q = codec.decode(row_for(witness_rows, 6, "1-1").code)
    assert sums_profile(q) == (11, 3, 0, 0, 11, 3, 0, 0)
    q = BaseQuadruple(pm("+"), pm("+"), (), ())
    assert sums_profile(q) == (1, 1, 0, 0, 1, 1, 0, 0)


def test_vertices(witness_rows, example8):
    q = codec.decode(row_for(witness_rows, 2, "1-1").code)
    assert vertex(q).roots == (9, 4, 4, 1) and vertex(q).total == 114
    assert vertex(example8).roots == (4, 3, 3, 0)
    assert covertex(example8).total == 34


def test_vertex_requires_membership(example8):
    A = list(example8.A)
    A[0] = -A[0]
    with pytest.raises(NotBaseSequences):
        vertex(example8._replace(A=tuple(A)))


def test_near_normal_example(example_rows):
    q = codec.decode(next(r.code for r in example_rows if r.n == 38))
    assert is_near_normal(q)


def test_normal_trivial():
    assert is_normal(BaseQuadruple(pm("++"), pm("+-"), pm("+"), pm("+")))


def test_parity_class():
    assert parity_class(Partition4((9, 4, 4, 1)), 28) == EVEN
    assert parity_class(Partition4((10, 3, 2, 1)), 28) == ODD
    assert parity_class(Partition4((1, 1, 0, 0)), 0) == EVEN
    with pytest.raises(ParityUndefined):
        parity_class(Partition4((9, 4, 4, 1)), 29)


def test_orbit_of_reference(example8):
    imgs = list(orbit(example8))
    assert len(imgs) <= 1024
    assert all(is_bs(q) for q in imgs)
    pairs = {frozenset((vertex(q), covertex(q))) for q in imgs}
    assert len(pairs) == 1


def test_generators_preserve_membership_on_corpus(witness_rows, example_rows):
    for row in [*witness_rows, *example_rows]:
        q = codec.decode(row.code)
        for g in GENERATORS:
            assert is_bs(symmetry_apply(g, q)), (row.code, g)


@pytest.mark.parametrize("n", [2, 3, 5, 6, 7])
def test_canonicalize_constant_on_orbits(n, members):
    rng = random.Random(n)
    qs = sorted(members(n))
    for q in rng.sample(qs, min(20, len(qs))):
        c = canonicalize(q)
        img = q
        for g in rng.choices(GENERATORS, k=6):
            img = symmetry_apply(g, img)
        assert canonicalize(img) == c
        assert is_bs(codec.decode(c))


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_parity_law_exhaustive(n, members):
    for q in members(n):
        p = sums_profile(q)
        for sums in (p.plain, p.starred):
            evens = [x for x in sums if x % 2 == 0]
            assert len(evens) == 2 and (evens[0] - evens[1]) % 4 == 0
        same = parity_class(vertex(q, False), n) == parity_class(covertex(q, False), n)
        assert same == (n % 4 == 0)


def test_parity_law_on_tables(witness_rows):
    for row in witness_rows:
        if row.n % 2:
            continue
        q = codec.decode(row.code)
        same = parity_class(vertex(q), row.n) == parity_class(covertex(q), row.n)
        assert same == (row.n % 4 == 0), row


@pytest.mark.parametrize("n", range(1, 11))
def test_vertices_are_partitions(n, members):
    parts = set(four_square_partitions(4 * n + 2))
    for q in members(n):
        assert vertex(q) in parts and covertex(q) in parts


@functools.lru_cache(maxsize=None)
def _sorted_members(n):
    return sorted(brute_force(n))


@given(st.integers(1, 7), st.data())
def test_sums_profile_parities(n, data):
    qs = _sorted_members(n)
    q = data.draw(st.sampled_from(qs))
    p = sums_profile(q)
    assert (p.a - (n + 1)) % 2 == 0 and (p.b - (n + 1)) % 2 == 0
    assert (p.c - n) % 2 == 0 and (p.d - n) % 2 == 0
    for x, y in zip(p.plain, p.starred):
        assert (x - y) % 2 == 0
