"""Property suites: symmetries, parity law, codec round trips, incremental residuals."""
import functools

import numpy as np
from hypothesis import given, settings, strategies as st

from baseseq import codec
from baseseq.bsq import GENERATORS, covertex, is_bs, parity_class, symmetry_apply, vertex
from baseseq.corpus import table_rows
from baseseq.search import SearchState, brute_force

RANDOM_STATES = 10 ** 5


@functools.lru_cache(maxsize=None)
def _members(n):
    return tuple(sorted(brute_force(n)))


@functools.lru_cache(maxsize=None)
def _corpus():
    return tuple(codec.decode(r.code) for r in table_rows())


members = st.integers(1, 10).flatmap(lambda n: st.sampled_from(_members(n)))
corpus_members = st.builds(_corpus).flatmap(st.sampled_from)
words = st.lists(st.sampled_from(GENERATORS), max_size=12)


@given(st.one_of(members, corpus_members), words)
def test_group_preserves_membership_and_edge(q, word):
    pair = {vertex(q), covertex(q)}
    img = q
    for g in word:
        img = symmetry_apply(g, img)
    assert is_bs(img)
    assert {vertex(img), covertex(img)} == pair


@given(st.one_of(members, corpus_members).filter(lambda q: q.n % 2 == 0))
def test_parity_law(q):
    n = q.n
    assert (parity_class(vertex(q), n) == parity_class(covertex(q), n)) == (n % 4 == 0)


@given(st.one_of(members, corpus_members))
def test_codec_round_trip_on_members(q):
    code = codec.encode(q)
    assert codec.decode(code) == q
    assert codec.CodePair.parse(str(code), q.n) == code


def random_walk(n, steps, seed):
    """Random place/retract walk; returns the number of states whose residuals disagree."""
    rng = np.random.default_rng(seed)
    state = SearchState(n)
    allowed = state.schedule.default_allowed()
    L = len(allowed)
    bad = 0
    for _ in range(steps):
        if state.depth and (state.depth == L or rng.random() < 0.45):
            state.retract()
        else:
            labels = allowed[state.depth]
            state.place(labels[int(rng.integers(len(labels)))])
        bad += not np.array_equal(state.residuals(), state.recomputed())
    return bad


def test_incremental_residuals_on_random_states():
    sizes = [9, 16, 23, 28, 31]
    per = RANDOM_STATES // len(sizes)
    assert sum(random_walk(n, per, seed) for seed, n in enumerate(sizes)) == 0


@settings(max_examples=50)
@given(st.integers(2, 30), st.integers(0, 2 ** 32 - 1))
def test_residuals_random_short_walks(n, seed):
    assert random_walk(n, 200, seed) == 0
