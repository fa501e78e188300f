import pytest
from hypothesis import given, strategies as st

from baseseq.seqcore import (
    BaseQuadruple,
    autocorrelation,
    combined_residual,
    eval_minus,
    eval_plus,
    negate,
    pm,
    reverse,
    to_text,
)

pm_seqs = st.lists(st.sampled_from([1, -1]), max_size=40).map(tuple)


@pytest.mark.parametrize("text, lag, expected", [
    ("++", 1, 1),
    ("+-+", 1, -2),
    ("+-+", 2, 1),
    ("+-+", 0, 3),
    ("+-+", 3, 0),
    ("", 0, 0),
])
def test_autocorrelation_by_hand(text, lag, expected):
    assert autocorrelation(pm(text), lag) == expected


def test_autocorrelation_of_example_a_at_top_lag(example8):
    A = example8.A
    assert autocorrelation(A, 8) == A[0] * A[8] == 1


def test_combined_residual_vanishes_on_example(example8):
    assert [combined_residual(example8, s) for s in range(1, 9)] == [0] * 8


def test_combined_residual_detects_flip(example8):
    A = list(example8.A)
    A[8] = -A[8]
    broken = example8._replace(A=tuple(A))
    assert combined_residual(broken, 8) != 0


def test_combined_residual_degenerate():
    q = BaseQuadruple(pm("+"), pm("+"), (), ())
    assert combined_residual(q, 1) == 0


def test_evaluations(example8):
    assert eval_plus(example8.A) == 3
    assert eval_plus(example8.C) == 0
    assert eval_plus(pm("+")) == eval_minus(pm("+")) == 1
    assert eval_minus(pm("++")) == 0


def test_reverse_and_negate():
    assert reverse(pm("+--")) == pm("--+")
    assert negate(pm("+-")) == pm("-+")
    s = pm("+-++")
    for lag in range(5):
        assert autocorrelation(reverse(s), lag) == autocorrelation(s, lag)


def test_text_round_trip():
    assert to_text(pm("+, -, +")) == "+-+"
    with pytest.raises(ValueError):
        pm("+x")


@given(pm_seqs, st.integers(0, 45))
def test_autocorrelation_symmetries(s, lag):
    a = autocorrelation(s, lag)
    assert autocorrelation(negate(s), lag) == a
    assert autocorrelation(reverse(s), lag) == a
    if lag >= len(s):
        assert a == 0


@given(pm_seqs)
def test_evaluation_laws(s):
    n = len(s)
    assert eval_plus(reverse(s)) == eval_plus(s)
    if n:
        assert eval_minus(reverse(s)) == (-1) ** (n - 1) * eval_minus(s)
    for v in (eval_plus(s), eval_minus(s)):
        assert abs(v) <= n
        assert (v - n) % 2 == 0
