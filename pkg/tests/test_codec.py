import io

import pytest
from hypothesis import given, strategies as st

from baseseq import codec
from baseseq.bsq import is_bs
from baseseq.errors import BadDigit, BadLength, NotInAlphabet, NotNormalized
from baseseq.seqcore import pm
from baseseq.search import brute_force

ALL_PATTERNS = [codec.label_to_quad(k) for k in range(9)]


def test_quad_labels():
    assert codec.quad_to_label(-1, 1, -1, 1) == 3
    assert codec.quad_to_label(1, 1, 1, -1) == 0
    with pytest.raises(NotInAlphabet):
        codec.quad_to_label(1, 1, -1, 1)
    assert codec.label_to_quad(6) == (1, -1, 1, -1)
    assert codec.label_to_column(2) == (-1, 1)


@pytest.mark.parametrize("pattern", ALL_PATTERNS)
def test_quad_round_trip(pattern):
    assert codec.label_to_quad(codec.quad_to_label(*pattern)) == pattern


def test_column_round_trip():
    for k in range(4):
        assert codec.column_to_label(*codec.label_to_column(k)) == k


def test_decode_reference(example8):
    assert example8.A == pm("++++--+-+")
    assert example8.B == pm("+++-+++--")
    assert example8.C == pm("++--+--+")
    assert example8.D == pm("++++-+-+")


def test_decode_minimal():
    q = codec.decode("0;0", 1)
    assert q == (pm("++"), pm("+-"), pm("+"), pm("+"))
    with pytest.raises(BadLength):
        codec.decode(codec.CodePair("0", "", 1))


def test_decode_table_row_sums():
    q = codec.decode("076413275222630;12875373652226", 28)
    assert (sum(q.A), sum(q.B), sum(q.C), sum(q.D)) == (9, -1, 4, -4)


def test_encode_reference(example8):
    assert str(codec.encode(example8)) == "06142;1675"


def test_encode_rejects_swapped_pair(example8):
    with pytest.raises(NotNormalized):
        codec.encode(example8._replace(A=example8.B, B=example8.A))


@pytest.mark.parametrize("text, err", [
    ("06142;167", BadLength),
    ("16142;1675", BadDigit),
    ("06942;1675", BadDigit),
    ("06144;1674", BadDigit),
    ("0614x;1675", BadDigit),
    ("061421675", BadLength),
])
def test_malformed_codes(text, err):
    with pytest.raises(err):
        codec.CodePair.parse(text, 8)


def test_whitespace_tolerated_on_input():
    assert codec.CodePair.parse(" 06142 ; 1675 ", 8) == codec.CodePair("06142", "1675", 8)


def test_n_inferred_from_lengths():
    assert codec.CodePair.parse("06142;1675").n == 8
    assert codec.CodePair.parse("0;0").n == 1


def test_witness_file_round_trip():
    codes = [codec.CodePair("06142", "1675", 8), codec.CodePair("0", "0", 1)]
    text = "# header\n\n" + "".join(line + "\n" for line in codec.iter_witness_lines(codes))
    assert codec.read_witnesses(io.StringIO(text)) == codes
    assert codec.format_witness(codes[0]) == "8: 06142;1675"


def test_every_corpus_row_round_trips(witness_rows, example_rows):
    for row in [*witness_rows, *example_rows]:
        assert codec.encode(codec.decode(row.code)) == row.code


@pytest.mark.parametrize("n", range(1, 9))
def test_exactly_one_central_digit(n):
    ab, cd = codec.pair_code_length(n + 1), codec.pair_code_length(n)
    assert ((n + 1) % 2) + (n % 2) == 1
    assert ab + cd == (2 * n + 1 + 1) // 2


@pytest.mark.parametrize("n", range(1, 9))
def test_first_quad_forced_by_top_lag(n):
    for q in brute_force(n):
        assert q.A[0] * q.A[n] == -q.B[0] * q.B[n]


@st.composite
def codes(draw):
    n = draw(st.integers(1, 30))
    def digits(length, first_zero):
        quads = length // 2
        out = []
        for i in range(quads):
            out.append("0" if i == 0 and first_zero else str(draw(st.integers(1, 8))))
        if length % 2:
            out.append(str(draw(st.integers(0, 3))))
        return "".join(out)
    return codec.CodePair(digits(n + 1, True), digits(n, False), n)


@given(codes())
def test_random_code_round_trip(code):
    q = codec.decode(code)
    assert len(q.A) == len(q.B) == code.n + 1
    assert len(q.C) == len(q.D) == code.n
    assert codec.encode(q) == code


def test_decode_does_not_check_membership(example8):
    bad = codec.CodePair("06143", "1675", 8)
    assert not is_bs(codec.decode(bad))
