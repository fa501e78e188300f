"""Compact quad-label encoding of base sequences in BS(n+1, n).

A pair of equal-length sequences (X; Y) of length L is cut into quads
``[x_i x_{L+1-i}; y_i y_{L+1-i}]`` for ``i = 1 .. L//2`` plus, for odd L,
a central column ``[x_c; y_c]``.  Each quad is written as one digit.
The (A;B) code always starts with ``0``; the (C;D) code uses only 1..8
for quads.  Whichever pair has odd length carries a trailing column digit.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .errors import BadDigit, BadLength, NotInAlphabet, NotNormalized
from .seqcore import BaseQuadruple

Quad = tuple[int, int, int, int]  # (top-left, top-right, bottom-left, bottom-right)

QUADS: dict[int, Quad] = {
    0: (1, 1, 1, -1),
    1: (1, 1, 1, 1),
    2: (1, 1, -1, -1),
    3: (-1, 1, -1, 1),
    4: (1, -1, -1, 1),
    5: (-1, 1, 1, -1),
    6: (1, -1, 1, -1),
    7: (-1, -1, 1, 1),
    8: (-1, -1, -1, -1),
}
COLUMNS: dict[int, tuple[int, int]] = {0: (1, 1), 1: (1, -1), 2: (-1, 1), 3: (-1, -1)}

_QUAD_LABEL = {v: k for k, v in QUADS.items()}
_COLUMN_LABEL = {v: k for k, v in COLUMNS.items()}


def quad_to_label(top_left: int, top_right: int, bottom_left: int, bottom_right: int) -> int:
    try:
        return _QUAD_LABEL[(top_left, top_right, bottom_left, bottom_right)]
    except KeyError:
        raise NotInAlphabet(
            f"quad [{top_left:+d} {top_right:+d}; {bottom_left:+d} {bottom_right:+d}] has no label"
        ) from None


def label_to_quad(label: int) -> Quad:
    return QUADS[label]


def column_to_label(top: int, bottom: int) -> int:
    try:
        return _COLUMN_LABEL[(top, bottom)]
    except KeyError:
        raise NotInAlphabet(f"column [{top}; {bottom}] has no label") from None


def label_to_column(label: int) -> tuple[int, int]:
    return COLUMNS[label]


def pair_code_length(length: int) -> int:
    """Digits needed for a pair of sequences of the given length."""
    return length // 2 + length % 2


@dataclass(frozen=True, order=True)
class CodePair:
    ab_code: str
    cd_code: str
    n: int

    def __str__(self) -> str:
        return f"{self.ab_code};{self.cd_code}"

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "CodePair":
        """Parse ``"ABcode;CDcode"``; ``n`` is inferred from the digit counts when omitted."""
        if ";" not in text:
            raise BadLength(f"missing ';' separator in {text!r}")
        ab, cd = (part.strip() for part in text.split(";", 1))
        if n is None:
            n = infer_n(ab, cd)
        code = cls(ab, cd, n)
        validate(code)
        return code


def infer_n(ab_code: str, cd_code: str) -> int:
    for n in (2 * len(cd_code) - 1, 2 * len(cd_code)):
        if n >= 0 and pair_code_length(n + 1) == len(ab_code) and pair_code_length(n) == len(cd_code):
            return n
    raise BadLength(f"no n is consistent with code lengths {len(ab_code)}, {len(cd_code)}")


def validate(code: CodePair) -> None:
    """Structural checks only; membership in BS(n+1, n) is not examined."""
    n = code.n
    if n < 0:
        raise BadLength("n must be nonnegative")
    if len(code.ab_code) != pair_code_length(n + 1):
        raise BadLength(f"(A;B) code has {len(code.ab_code)} digits, n={n} needs {pair_code_length(n + 1)}")
    if len(code.cd_code) != pair_code_length(n):
        raise BadLength(f"(C;D) code has {len(code.cd_code)} digits, n={n} needs {pair_code_length(n)}")
    _check_digits(code.ab_code, n + 1, first_is_zero=n > 0, what="(A;B)")
    _check_digits(code.cd_code, n, first_is_zero=False, what="(C;D)")


def _check_digits(digits: str, length: int, first_is_zero: bool, what: str) -> None:
    nquads = length // 2
    for pos, ch in enumerate(digits):
        if not ch.isdigit():
            raise BadDigit(f"{what} code: {ch!r} at position {pos} is not a digit")
        v = int(ch)
        if pos >= nquads:
            ok = v <= 3
        elif pos == 0 and first_is_zero:
            ok = v == 0
        else:
            ok = 1 <= v <= 8
        if not ok:
            raise BadDigit(f"{what} code: digit {v} not allowed at position {pos}")


def decode_pair(digits: str, length: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    x = [0] * length
    y = [0] * length
    nquads = length // 2
    for i in range(nquads):
        tl, tr, bl, br = QUADS[int(digits[i])]
        j = length - 1 - i
        x[i], x[j], y[i], y[j] = tl, tr, bl, br
    if length % 2:
        x[nquads], y[nquads] = COLUMNS[int(digits[nquads])]
    return tuple(x), tuple(y)


def encode_pair(x, y, first_label0: bool) -> str:
    length = len(x)
    out = []
    for i in range(length // 2):
        j = length - 1 - i
        if i == 0 and first_label0:
            if (x[i], x[j], y[i], y[j]) != QUADS[0]:
                raise NotNormalized("first (A;B) quad is not the label-0 pattern")
            out.append("0")
            continue
        label = quad_to_label(x[i], x[j], y[i], y[j])
        if label == 0:
            raise NotInAlphabet(f"quad {i + 1} is the label-0 pattern, outside the 1..8 alphabet")
        out.append(str(label))
    if length % 2:
        c = length // 2
        out.append(str(column_to_label(x[c], y[c])))
    return "".join(out)


def decode(code: CodePair | str, n: int | None = None) -> BaseQuadruple:
    if isinstance(code, str):
        code = CodePair.parse(code, n)
    else:
        validate(code)
    A, B = decode_pair(code.ab_code, code.n + 1)
    C, D = decode_pair(code.cd_code, code.n)
    return BaseQuadruple(A, B, C, D)


def encode(q: BaseQuadruple) -> CodePair:
    q.check_lengths()
    n = q.n
    if q.m != n + 1:
        raise BadLength(f"encoding needs len(A) = len(C) + 1, got {q.m} and {n}")
    ab = encode_pair(q.A, q.B, first_label0=n > 0)
    cd = encode_pair(q.C, q.D, first_label0=False)
    return CodePair(ab, cd, n)


# witness files: one "n: AB;CD" record per line, '#' starts a comment

def parse_witness_line(line: str) -> CodePair | None:
    line = line.split("#", 1)[0].strip()
    if not line:
        return None
    if ":" in line:
        head, rest = line.split(":", 1)
        return CodePair.parse(rest.strip(), int(head))
    return CodePair.parse(line)


def read_witnesses(source: str | os.PathLike | TextIO) -> list[CodePair]:
    if hasattr(source, "read"):
        lines = source.read().splitlines()
    else:
        with open(source) as fh:
            lines = fh.read().splitlines()
    out = []
    for lineno, line in enumerate(lines, 1):
        try:
            code = parse_witness_line(line)
        except ValueError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from exc
        if code is not None:
            out.append(code)
    return out


def format_witness(code: CodePair) -> str:
    return f"{code.n}: {code}"


def iter_witness_lines(codes: Iterable[CodePair]) -> Iterator[str]:
    for code in codes:
        yield format_witness(code) + "\n"
