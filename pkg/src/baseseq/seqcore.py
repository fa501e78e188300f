"""Elementary arithmetic on +/-1 (binary) and 0/+/-1 (ternary) sequences.

Sequences are plain tuples of ints. Norms are never formed symbolically;
the coefficient of ``z**s`` in ``N(A) = A(z) A(1/z)`` is the aperiodic
autocorrelation of ``A`` at lag ``s``, and that is all we ever store.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

PMSequence = tuple[int, ...]
TernarySequence = tuple[int, ...]

_CHAR_TO_VAL = {"+": 1, "-": -1, "0": 0}
_VAL_TO_CHAR = {1: "+", -1: "-", 0: "0"}


def pm(text: str) -> PMSequence:
    """Parse a plus/minus string such as ``"++-+"`` (commas and spaces ignored)."""
    out = []
    for ch in text:
        if ch in ", \t":
            continue
        if ch not in "+-":
            raise ValueError(f"not a +/- character: {ch!r}")
        out.append(_CHAR_TO_VAL[ch])
    return tuple(out)


def ternary(text: str) -> TernarySequence:
    out = []
    for ch in text:
        if ch in ", \t":
            continue
        if ch not in _CHAR_TO_VAL:
            raise ValueError(f"not a +/-/0 character: {ch!r}")
        out.append(_CHAR_TO_VAL[ch])
    return tuple(out)


def to_text(s: Iterable[int]) -> str:
    return "".join(_VAL_TO_CHAR[x] for x in s)


def is_binary(s: Sequence[int]) -> bool:
    return all(x == 1 or x == -1 for x in s)


def is_ternary(s: Sequence[int]) -> bool:
    return all(x in (-1, 0, 1) for x in s)


def autocorrelation(s: Sequence[int], lag: int) -> int:
    """Aperiodic autocorrelation ``sum_i s[i] * s[i + lag]``; zero once ``lag >= len(s)``."""
    if lag < 0:
        raise ValueError("lag must be nonnegative")
    return sum(s[i] * s[i + lag] for i in range(len(s) - lag))


def autocorrelations(s: Sequence[int], max_lag: int | None = None) -> list[int]:
    """Coefficient list ``[N_0, N_1, ..., N_max_lag]`` of the norm of ``s``."""
    if max_lag is None:
        max_lag = max(len(s) - 1, 0)
    return [autocorrelation(s, k) for k in range(max_lag + 1)]


def combined_residual(q, lag: int) -> int:
    """Sum of the four autocorrelations of a quadruple at a positive lag."""
    if lag < 1:
        raise ValueError("lag must be positive")
    return sum(autocorrelation(x, lag) for x in q)


def eval_plus(s: Sequence[int]) -> int:
    return sum(s)


def eval_minus(s: Sequence[int]) -> int:
    # index origin 1: the first entry enters with a plus sign
    return sum(x if i % 2 == 0 else -x for i, x in enumerate(s))


def reverse(s: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(s))


def negate(s: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in s)


def alternate(s: Sequence[int]) -> tuple[int, ...]:
    """Multiply the i-th entry (origin 1) by ``(-1)**(i-1)``."""
    return tuple(x if i % 2 == 0 else -x for i, x in enumerate(s))


def concat(*parts: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for p in parts:
        out.extend(p)
    return tuple(out)


class BaseQuadruple(NamedTuple):
    """Four binary sequences ``(A; B; C; D)`` with ``len(A) == len(B)`` and ``len(C) == len(D)``."""

    A: PMSequence
    B: PMSequence
    C: PMSequence
    D: PMSequence

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.C)

    def check_lengths(self) -> None:
        if len(self.B) != len(self.A) or len(self.D) != len(self.C):
            raise ValueError(
                f"inconsistent lengths {len(self.A)},{len(self.B)},{len(self.C)},{len(self.D)}"
            )

    def to_text(self) -> str:
        return "\n".join(f"{name}={to_text(s)}" for name, s in zip("ABCD", self))
