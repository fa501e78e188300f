"""Golay pairs, base sequences from Golay pairs, and T-sequence derivations.

Every constructor re-verifies its output before returning it; a failed
verification raises ConstructionFailed rather than returning a bad object.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple, Sequence

from . import bsq
from .errors import ConstructionFailed, NotBaseSequences, NotGolay, NotGolayNumber, NotTSequences
from .seqcore import (
    BaseQuadruple,
    PMSequence,
    TernarySequence,
    autocorrelation,
    concat,
    is_binary,
    is_ternary,
    negate,
    pm,
    reverse,
    to_text,
)

log = logging.getLogger(__name__)


class GolayPair(NamedTuple):
    E: PMSequence
    F: PMSequence


class TQuadruple(NamedTuple):
    X: TernarySequence
    Y: TernarySequence
    Z: TernarySequence
    W: TernarySequence

    @property
    def length(self) -> int:
        return len(self.X)

    def to_text(self) -> str:
        return "\n".join(to_text(s) for s in self) + "\n"


GOLAY_SEEDS: dict[int, GolayPair] = {
    1: GolayPair(pm("+"), pm("+")),
    2: GolayPair(pm("++"), pm("+-")),
    10: GolayPair(pm("++-+-+--++"), pm("++-+++++--")),
    26: GolayPair(pm("++++-++--+-+-+--+-+++--+++"), pm("++++-++--+-+++++-+---++---")),
}


def golay_verify(p: GolayPair) -> bool:
    E, F = p
    if len(E) != len(F) or not (is_binary(E) and is_binary(F)):
        return False
    return all(autocorrelation(E, s) + autocorrelation(F, s) == 0 for s in range(1, len(E)))


def _checked(p: GolayPair, what: str) -> GolayPair:
    if not golay_verify(p):
        raise ConstructionFailed(f"{what} produced a pair that is not complementary")
    return p


def _require_golay(p: GolayPair) -> None:
    if not golay_verify(p):
        raise NotGolay("input is not a Golay complementary pair")


def golay_double(p: GolayPair) -> GolayPair:
    _require_golay(p)
    E, F = p
    return _checked(GolayPair(concat(E, F), concat(E, negate(F))), "golay_double")


def golay_turyn(p: GolayPair, q: GolayPair) -> GolayPair:
    """Product of pairs of lengths m and n giving length m*n.

    With s = (A+B)/2 and d = (A-B)/2 ternary halves of the first pair:
    E = C (x) s + D* (x) d and F = D (x) s - C* (x) d, where ``u (x) v``
    is the concatenation of the blocks ``u_i * v`` and ``*`` is reversal.
    """
    _require_golay(p)
    _require_golay(q)
    A, B = p
    C, D = q
    s = [(x + y) // 2 for x, y in zip(A, B)]
    d = [(x - y) // 2 for x, y in zip(A, B)]
    Cr, Dr = reverse(C), reverse(D)
    E: list[int] = []
    F: list[int] = []
    for i in range(len(C)):
        E.extend(C[i] * u + Dr[i] * v for u, v in zip(s, d))
        F.extend(D[i] * u - Cr[i] * v for u, v in zip(s, d))
    return _checked(GolayPair(tuple(E), tuple(F)), "golay_turyn")


def golay_factor(L: int) -> tuple[int, int, int]:
    """Exponents (a, b, c) with L = 2^a 10^b 26^c, or NotGolayNumber."""
    if L < 1:
        raise NotGolayNumber(f"{L} is not a positive integer")
    a = b = c = 0
    rest = L
    while rest % 5 == 0:
        rest //= 5
        b += 1
    while rest % 13 == 0:
        rest //= 13
        c += 1
    while rest % 2 == 0:
        rest //= 2
        a += 1
    a -= b + c
    if rest != 1 or a < 0:
        raise NotGolayNumber(f"{L} is not of the form 2^a 10^b 26^c")
    return a, b, c


def is_golay_number(L: int) -> bool:
    try:
        golay_factor(L)
    except NotGolayNumber:
        return False
    return True


def golay_pair(L: int) -> GolayPair:
    a, b, c = golay_factor(L)
    p = GOLAY_SEEDS[1]
    for seed, count in ((10, b), (26, c)):
        for _ in range(count):
            p = golay_turyn(p, GOLAY_SEEDS[seed]) if len(p.E) > 1 else GOLAY_SEEDS[seed]
    for _ in range(a):
        p = golay_double(p)
    if len(p.E) != L:
        raise ConstructionFailed(f"golay_pair built length {len(p.E)} instead of {L}")
    return _checked(p, "golay_pair")


def golay_search(L: int) -> GolayPair | None:
    """Exhaustive backtracking for a Golay pair of length L with e_1 = f_1 = +1.

    Fills both sequences from the two ends inwards; lag L-k is decided once
    k entries at each end are known.
    """
    if L < 1:
        return None
    E = [0] * L
    F = [0] * L
    E[0] = F[0] = 1

    def lag_ok(s: int) -> bool:
        return sum(E[i] * E[i + s] + F[i] * F[i + s] for i in range(L - s)) == 0

    def fill(k: int) -> bool:
        # positions 0..k-1 and L-k..L-1 known; place k and L-1-k
        lo, hi = k, L - 1 - k
        if lo > hi:
            return all(lag_ok(s) for s in range(1, L))
        choices_e = [(x, y) for x in (1, -1) for y in (1, -1)] if lo < hi else [(x, x) for x in (1, -1)]
        for ea, eb in choices_e:
            for fa, fb in choices_e:
                if lo == 0 and (ea != 1 or fa != 1):
                    continue
                E[lo], E[hi], F[lo], F[hi] = ea, eb, fa, fb
                if lag_ok(L - 1 - k) and fill(k + 1):
                    return True
        E[lo] = E[hi] = F[lo] = F[hi] = 0
        return False

    if L == 1:
        return GolayPair((1,), (1,))
    return GolayPair(tuple(E), tuple(F)) if fill(0) else None


def validate_seeds() -> None:
    for L, p in GOLAY_SEEDS.items():
        if len(p.E) != L or not golay_verify(p):
            raise ConstructionFailed(f"embedded Golay seed of length {L} fails verification")


def bs_from_golay(n: int) -> BaseQuadruple:
    """A normal member of BS(n+1, n): A = E|+, B = E|-, C = D = F."""
    E, F = golay_pair(n)
    if E[0] < 0:
        E = negate(E)
    q = BaseQuadruple(concat(E, (1,)), concat(E, (-1,)), F, F)
    if not bsq.is_bs(q):
        raise ConstructionFailed(f"bs_from_golay({n}) is not in BS({n + 1},{n})")
    return q


def is_t_sequences(t: TQuadruple) -> bool:
    L = len(t.X)
    if any(len(s) != L or not is_ternary(s) for s in t):
        return False
    if any(sum(1 for s in t if s[i]) != 1 for i in range(L)):
        return False
    return all(sum(autocorrelation(s, k) for s in t) == 0 for k in range(1, L))


def _half(u: Sequence[int], v: Sequence[int], sign: int) -> tuple[int, ...]:
    out = []
    for x, y in zip(u, v):
        total = x + sign * y
        if total % 2:
            raise ConstructionFailed("inexact halving of a +/- combination")
        out.append(total // 2)
    return tuple(out)


def bs_to_ts(q: BaseQuadruple) -> TQuadruple:
    if not bsq.is_bs(q):
        raise NotBaseSequences("bs_to_ts needs base sequences")
    m, n = q.m, q.n
    zm, zn = (0,) * m, (0,) * n
    t = TQuadruple(
        concat(_half(q.A, q.B, 1), zn),
        concat(_half(q.A, q.B, -1), zn),
        concat(zm, _half(q.C, q.D, 1)),
        concat(zm, _half(q.C, q.D, -1)),
    )
    if not is_t_sequences(t):
        raise ConstructionFailed(f"bs_to_ts gave invalid TS({m + n})")
    return t


def ts_to_complementary(t: TQuadruple) -> BaseQuadruple:
    if not is_t_sequences(t):
        raise NotTSequences("input is not a T-sequence quadruple")
    X, Y, Z, W = t
    A = tuple(x + y + z + w for x, y, z, w in zip(X, Y, Z, W))
    B = tuple(x + y - z - w for x, y, z, w in zip(X, Y, Z, W))
    C = tuple(x - y + z - w for x, y, z, w in zip(X, Y, Z, W))
    D = tuple(x - y - z + w for x, y, z, w in zip(X, Y, Z, W))
    q = BaseQuadruple(A, B, C, D)
    if not all(is_binary(s) for s in q) or not bsq.is_bs(q):
        raise ConstructionFailed("ts_to_complementary gave invalid BS(n,n)")
    return q


def ts_double(t: TQuadruple) -> TQuadruple:
    return bs_to_ts(ts_to_complementary(t))


@dataclass
class Derivation:
    t: int
    tseq: TQuadruple | None
    chain: list[str] = field(default_factory=list)

    @property
    def known(self) -> bool:
        return self.tseq is not None


WitnessSource = Callable[[int], "tuple[BaseQuadruple, str] | None"]


def ts_derive(t: int, sources: Iterable[WitnessSource]) -> Derivation:
    """Derive a TS(t) from the first source able to supply the needed BS(n+1, n).

    Odd t = 2n+1 uses a BS(n+1, n) directly; even t doubles a TS(t/2).
    The result is Unknown (``tseq is None``) when neither route applies.
    """
    sources = list(sources)
    if t < 1:
        return Derivation(t, None, [f"TS({t}): no such length"])
    if t % 2:
        n = (t - 1) // 2
        for src in sources:
            found = src(n)
            if found is None:
                continue
            q, origin = found
            ts = bs_to_ts(q)
            return Derivation(t, ts, [f"BS({n + 1},{n}) from {origin}", f"bs_to_ts -> TS({t})"])
        return Derivation(t, None, [f"TS({t}): no BS({n + 1},{n}) available"])
    half = ts_derive(t // 2, sources)
    if not half.known:
        return Derivation(t, None, half.chain + [f"TS({t}): cannot double unknown TS({t // 2})"])
    return Derivation(t, ts_double(half.tseq), half.chain + [f"ts_double -> TS({t})"])


def golay_source(n: int):
    if n >= 1 and is_golay_number(n):
        return bs_from_golay(n), f"bs_from_golay({n})"
    return None
