"""Membership in BS(m, n), sums profiles, Gamma vertices and the symmetry group."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from . import codec
from .errors import BadLength, NotBaseSequences, NotInAlphabet, NotNormalized, ParityUndefined
from .seqcore import BaseQuadruple, autocorrelation, eval_minus, eval_plus, negate, reverse

__all__ = [
    "BaseQuadruple",
    "BSCheck",
    "SumsProfile",
    "Partition4",
    "is_bs",
    "check_bs",
    "sums_profile",
    "vertex",
    "covertex",
    "is_normal",
    "is_near_normal",
    "parity_class",
    "GENERATORS",
    "symmetry_apply",
    "orbit",
    "canonicalize",
]


class BSCheck(NamedTuple):
    ok: bool
    failing_lag: int | None
    residual: int


def check_bs(q: BaseQuadruple) -> BSCheck:
    """Return the first lag whose combined autocorrelation is nonzero, if any."""
    q.check_lengths()
    for lag in range(1, max(q.m, q.n)):
        r = sum(autocorrelation(x, lag) for x in q)
        if r:
            return BSCheck(False, lag, r)
    return BSCheck(True, None, 0)


def is_bs(q: BaseQuadruple) -> bool:
    return check_bs(q).ok


class SumsProfile(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    a_star: int
    b_star: int
    c_star: int
    d_star: int

    @property
    def plain(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def starred(self) -> tuple[int, int, int, int]:
        return (self.a_star, self.b_star, self.c_star, self.d_star)


def sums_profile(q: BaseQuadruple) -> SumsProfile:
    return SumsProfile(*(eval_plus(x) for x in q), *(eval_minus(x) for x in q))


@dataclass(frozen=True, order=True)
class Partition4:
    """Four nonnegative roots whose squares are listed in decreasing order."""

    roots: tuple[int, int, int, int]

    @classmethod
    def from_values(cls, values) -> "Partition4":
        roots = sorted((abs(v) for v in values), reverse=True)
        if len(roots) != 4:
            raise ValueError("a partition needs exactly four parts")
        return cls(tuple(roots))

    @property
    def squares(self) -> tuple[int, int, int, int]:
        return tuple(r * r for r in self.roots)

    @property
    def total(self) -> int:
        return sum(self.squares)

    def even_roots(self) -> list[int]:
        return [r for r in self.roots if r % 2 == 0]

    def label(self) -> str:
        return "+".join(f"{r}^2" for r in self.roots)

    def __str__(self) -> str:
        return "(" + ",".join(f"{r}^2" if r > 1 else str(r) for r in self.roots) + ")"


def _require_bs(q: BaseQuadruple) -> None:
    if q.m != q.n + 1:
        raise BadLength(f"expected BS(n+1,n) lengths, got m={q.m}, n={q.n}")
    res = check_bs(q)
    if not res.ok:
        raise NotBaseSequences(f"combined autocorrelation {res.residual} at lag {res.failing_lag}")


def vertex(q: BaseQuadruple, check: bool = True) -> Partition4:
    if check:
        _require_bs(q)
    return Partition4.from_values(sums_profile(q).plain)


def covertex(q: BaseQuadruple, check: bool = True) -> Partition4:
    if check:
        _require_bs(q)
    return Partition4.from_values(sums_profile(q).starred)


def is_normal(q: BaseQuadruple) -> bool:
    n = q.n
    return q.m == n + 1 and all(q.B[i] == q.A[i] for i in range(n))


def is_near_normal(q: BaseQuadruple) -> bool:
    n = q.n
    # index origin 1: b_1 = a_1, b_2 = -a_2, ...
    return q.m == n + 1 and all(q.B[i] == (q.A[i] if i % 2 == 0 else -q.A[i]) for i in range(n))


EVEN = "even"
ODD = "odd"


def parity_class(p: Partition4 | BaseQuadruple, n: int | None = None) -> str:
    """Class of a vertex for even n: ``"even"`` iff its two even roots are 0 mod 4."""
    if isinstance(p, BaseQuadruple):
        n = p.n if n is None else n
        p = vertex(p)
    if n is None:
        n = (p.total - 2) // 4
    if n % 2:
        raise ParityUndefined(f"vertex parity is defined only for even n (got n={n})")
    evens = p.even_roots()
    if len(evens) != 2 or (evens[0] - evens[1]) % 4:
        raise ParityUndefined(f"{p} does not have two even roots congruent mod 4")
    return EVEN if evens[0] % 4 == 0 else ODD


# Symmetry group: ten generators acting on quadruples.
# ("neg", k) negates sequence k, ("rev", k) reverses it, ("swapAB",), ("swapCD",).
GENERATORS: tuple[tuple, ...] = (
    *(("neg", k) for k in range(4)),
    *(("rev", k) for k in range(4)),
    ("swapAB",),
    ("swapCD",),
)


def symmetry_apply(g: tuple, q: BaseQuadruple) -> BaseQuadruple:
    kind = g[0]
    seqs = list(q)
    if kind == "neg":
        seqs[g[1]] = negate(seqs[g[1]])
    elif kind == "rev":
        seqs[g[1]] = reverse(seqs[g[1]])
    elif kind == "swapAB":
        seqs[0], seqs[1] = seqs[1], seqs[0]
    elif kind == "swapCD":
        seqs[2], seqs[3] = seqs[3], seqs[2]
    else:
        raise ValueError(f"unknown generator {g!r}")
    return BaseQuadruple(*seqs)


def orbit(q: BaseQuadruple) -> Iterator[BaseQuadruple]:
    """All images of q under the group generated by GENERATORS (at most 1024, without repeats)."""
    seen = set()
    variants = []
    for k in range(4):
        s = q[k]
        variants.append([s, negate(s), reverse(s), negate(reverse(s))])
    for ia, ib, ic, id_ in itertools.product(range(4), repeat=4):
        A, B, C, D = variants[0][ia], variants[1][ib], variants[2][ic], variants[3][id_]
        for swap_ab in (False, True):
            for swap_cd in (False, True):
                img = BaseQuadruple(*((B, A) if swap_ab else (A, B)), *((D, C) if swap_cd else (C, D)))
                if img not in seen:
                    seen.add(img)
                    yield img


def _pair_images(x, y) -> Iterator[tuple]:
    # the 32 images of one pair under negation, reversal and swapping
    xs = (x, negate(x), reverse(x), negate(reverse(x)))
    ys = (y, negate(y), reverse(y), negate(reverse(y)))
    for u in xs:
        for v in ys:
            yield u, v
            yield v, u


def _least_code(x, y, first_label0: bool) -> str | None:
    best = None
    for u, v in _pair_images(x, y):
        try:
            code = codec.encode_pair(u, v, first_label0)
        except (NotNormalized, NotInAlphabet):
            continue
        if best is None or code < best:
            best = code
    return best


def canonicalize(q: BaseQuadruple, check: bool = True) -> codec.CodePair:
    """Lexicographically least code over the orbit members whose first quad is label 0.

    The group acts on (A;B) and (C;D) independently, so each half of the
    code is minimized on its own.
    """
    if check:
        _require_bs(q)
    ab = _least_code(q.A, q.B, first_label0=q.n > 0)
    cd = _least_code(q.C, q.D, first_label0=False)
    if ab is None or cd is None:
        raise NotInAlphabet("no orbit member is encodable")
    return codec.CodePair(ab, cd, q.n)
