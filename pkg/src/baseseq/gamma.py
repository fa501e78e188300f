"""Gamma_n graphs: vertices are the partitions of 4n+2 into four squares.

A witness in BS(n+1, n) contributes the loop or edge joining the partitions
formed by its plain sums and by its alternating sums.  The conjectured
shapes are complete graphs with loops (n odd), complete bipartite graphs
between the parity classes (n = 2 mod 4), and two complete-with-loops
components (n = 0 mod 4, except 4, 8, 12).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import codec
from .bsq import EVEN, Partition4, check_bs, covertex, parity_class, vertex
from .errors import BadLength, NotBaseSequences, VertexNotFound
from .seqcore import BaseQuadruple

EXCEPTED_N = frozenset({4, 8, 12})


def four_square_partitions(N: int) -> list[Partition4]:
    """All w >= x >= y >= z >= 0 with w^2+x^2+y^2+z^2 = N, in decreasing lexicographic order."""
    out = []
    w = math.isqrt(N)
    while w >= 0 and 4 * w * w >= N:
        r1 = N - w * w
        x = min(w, math.isqrt(r1))
        while x >= 0 and 3 * x * x >= r1:
            r2 = r1 - x * x
            y = min(x, math.isqrt(r2))
            while y >= 0 and 2 * y * y >= r2:
                r3 = r2 - y * y
                z = math.isqrt(r3)
                if z * z == r3 and z <= y:
                    out.append(Partition4((w, x, y, z)))
                y -= 1
            x -= 1
        w -= 1
    return out


def vertex_order(n: int) -> list[Partition4]:
    parts = four_square_partitions(4 * n + 2)
    if n % 2:
        return parts
    even = [p for p in parts if parity_class(p, n) == EVEN]
    odd = [p for p in parts if parity_class(p, n) != EVEN]
    return even + odd


def nu_counts(n: int) -> int | tuple[int, int]:
    """Vertex count for odd n; (even-class, odd-class) counts for even n."""
    parts = four_square_partitions(4 * n + 2)
    if n % 2:
        return len(parts)
    nu0 = sum(1 for p in parts if parity_class(p, n) == EVEN)
    return (nu0, len(parts) - nu0)


def edge_key(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i <= j else (j, i)


def format_edge(key: tuple[int, int]) -> str:
    return f"{key[0]}-{key[1]}"


def parse_edge(text: str) -> tuple[int, int]:
    i, j = text.strip().split("-")
    return edge_key(int(i), int(j))


def _index_of(order: list[Partition4], p: Partition4) -> int:
    try:
        return order.index(p) + 1
    except ValueError:
        raise VertexNotFound(f"{p} is not a vertex") from None


def edge_of(q: BaseQuadruple, order: list[Partition4] | None = None) -> tuple[int, int]:
    if order is None:
        order = vertex_order(q.n)
    return edge_key(_index_of(order, vertex(q)), _index_of(order, covertex(q)))


def edge_id(q: BaseQuadruple) -> str:
    return format_edge(edge_of(q))


@dataclass
class ExpectedGamma:
    n: int
    kind: str  # complete_with_loops | complete_bipartite | two_complete_with_loops | excepted
    nu: tuple[int, ...]
    edges: frozenset  # of (i, j) keys, loops are (i, i)

    @property
    def loops(self) -> set[int]:
        return {i for i, j in self.edges if i == j}


def expected_gamma(n: int) -> ExpectedGamma:
    nv = len(four_square_partitions(4 * n + 2))
    if n % 2:
        edges = frozenset((i, j) for i in range(1, nv + 1) for j in range(i, nv + 1))
        return ExpectedGamma(n, "complete_with_loops", (nv,), edges)
    nu0, nu1 = nu_counts(n)
    even = range(1, nu0 + 1)
    odd = range(nu0 + 1, nv + 1)
    if n in EXCEPTED_N:
        return ExpectedGamma(n, "excepted", (nu0, nu1), frozenset())
    if n % 4 == 2:
        edges = frozenset((i, j) for i in even for j in odd)
        return ExpectedGamma(n, "complete_bipartite", (nu0, nu1), edges)
    edges = frozenset(
        [(i, j) for i in even for j in even if i <= j] + [(i, j) for i in odd for j in odd if i <= j]
    )
    return ExpectedGamma(n, "two_complete_with_loops", (nu0, nu1), edges)


@dataclass
class GammaGraph:
    n: int
    vertices: list[Partition4]
    witnesses: dict[tuple[int, int], list[codec.CodePair]] = field(default_factory=dict)

    @property
    def edges(self) -> set[tuple[int, int]]:
        return set(self.witnesses)

    @property
    def loops(self) -> set[int]:
        return {i for i, j in self.witnesses if i == j}

    def add(self, code: codec.CodePair, q: BaseQuadruple | None = None) -> tuple[int, int]:
        if q is None:
            q = codec.decode(code)
        key = edge_of(q, self.vertices)
        self.witnesses.setdefault(key, []).append(code)
        return key

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "vertices": [list(p.roots) for p in self.vertices],
            "loops": sorted(self.loops),
            "edges": [list(k) for k in sorted(self.edges) if k[0] != k[1]],
            "witnesses": {format_edge(k): [str(c) for c in v] for k, v in sorted(self.witnesses.items())},
        }
        return json.dumps(doc, indent=2)

    def to_dot(self) -> str:
        lines = [f"graph Gamma_{self.n} {{"]
        for i, p in enumerate(self.vertices, 1):
            lines.append(f'    {i} [label="{p.label()}"];')
        for i, j in sorted(self.edges):
            lines.append(f"    {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_gamma(witnesses: Iterable[codec.CodePair], n: int) -> GammaGraph:
    g = GammaGraph(n, vertex_order(n))
    for row, code in enumerate(witnesses, 1):
        try:
            if code.n != n:
                raise BadLength(f"witness is for n={code.n}")
            q = codec.decode(code)
            res = check_bs(q)
            if not res.ok:
                raise NotBaseSequences(f"nonzero residual {res.residual} at lag {res.failing_lag}")
            g.add(code, q)
        except ValueError as exc:
            raise type(exc)(f"witness {row} ({code}): {exc}") from exc
    return g


@dataclass
class Comparison:
    present: list[tuple[int, int]]
    missing: list[tuple[int, int]]
    extra: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra

    def to_tsv(self, graph: GammaGraph | None = None) -> str:
        lines = ["edge\tstatus\twitness"]
        rows = [(k, "present") for k in self.present] + [(k, "missing") for k in self.missing]
        rows += [(k, "extra") for k in self.extra]
        for key, status in sorted(rows):
            w = ""
            if graph is not None and key in graph.witnesses:
                w = str(graph.witnesses[key][0])
            lines.append(f"{format_edge(key)}\t{status}\t{w}")
        return "\n".join(lines) + "\n"


def compare(built: GammaGraph, expected: ExpectedGamma) -> Comparison:
    have = built.edges
    want = set(expected.edges)
    return Comparison(sorted(have & want), sorted(want - have), sorted(have - want))


def question_coverage(limit: int) -> tuple[list[int], list[int]]:
    """Even integers <= limit outside {4x+y : x,y in T2} and odd ones outside {2x+y : x in S2, y in T2}.

    S2 / T2 are the sums of two squares / two triangular numbers.
    """
    if limit < 0:
        return [], []
    size = limit + 1
    squares = np.arange(math.isqrt(limit) + 1) ** 2
    k = np.arange(math.isqrt(2 * limit) + 2)
    tri = k * (k + 1) // 2
    tri = tri[tri <= limit]

    def two_sums(vals: np.ndarray) -> np.ndarray:
        s = (vals[:, None] + vals[None, :]).ravel()
        mask = np.zeros(size, dtype=bool)
        mask[s[s <= limit]] = True
        return mask

    s2 = two_sums(squares)
    t2 = two_sums(tri)
    t2_vals = np.flatnonzero(t2)

    even_hit = np.zeros(size, dtype=bool)
    for x in t2_vals:
        if 4 * x > limit:
            break
        even_hit[4 * x:] |= t2[: size - 4 * x]
    odd_hit = np.zeros(size, dtype=bool)
    for x in np.flatnonzero(s2):
        if 2 * x > limit:
            break
        odd_hit[2 * x:] |= t2[: size - 2 * x]

    idx = np.arange(size)
    uncovered_even = idx[(idx % 2 == 0) & ~even_hit].tolist()
    uncovered_odd = idx[(idx % 2 == 1) & ~odd_hit].tolist()
    return uncovered_even, uncovered_odd
