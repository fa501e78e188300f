"""The 18 starting cases (three AB quads, two CD quads) for odd and even n."""
from __future__ import annotations

from typing import NamedTuple


class CaseSpec(NamedTuple):
    id: int
    ab: tuple[int, ...]
    cd: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(map(str, self.ab)) + "; " + "".join(map(str, self.cd))


_ODD = "065;11 066;11 068;11 061;12 063;12 064;12 061;16 063;16 064;16 016;61 017;61 018;61 016;64 017;64 018;64 011;66 012;66 013;66"
_EVEN = "076;12 077;12 078;12 076;16 077;16 078;16 071;18 072;18 073;18 065;11 066;11 068;11 061;12 063;12 064;12 061;16 063;16 064;16"


def _parse(table: str) -> list[CaseSpec]:
    out = []
    for i, item in enumerate(table.split(), 1):
        ab, cd = item.split(";")
        out.append(CaseSpec(i, tuple(map(int, ab)), tuple(map(int, cd))))
    return out


ODD_CASES = _parse(_ODD)
EVEN_CASES = _parse(_EVEN)


def case_table(parity: int | str) -> list[CaseSpec]:
    """Cases for ``parity`` 1 / "odd" or 0 / "even"."""
    if parity in (1, "odd"):
        return list(ODD_CASES)
    if parity in (0, "even"):
        return list(EVEN_CASES)
    raise ValueError(f"parity must be odd or even, got {parity!r}")


def case(n: int, case_id: int) -> CaseSpec:
    table = case_table(n % 2)
    if not 1 <= case_id <= len(table):
        raise ValueError(f"case id must be 1..{len(table)}")
    return table[case_id - 1]
