"""Integer partitions, Young-diagram cell statistics and horizontal strips.

Cells are 1-based ``(row, column)`` pairs in English notation: row 1 is the
longest row, and column j of row i exists iff ``j <= lambda_i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    CellOutsideDiagram,
    InvalidPartition,
    InvalidStrip,
    WeightMismatch,
)


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    The empty partition ``Partition()`` is a normal value.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise InvalidPartition(f"entry {i} ({p!r}) is not a positive integer", position=i)
            if i and p > parts[i - 1]:
                raise InvalidPartition(f"entry {i} ({p}) exceeds entry {i - 1} ({parts[i - 1]})", position=i)
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> Partition:
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def part(self, i: int) -> int:
        """lambda_i with 1-based i; zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> Iterator[Cell]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield Cell(i, j)

    def contains(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        if not self:
            return "()"
        sep = "," if max(self) >= 10 else ""
        return sep.join(str(p) for p in self)


class Cell(NamedTuple):
    row: int
    col: int


class CellStats(NamedTuple):
    arm: int
    arm_colength: int
    leg: int
    leg_colength: int


@dataclass(frozen=True)
class HorizontalStrip:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        outer, inner = Partition(self.outer), Partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if not is_horizontal_strip(outer, inner):
            raise InvalidStrip(f"{list(outer)}/{list(inner)} is not a horizontal strip")

    def cells(self) -> set[Cell]:
        return {Cell(i, j) for i in range(1, len(self.outer) + 1)
                for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)}

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight


# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _conjugate(parts: tuple) -> tuple:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def conjugate(lam: Partition) -> Partition:
    return Partition._trusted(_conjugate(tuple(lam)))


def cell_stats(lam: Partition, s: Cell) -> CellStats:
    """Arm, arm-colength, leg and leg-colength of cell s in lam."""
    i, j = s
    if i < 1 or j < 1 or i > len(lam) or j > lam[i - 1]:
        raise CellOutsideDiagram(f"cell {(i, j)} is not in {list(lam)}")
    conj = _conjugate(tuple(lam))
    return CellStats(lam[i - 1] - j, j - 1, conj[j - 1] - i, i - 1)


def arm(lam: Partition, s: Cell) -> int:
    return cell_stats(lam, s).arm


def leg(lam: Partition, s: Cell) -> int:
    return cell_stats(lam, s).leg


def n_stat(lam: Partition) -> int:
    return sum(i * p for i, p in enumerate(lam))


def union(lam: Partition, mu: Partition) -> Partition:
    return Partition._trusted(tuple(sorted(tuple(lam) + tuple(mu), reverse=True)))


def rectangle(r: int, l: int) -> Partition:
    """The partition (r^l)."""
    return Partition._trusted((r,) * l) if r > 0 else Partition()


def repeat_parts(nu: Partition, l: int) -> Partition:
    """nu^l: every part of nu repeated l times."""
    return Partition._trusted(tuple(p for p in nu for _ in range(l)))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff lam <= mu in dominance order."""
    if sum(lam) != sum(mu):
        raise WeightMismatch(f"{list(lam)} and {list(mu)} have different weights")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


@lru_cache(maxsize=None)
def _partitions(n: int, maxpart: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int, max_part: int | None = None, max_length: int | None = None) -> list[Partition]:
    """Partitions of n in reverse-lexicographic order: (n), (n-1, 1), ..., (1^n).

    This order is a linear extension of dominance (larger first).
    """
    if n < 0:
        return []
    res = (Partition._trusted(p) for p in _partitions(n, n if max_part is None else max_part))
    if max_length is not None:
        return [p for p in res if len(p) <= max_length]
    return list(res)


def sort_key(lam: Partition) -> tuple:
    """Key ordering by weight, then reverse-lex within a weight."""
    return (sum(lam), tuple(-p for p in lam))


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """outer/inner is a horizontal strip: interlacing outer_{i+1} <= inner_i <= outer_i."""
    if not Partition(outer).contains(inner):
        return False
    for i in range(1, len(outer)):
        if outer[i] > (inner[i - 1] if i - 1 < len(inner) else 0):
            return False
    return True


def horizontal_strips(mu: Partition, r: int) -> list[Partition]:
    """All lam with lam/mu a horizontal strip of size r, in reverse-lex order.

    Built column-wise: row i of lam lies in [mu_i, mu_{i-1}] (row 1 unbounded),
    plus at most one new row of length <= mu_last.
    """
    mu = tuple(mu)
    out: list[tuple] = []
    rows = len(mu) + 1
    bounds = [(mu[i] if i < len(mu) else 0, (mu[i - 1] if i > 0 else mu[0] + r if mu else r)) for i in range(rows)]

    def rec(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                out.append(tuple(p for p in acc if p > 0))
            return
        lo, hi = bounds[i]
        for val in range(min(hi, lo + left), lo - 1, -1):
            acc.append(val)
            rec(i + 1, left - (val - lo), acc)
            acc.pop()

    rec(0, r, [])
    return [Partition._trusted(p) for p in sorted(set(out), key=lambda p: tuple(-x for x in p))]


def strip_row_column_sets(outer: Partition, inner: Partition) -> tuple[set[Cell], set[Cell]]:
    """(R, C): cells of outer in rows, resp. columns, that meet the strip."""
    strip = HorizontalStrip(outer, inner)
    theta = strip.cells()
    rows = {c.row for c in theta}
    cols = {c.col for c in theta}
    cells = set(strip.outer.cells())
    return {c for c in cells if c.row in rows}, {c for c in cells if c.col in cols}


def strip_D_set(outer: Partition, inner: Partition) -> set[Cell]:
    """Cells of ``outer`` lying in a row that meets the strip but in no column meeting it.

    These are exactly the cells carrying a factor in the Pieri coefficient
    psi_{outer/inner}; each shares its row with a unique connected component
    of the strip.
    """
    rows, cols = strip_row_column_sets(outer, inner)
    return rows - cols


def strip_component_columns(outer: Partition, inner: Partition, row: int) -> set[int]:
    """Columns of the strip cells in ``row`` (the set J_s for cells s of that row)."""
    outer, inner = Partition(outer), Partition(inner)
    return set(range(inner.part(row) + 1, outer.part(row) + 1))
