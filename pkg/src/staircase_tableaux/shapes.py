"""Partitions, strict partitions and (shifted) skew diagrams.

Cells are 1-based ``(row, col)`` pairs with row 1 on top. A shifted diagram
starts row ``i`` in column ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

Cell = tuple[int, int]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    def __new__(cls, parts: Iterable[int] = ()):
        if type(parts) is cls:
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part access, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class StrictPartition(Partition):
    """Strictly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        if type(parts) is cls:
            return parts
        self = super().__new__(cls, parts)
        if any(a == b for a, b in zip(self, self[1:])):
            raise ValueError(f"not a strict partition: {tuple(self)}")
        return self

    def __repr__(self) -> str:
        return f"StrictPartition({tuple(self)})"


def is_partition(parts: Iterable[int]) -> bool:
    try:
        Partition(parts)
    except ValueError:
        return False
    return True


def is_strict(parts: Iterable[int]) -> bool:
    try:
        StrictPartition(parts)
    except ValueError:
        return False
    return True


def conjugate(p: Iterable[int]) -> Partition:
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    outer, inner = tuple(outer), tuple(inner)
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


# -- named families ---------------------------------------------------------

def staircase(k: int) -> Partition:
    """delta_k = (k-1, ..., 2, 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Partition(range(k - 1, 0, -1))


def shifted_staircase(k: int) -> StrictPartition:
    if k < 1:
        raise ValueError("k must be >= 1")
    return StrictPartition(range(k - 1, 0, -1))


def rectangle(l: int, m: int) -> Partition:
    """``l`` rows of length ``m``."""
    if l < 0 or m < 0:
        raise ValueError("rectangle sides must be nonnegative")
    if l == 0 or m == 0:
        return Partition()
    return Partition([m] * l)


def trapezoid(l: int, m: int) -> StrictPartition:
    """(l+m-1, l+m-3, ..., |l-m|+1), with min(l, m) parts."""
    if l < 0 or m < 0:
        raise ValueError("trapezoid sides must be nonnegative")
    return StrictPartition(l + m - 1 - 2 * i for i in range(min(l, m)))


def make_family(kind: str, *params: int) -> Partition:
    builders = {
        "staircase": staircase,
        "shifted_staircase": shifted_staircase,
        "rectangle": rectangle,
        "trapezoid": trapezoid,
    }
    try:
        return builders[kind](*params)
    except KeyError:
        raise ValueError(f"unknown family {kind!r}") from None


# -- diagrams ---------------------------------------------------------------

@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()
    shifted: bool = False

    def __post_init__(self):
        kind = StrictPartition if self.shifted else Partition
        object.__setattr__(self, "outer", kind(self.outer))
        object.__setattr__(self, "inner", kind(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{tuple(self.inner)} is not contained in {tuple(self.outer)}")

    @classmethod
    def straight(cls, outer, inner=()) -> "SkewShape":
        return cls(Partition(outer), Partition(inner), False)

    @classmethod
    def shifted_shape(cls, outer, inner=()) -> "SkewShape":
        return cls(StrictPartition(outer), StrictPartition(inner), True)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def offset(self, row: int) -> int:
        return row - 1 if self.shifted else 0

    def row_range(self, row: int) -> range:
        """Columns occupied by ``row``."""
        off = self.offset(row)
        return range(off + self.inner.part(row) + 1, off + self.outer.part(row) + 1)

    @cached_property
    def _cells(self) -> tuple[Cell, ...]:
        return _shape_cells(self.outer, self.inner, self.shifted)

    def cells(self) -> list[Cell]:
        """Cells in row-major order (which is also sorted order)."""
        return list(self._cells)

    def __contains__(self, cell) -> bool:
        r, c = cell
        return 1 <= r <= len(self.outer) and c in self.row_range(r)

    def in_outer(self, cell: Cell) -> bool:
        r, c = cell
        off = self.offset(r)
        return r >= 1 and off < c <= off + self.outer.part(r)

    def in_inner(self, cell: Cell) -> bool:
        r, c = cell
        off = self.offset(r)
        return r >= 1 and off < c <= off + self.inner.part(r)

    def is_straight(self) -> bool:
        return not self.inner

    def conjugate(self) -> "SkewShape":
        if self.shifted:
            raise ValueError("shifted shapes have no conjugate")
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner), "shifted": self.shifted}

    @classmethod
    def from_json(cls, obj) -> "SkewShape":
        if isinstance(obj, list):
            return cls(Partition(obj))
        return cls(obj["outer"], obj.get("inner", []), bool(obj.get("shifted", False)))

    def __str__(self) -> str:
        core = f"{tuple(self.outer)}/{tuple(self.inner)}" if self.inner else f"{tuple(self.outer)}"
        return ("shifted " if self.shifted else "") + core


@lru_cache(maxsize=4096)
def _shape_cells(outer: Partition, inner: Partition, shifted: bool) -> tuple[Cell, ...]:
    out = []
    for r in range(1, len(outer) + 1):
        off = r - 1 if shifted else 0
        out.extend((r, c) for c in range(off + inner.part(r) + 1, off + outer.part(r) + 1))
    return tuple(out)


def shape_of(cells: Iterable[Cell], shifted: bool = False) -> SkewShape:
    """Recover the skew shape occupied by ``cells`` (rows are contiguous runs)."""
    cells = list(cells)
    rows: dict[int, list[int]] = {}
    for r, c in cells:
        rows.setdefault(r, []).append(c)
    if not rows:
        return SkewShape(Partition(), Partition(), shifted)
    nrows = max(rows)
    outer, inner = [], []
    for r in range(1, nrows + 1):
        cols = sorted(rows.get(r, []))
        off = r - 1 if shifted else 0
        if cols and cols != list(range(cols[0], cols[-1] + 1)):
            raise ValueError(f"row {r} is not contiguous")
        if cols:
            outer.append(cols[-1] - off)
            inner.append(cols[0] - 1 - off)
        else:
            outer.append(None)
            inner.append(None)
    # empty rows inherit the bounds of the row below so both stay monotone
    for r in range(nrows - 1, -1, -1):
        if outer[r] is None:
            below = outer[r + 1]
            outer[r] = inner[r] = below + 1 if shifted else below
    kind = StrictPartition if shifted else Partition
    try:
        shape = SkewShape(kind(outer), kind(inner), shifted)
    except ValueError as exc:
        raise ValueError(f"cells do not form a skew diagram: {exc}") from None
    if set(shape.cells()) != set(cells):
        raise ValueError("cells do not form a skew diagram")
    return shape


# -- operations -------------------------------------------------------------

def subtract_reflect(outer: Iterable[int], inner: Iterable[int]) -> StrictPartition:
    """Strict partition whose shifted diagram is the anti-diagonal mirror of ``outer/inner``.

    The mirror is taken in the square of side ``outer[0] + 1``, which maps a
    shifted staircase onto itself: ``(i, j) -> (N - j, N - i)``.
    """
    outer, inner = StrictPartition(outer), StrictPartition(inner)
    if not contains(outer, inner):
        raise ValueError(f"{tuple(inner)} is not contained in {tuple(outer)}")
    if not outer:
        return StrictPartition()
    big = outer[0] + 1
    skew = SkewShape(outer, inner, True)
    mirrored = [(big - c, big - r) for r, c in skew.cells()]
    if not mirrored:
        return StrictPartition()
    shape = shape_of(mirrored, shifted=True)
    if shape.inner:
        raise ValueError("reflection is not a straight shifted shape")
    return StrictPartition(shape.outer)


def reflect_cell(cell: Cell, big: int) -> Cell:
    r, c = cell
    return (big - c, big - r)


def cell_census(s: Iterable[int]) -> tuple[int, int]:
    """(diagonal cells, off-diagonal cells) of a shifted diagram."""
    s = StrictPartition(s)
    return len(s), sum(s) - len(s)


def corners(shape: SkewShape) -> tuple[list[Cell], list[Cell]]:
    """Inner corners (maximal cells of the inner diagram) and outer corners
    (minimal cells outside the outer diagram)."""
    inner_diag = SkewShape(shape.inner, (), shape.shifted)
    inner_cells = set(inner_diag.cells())
    inner_corners = [
        (r, c) for r, c in sorted(inner_cells)
        if (r + 1, c) not in inner_cells and (r, c + 1) not in inner_cells
    ]
    outer = shape.outer
    outer_corners = []
    for r in range(1, len(outer) + 2):
        c = shape.offset(r) + outer.part(r) + 1
        cell = (r, c)
        above_ok = r == 1 or shape.in_outer((r - 1, c))
        if shape.shifted:
            left_ok = c == r or shape.in_outer((r, c - 1))
            if r > 1 and c == r:
                above_ok = shape.in_outer((r - 1, c))
        else:
            left_ok = c == 1 or shape.in_outer((r, c - 1))
        if above_ok and left_ok:
            outer_corners.append(cell)
    return inner_corners, outer_corners


def removable_cells(shape: SkewShape) -> list[Cell]:
    """Maximal cells of the skew diagram (where a largest entry can sit)."""
    cells = set(shape.cells())
    return [(r, c) for r, c in sorted(cells) if (r + 1, c) not in cells and (r, c + 1) not in cells]


def iter_strict_partitions_inside(outer: Iterable[int]) -> Iterator[StrictPartition]:
    outer = tuple(outer)

    def rec(i, prev, acc):
        yield StrictPartition(acc)
        if i >= len(outer):
            return
        for p in range(1, min(outer[i], prev - 1) + 1):
            yield from rec(i + 1, p, acc + [p])

    yield from rec(0, 10**9, [])


def iter_partitions_inside(outer: Iterable[int]) -> Iterator[Partition]:
    outer = tuple(outer)

    def rec(i, prev, acc):
        yield Partition(acc)
        if i >= len(outer):
            return
        for p in range(1, min(outer[i], prev) + 1):
            yield from rec(i + 1, p, acc + [p])

    yield from rec(0, 10**9, [])


def iter_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    max_part = n if max_part is None else max_part
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in iter_partitions(n - first, first):
            yield Partition((first, *rest))
