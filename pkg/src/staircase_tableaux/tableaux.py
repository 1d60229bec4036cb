"""Tableau containers, descent sets, mark toggling and exhaustive enumerators.

A :class:`Tableau` is an immutable map from cells of a :class:`SkewShape` to
entries. Entries are plain ``int`` (standard and semistandard tableaux),
:class:`Letter` (marked shifted tableaux), or ``frozenset`` of either
(set-valued tableaux). The validity predicates below decide which family a
given tableau belongs to.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import total_ordering
from itertools import product
from typing import Any, Callable, Iterable, Iterator, Mapping

from .shapes import Cell, SkewShape, shape_of

DEFAULT_MAX_CELLS = 16
DEFAULT_MAX_SET_SIZE = 10


@total_ordering
@dataclass(frozen=True)
class Letter:
    """A possibly marked positive integer, ordered 1' < 1 < 2' < 2 < ..."""

    value: int
    marked: bool = False

    @property
    def key(self) -> int:
        return 2 * self.value - (1 if self.marked else 0)

    def __lt__(self, other):
        if isinstance(other, Letter):
            return self.key < other.key
        return NotImplemented

    def toggled(self) -> "Letter":
        return Letter(self.value, not self.marked)

    def __str__(self) -> str:
        return f"{self.value}'" if self.marked else str(self.value)

    __repr__ = __str__


def value_of(entry) -> int:
    return entry.value if isinstance(entry, Letter) else entry


def is_marked(entry) -> bool:
    return isinstance(entry, Letter) and entry.marked


class Tableau:
    """Immutable filling of a skew shape."""

    __slots__ = ("shape", "_entries", "_hash")

    def __init__(self, shape: SkewShape, entries: Mapping[Cell, Any]):
        cells = shape._cells
        if len(entries) != len(cells) or not all(c in entries for c in cells):
            raise ValueError(f"entries do not cover the shape {shape}")
        self.shape = shape
        self._entries = {c: entries[c] for c in cells}
        self._hash = None

    @classmethod
    def from_cells(cls, entries: Mapping[Cell, Any], shifted: bool = False) -> "Tableau":
        return cls(shape_of(entries, shifted), entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]], inner: Iterable[int] = (),
                  shifted: bool = False) -> "Tableau":
        """Build from the entries of each row, left to right; ``None`` marks an inner cell
        may be used instead of ``inner``."""
        rows = [list(r) for r in rows]
        inner = list(inner)
        entries = {}
        outer, inner_parts = [], []
        for i, row in enumerate(rows, start=1):
            skip = inner[i - 1] if i - 1 < len(inner) else 0
            while skip < len(row) and row[skip] is None:
                skip += 1
            vals = row[skip:]
            if any(v is None for v in vals):
                raise ValueError("inner cells must be a prefix of the row")
            off = i - 1 if shifted else 0
            for j, v in enumerate(vals):
                entries[(i, off + skip + j + 1)] = v
            outer.append(skip + len(vals))
            inner_parts.append(skip)
        shape = SkewShape(tuple(outer), tuple(inner_parts), shifted)
        return cls(shape, entries)

    # -- mapping protocol ---------------------------------------------------
    def __getitem__(self, cell: Cell):
        return self._entries[cell]

    def get(self, cell: Cell, default=None):
        return self._entries.get(cell, default)

    def __contains__(self, cell) -> bool:
        return cell in self._entries

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def items(self):
        return self._entries.items()

    def cells(self) -> list[Cell]:
        return list(self._entries)

    def entries(self) -> dict[Cell, Any]:
        return dict(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, tuple(self._entries.items())))
        return self._hash

    # -- derived views ------------------------------------------------------
    @property
    def size(self) -> int:
        """Number of cells, or the number of values for set-valued fillings."""
        total = 0
        for v in self._entries.values():
            total += len(v) if isinstance(v, frozenset) else 1
        return total

    def rows(self) -> list[list[Any]]:
        out: list[list[Any]] = [[] for _ in range(len(self.shape.outer))]
        for (r, _), v in self._entries.items():
            out[r - 1].append(v)
        return out

    def row_cells(self, r: int) -> list[Cell]:
        return [(r, c) for c in self.shape.row_range(r)]

    def position(self) -> dict[int, Cell]:
        """Value -> cell for standard (possibly marked or set-valued) fillings."""
        pos = {}
        for cell, v in self._entries.items():
            for x in (v if isinstance(v, frozenset) else (v,)):
                pos[value_of(x)] = cell
        return pos

    def map(self, f: Callable[[Any], Any]) -> "Tableau":
        return Tableau(self.shape, {c: f(v) for c, v in self._entries.items()})

    def restrict(self, cells: Iterable[Cell], shifted: bool | None = None) -> "Tableau":
        cells = set(cells)
        shifted = self.shape.shifted if shifted is None else shifted
        return Tableau.from_cells({c: v for c, v in self._entries.items() if c in cells}, shifted)

    def transpose(self) -> "Tableau":
        if self.shape.shifted:
            raise ValueError("cannot transpose a shifted tableau")
        return Tableau(self.shape.conjugate(), {(c, r): v for (r, c), v in self._entries.items()})

    def unmarked(self) -> "Tableau":
        return self.map(value_of)

    def marked_cells(self) -> frozenset[Cell]:
        return frozenset(c for c, v in self._entries.items() if is_marked(v))

    def __str__(self) -> str:
        lines = []
        width = max((len(_fmt(v)) for v in self._entries.values()), default=1)
        for r in range(1, len(self.shape.outer) + 1):
            cols = self.shape.row_range(r)
            lead = cols.start - 1
            body = " ".join(_fmt(self._entries[(r, c)]).rjust(width) for c in cols)
            lines.append(" " * ((width + 1) * lead) + body)
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"Tableau({self.shape}, rows={self.rows()})"

    # -- JSON ---------------------------------------------------------------
    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "rows": [[_entry_to_json(v) for v in row] for row in self.rows()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj) -> "Tableau":
        if isinstance(obj, str):
            obj = json.loads(obj)
        shape = SkewShape.from_json(obj["shape"])
        entries = {}
        for r, row in enumerate(obj["rows"], start=1):
            cols = list(shape.row_range(r))
            if len(cols) != len(row):
                raise ValueError(f"row {r} has {len(row)} entries, shape needs {len(cols)}")
            for c, v in zip(cols, row):
                entries[(r, c)] = _entry_from_json(v)
        return cls(shape, entries)


def _fmt(v) -> str:
    if isinstance(v, frozenset):
        return "{" + ",".join(str(x) for x in sorted(v, key=_sort_key)) + "}"
    return str(v)


def _sort_key(x):
    return x.key if isinstance(x, Letter) else 2 * x


def _entry_to_json(v):
    if isinstance(v, frozenset):
        return [_entry_to_json(x) for x in sorted(v, key=_sort_key)]
    if isinstance(v, Letter):
        return str(v) if v.marked else v.value
    return v


def _entry_from_json(v):
    if isinstance(v, list):
        return frozenset(_entry_from_json(x) for x in v)
    if isinstance(v, str):
        if v.endswith("'"):
            return Letter(int(v[:-1]), True)
        return int(v)
    return v


# -- validity predicates ------------------------------------------------------

def _increasing(values: dict) -> bool:
    """Values ``1..n`` once each, increasing right along rows and down columns."""
    n = len(values)
    if sorted(values.values()) != list(range(1, n + 1)):
        return False
    get = values.get
    for (r, c), v in values.items():
        right, down = get((r, c + 1)), get((r + 1, c))
        if (right is not None and right < v) or (down is not None and down < v):
            return False
    return True


def is_standard(t: Tableau) -> bool:
    """Unmarked linear extension of the (shifted) skew diagram."""
    for v in t._entries.values():
        if type(v) is not int:
            return False
    return _increasing(t._entries)


def is_marked_standard(t: Tableau) -> bool:
    """Shifted standard tableau whose marks sit off the diagonal."""
    if not t.shape.shifted:
        return False
    values = {}
    for (r, c), v in t._entries.items():
        if not isinstance(v, Letter) or (v.marked and r == c):
            return False
        values[(r, c)] = v.value
    return _increasing(values)


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly and columns strictly increasing, positive integer entries."""
    if any(not isinstance(v, int) or v < 1 for v in t._entries.values()):
        return False
    for (r, c), v in t.items():
        if (r, c + 1) in t and t[(r, c + 1)] < v:
            return False
        if (r + 1, c) in t and t[(r + 1, c)] <= v:
            return False
    return True


def is_marked_semistandard(t: Tableau, diagonal_marks: bool = False) -> bool:
    """Marked shifted semistandard filling: weakly increasing rows and columns in
    1' < 1 < 2' < ..., each unmarked value at most once per column, each marked
    value at most once per row, no marks on the diagonal."""
    if not t.shape.shifted:
        return False
    for (r, c), v in t.items():
        if not isinstance(v, Letter) or v.value < 1:
            return False
        if v.marked and r == c and not diagonal_marks:
            return False
        right, down = t.get((r, c + 1)), t.get((r + 1, c))
        if right is not None and (right < v or (right == v and v.marked)):
            return False
        if down is not None and (down < v or (down == v and not v.marked)):
            return False
    return True


def is_set_valued(t: Tableau, n: int | None = None) -> bool:
    """Set-valued standard filling: nonempty disjoint sets covering [n] with
    max of a cell below the min of its right and lower neighbours."""
    sets = list(t._entries.values())
    if any(not isinstance(s, frozenset) or not s for s in sets):
        return False
    vals = [value_of(x) for s in sets for x in s]
    n = len(vals) if n is None else n
    if sorted(vals) != list(range(1, n + 1)):
        return False
    for (r, c), s in t.items():
        if any(isinstance(x, Letter) and x.marked for x in s) and (r == c or not t.shape.shifted):
            return False
        hi = max(value_of(x) for x in s)
        for nb in ((r, c + 1), (r + 1, c)):
            if nb in t and hi >= min(value_of(x) for x in t[nb]):
                return False
    return True


# -- descents ----------------------------------------------------------------

def word_descents(word: Iterable[int]) -> frozenset[int]:
    word = list(word)
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def descent_set(t: Tableau) -> frozenset[int]:
    """Descent set of a standard, marked shifted standard, or set-valued tableau.

    For ``i`` and ``i+1`` with marks (unmarked, marked): always a descent;
    (marked, unmarked): never; both unmarked: iff ``i`` is strictly above
    ``i+1``; both marked: iff ``i`` is strictly left of ``i+1``. Two values
    sharing a cell are never strictly above or left of each other.
    """
    info: dict[int, tuple[int, int, bool]] = {}
    for (r, c), v in t.items():
        for x in (v if isinstance(v, frozenset) else (v,)):
            info[value_of(x)] = (r, c, is_marked(x))
    n = len(info)
    des = set()
    for i in range(1, n):
        (ri, ci, mi), (rj, cj, mj) = info[i], info[i + 1]
        if not mi and mj:
            des.add(i)
        elif not mi and not mj and ri < rj:
            des.add(i)
        elif mi and mj and ci < cj:
            des.add(i)
    return frozenset(des)


def complement(s: Iterable[int], n: int) -> frozenset[int]:
    return frozenset(range(1, n)) - frozenset(s)


def reverse(s: Iterable[int], n: int) -> frozenset[int]:
    return frozenset(n - k for k in s)


def toggle_marks(t: Tableau) -> Tableau:
    """Mark every unmarked off-diagonal value and unmark every marked one."""
    def flip(cell, v):
        r, c = cell
        if r == c:
            return v
        if isinstance(v, frozenset):
            return frozenset(x.toggled() for x in v)
        return v.toggled()
    return Tableau(t.shape, {cell: flip(cell, v) for cell, v in t.items()})


def as_marked(t: Tableau, marks: Iterable[Cell] = ()) -> Tableau:
    marks = set(marks)
    return Tableau(t.shape, {c: Letter(v, c in marks) for c, v in t.items()})


# -- reading words -----------------------------------------------------------

def reading_word(t: Tableau) -> tuple[int, ...]:
    """Rows left to right, bottom row first."""
    rows = t.rows()
    return tuple(value_of(v) for row in reversed(rows) for v in row)


def crystal_reading_word(t: Tableau, n: int | None = None) -> tuple[int, ...]:
    """Rows top to bottom, each right to left, entry ``i`` recorded as ``n+1-i``."""
    n = t.size if n is None else n
    return tuple(n + 1 - value_of(v) for row in t.rows() for v in reversed(row))


# -- enumeration ---------------------------------------------------------------

def _check_bound(size: int, bound: int | None, default: int) -> None:
    bound = default if bound is None else bound
    if size > bound:
        raise ValueError(f"shape has {size} cells, enumeration bound is {bound}")


def _lower_covers(cells: set[Cell]) -> dict[Cell, list[Cell]]:
    return {(r, c): [x for x in ((r - 1, c), (r, c - 1)) if x in cells] for r, c in cells}


def enumerate_standard(shape: SkewShape, bound: int | None = None) -> Iterator[Tableau]:
    """All linear extensions, in lexicographic order of the row-major entry sequence.

    Values 1..n are placed in turn; at each step the candidate cells are tried
    in row-major order, so earlier cells get smaller values first.
    """
    _check_bound(shape.size, bound, DEFAULT_MAX_CELLS)
    cells = shape.cells()
    index = {c: i for i, c in enumerate(cells)}
    n = len(cells)
    # waiting[i]: unfilled lower covers of cell i; above[i]: cells that cell i covers from below
    waiting = [0] * n
    above: list[list[int]] = [[] for _ in range(n)]
    for i, (r, c) in enumerate(cells):
        for x in ((r - 1, c), (r, c - 1)):
            if x in index:
                waiting[i] += 1
                above[index[x]].append(i)
    values = [0] * n
    out: list[tuple[int, ...]] = []

    def rec(v, ready):
        if v > n:
            out.append(tuple(values))
            return
        for i in ready:
            values[i] = v
            nxt = [j for j in ready if j != i]
            for j in above[i]:
                waiting[j] -= 1
                if waiting[j] == 0:
                    nxt.append(j)
            rec(v + 1, nxt)
            for j in above[i]:
                waiting[j] += 1

    rec(1, [i for i in range(n) if waiting[i] == 0])
    # canonical order: lexicographic in the row-major entry sequence
    out.sort()
    for vals in out:
        yield Tableau(shape, dict(zip(cells, vals)))


def enumerate_marked_standard(shape: SkewShape, bound: int | None = None) -> Iterator[Tableau]:
    """All marked shifted standard tableaux; mark patterns vary fastest."""
    if not shape.shifted:
        raise ValueError("marked tableaux need a shifted shape")
    for t in enumerate_standard(shape, bound):
        off = [c for c in shape.cells() if c[0] != c[1]]
        for bits in product((False, True), repeat=len(off)):
            yield as_marked(t, [c for c, b in zip(off, bits) if b])


def enumerate_tableaux(shape: SkewShape, kind: str = "standard", bound: int | None = None) -> Iterator[Tableau]:
    if kind in ("standard", "shifted_standard"):
        if (kind == "shifted_standard") != shape.shifted:
            raise ValueError(f"{kind} does not match shape {shape}")
        return enumerate_standard(shape, bound)
    if kind == "marked_shifted_standard":
        return enumerate_marked_standard(shape, bound)
    raise ValueError(f"unknown tableau kind {kind!r}")


def enumerate_set_valued(shape: SkewShape, size: int, kind: str = "plain",
                         bound: int | None = None) -> Iterator[Tableau]:
    """All set-valued standard tableaux of the given size.

    Values are placed in increasing order. Value ``v`` either opens an empty
    cell whose lower covers are all nonempty, or joins a nonempty cell that
    no other nonempty cell lies above or to the right of (so ``max`` stays
    below the neighbours' ``min``).
    """
    if size < shape.size:
        raise ValueError(f"size {size} is smaller than the shape ({shape.size} cells)")
    _check_bound(size, bound, DEFAULT_MAX_SET_SIZE)
    if kind not in ("plain", "marked_shifted"):
        raise ValueError(f"unknown set-valued kind {kind!r}")
    if kind == "marked_shifted" and not shape.shifted:
        raise ValueError("marked set-valued tableaux need a shifted shape")
    cells = shape.cells()
    cellset = set(cells)
    below = _lower_covers(cellset)
    above = {c: [x for x in ((c[0] + 1, c[1]), (c[0], c[1] + 1)) if x in cellset] for c in cells}
    sets: dict[Cell, list[int]] = {c: [] for c in cells}
    empty = [len(cells)]

    def rec(v):
        remaining = size - v + 1
        if remaining < empty[0]:
            return
        if v > size:
            yield {c: tuple(s) for c, s in sets.items()}
            return
        for cell in cells:
            s = sets[cell]
            if s:
                if all(not sets[x] for x in above[cell]):
                    s.append(v)
                    yield from rec(v + 1)
                    s.pop()
            elif all(sets[x] for x in below[cell]):
                s.append(v)
                empty[0] -= 1
                yield from rec(v + 1)
                empty[0] += 1
                s.pop()

    for filling in rec(1):
        if kind == "plain":
            yield Tableau(shape, {c: frozenset(s) for c, s in filling.items()})
            continue
        slots = [(c, x) for c in cells if c[0] != c[1] for x in filling[c]]
        for bits in product((False, True), repeat=len(slots)):
            marked = {x for (_, x), b in zip(slots, bits) if b}
            yield Tableau(shape, {c: frozenset(Letter(x, x in marked) for x in s) for c, s in filling.items()})


# -- content expansion (fundamental quasisymmetric decomposition) ----------------

def is_descent_compatible(des: Iterable[int], content: Iterable[int]) -> bool:
    content = list(content)
    if any(a > b for a, b in zip(content, content[1:])):
        return False
    return all(content[k - 1] < content[k] for k in des)


def content_expand(t: Tableau, content: Iterable[int]) -> Tableau:
    """Replace value ``k`` by ``content[k-1]`` keeping marks."""
    content = list(content)
    if len(content) != t.size:
        raise ValueError("content vector length must equal the number of values")
    if not is_descent_compatible(descent_set(t), content):
        raise ValueError("content vector violates the descent condition")

    def sub(v):
        if isinstance(v, frozenset):
            return frozenset(sub(x) for x in v)
        if isinstance(v, Letter):
            return Letter(content[v.value - 1], v.marked)
        return content[v - 1]

    return t.map(sub)


def standardize(t: Tableau) -> Tableau:
    """Inverse of :func:`content_expand` on semistandard (marked) fillings.

    Equal unmarked letters are numbered left to right, equal marked letters top to
    bottom, and within one value all marked copies precede the unmarked ones.
    """
    keyed = []
    for (r, c), v in t.items():
        if isinstance(v, Letter):
            k = (v.value, 0, r, c) if v.marked else (v.value, 1, c, r)
        else:
            k = (v, 1, c, r)
        keyed.append((k, (r, c), v))
    keyed.sort()
    out = {}
    for i, (_, cell, v) in enumerate(keyed, start=1):
        out[cell] = Letter(i, v.marked) if isinstance(v, Letter) else i
    return Tableau(t.shape, out)


def iter_descent_contents(des: Iterable[int], n: int, numvars: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing vectors in [numvars]^n with strict ascents at ``des``."""
    des = frozenset(des)

    def rec(k, prev, acc):
        if k > n:
            yield tuple(acc)
            return
        lo = prev + 1 if (k - 1) in des else prev
        for v in range(max(lo, 1), numvars + 1):
            acc.append(v)
            yield from rec(k + 1, v, acc)
            acc.pop()

    yield from rec(1, 1, [])
