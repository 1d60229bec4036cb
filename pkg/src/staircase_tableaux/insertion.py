"""Insertion algorithms: RSK, Worley-Sagan, mixed shifted insertion, jeu de taquin.

Internally a (shifted) straight tableau is a list of rows. Row ``i`` of a
shifted tableau starts in column ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from . import _kernels
from .shapes import Cell, SkewShape, StrictPartition, Partition
from .tableaux import (
    Letter,
    Tableau,
    descent_set,
    is_marked_standard,
    is_semistandard,
    is_standard,
)


@dataclass(frozen=True)
class InsertionPair:
    p: Tableau
    q: Tableau
    flavor: str

    def __iter__(self):
        return iter((self.p, self.q))


# -- helpers ---------------------------------------------------------------------

def _rows_to_tableau(rows: list[list[Any]], shifted: bool) -> Tableau:
    return Tableau.from_rows(rows, shifted=shifted)


def _tableau_rows(t: Tableau) -> list[list[Any]]:
    if t.shape.inner:
        raise ValueError("expected a straight (unskewed) tableau")
    return [list(r) for r in t.rows()]


def _first_greater(seq, x) -> int:
    for k, v in enumerate(seq):
        if v > x:
            return k
    return len(seq)


def _column(rows, j: int, shifted: bool) -> list[int]:
    """Row indices (0-based) of the cells in 1-based column ``j``."""
    out = []
    for i, row in enumerate(rows):
        start = i + 1 if shifted else 1
        if start <= j < start + len(row):
            out.append(i)
        elif out:
            break
    return out


# -- RSK -------------------------------------------------------------------------

def rsk(a: Sequence[int]) -> InsertionPair:
    """Row insertion, bumping the first entry strictly greater than the letter."""
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, x in enumerate(a, start=1):
        r = 0
        while True:
            if r == len(p):
                p.append([x])
                q.append([step])
                break
            row = p[r]
            k = _first_greater(row, x)
            if k == len(row):
                row.append(x)
                q[r].append(step)
                break
            row[k], x = x, row[k]
            r += 1
    return InsertionPair(_rows_to_tableau(p, False), _rows_to_tableau(q, False), "rsk")


def rsk_inverse(p: Tableau, q: Tableau) -> tuple[int, ...]:
    if p.shape != q.shape or p.shape.shifted or p.shape.inner:
        raise ValueError("P and Q must share a straight shape")
    if not is_semistandard(p) or not is_standard(q):
        raise ValueError("P must be semistandard and Q standard")
    prow = _tableau_rows(p)
    where = q.position()
    out = []
    for step in range(len(where), 0, -1):
        r, c = where[step]
        r -= 1
        y = prow[r].pop(c - 1)
        for i in range(r - 1, -1, -1):
            row = prow[i]
            k = max(k for k, v in enumerate(row) if v < y)
            row[k], y = y, row[k]
        out.append(y)
        if not prow[r]:
            prow.pop(r)
    return tuple(reversed(out))


# -- Worley-Sagan ------------------------------------------------------------------

def ws_insert(a: Sequence[int]) -> InsertionPair:
    """Worley-Sagan insertion of an arbitrary word of positive integers."""
    rows, steps = _kernels.ws_insert_word([int(x) for x in a])
    shape = SkewShape(StrictPartition([len(r) for r in rows]), (), True)
    p = Tableau(shape, {(i + 1, i + 1 + k): v for i, row in enumerate(rows) for k, v in enumerate(row)})
    q = Tableau(shape, {(r + 1, c + 1): Letter(s, m) for s, (r, c, m) in enumerate(steps, start=1)})
    return InsertionPair(p, q, "worley_sagan")


def _validate_ws_pair(p: Tableau, q: Tableau) -> None:
    if p.shape != q.shape or not p.shape.shifted or p.shape.inner:
        raise ValueError("P and Q must share a straight shifted shape")
    if not is_marked_standard(q):
        raise ValueError("Q must be a marked shifted standard tableau")
    for (r, c), v in p.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError("P must hold unmarked integers")
        if (r, c + 1) in p and p[(r, c + 1)] < v:
            raise ValueError("rows of P must weakly increase")
        if (r + 1, c) in p and p[(r + 1, c)] <= v:
            raise ValueError("columns of P must strictly increase")


def ws_inverse(p: Tableau, q: Tableau) -> tuple[int, ...]:
    """Recover the word from a Worley-Sagan pair."""
    _validate_ws_pair(p, q)
    return _ws_uninsert(p, q)


def _ws_uninsert(p: Tableau, q: Tableau) -> tuple[int, ...]:
    """:func:`ws_inverse` without validating the pair."""
    rows = _tableau_rows(p)
    steps = [None] * len(q)
    for (r, c), v in q.items():
        steps[v.value - 1] = (r - 1, c - 1, v.marked)
    return tuple(_kernels.ws_uninsert(rows, steps))


# -- mixed shifted insertion -----------------------------------------------------------

def mixed_insert(w: Sequence[int]) -> InsertionPair:
    """Mixed shifted insertion of a word with distinct letters.

    Unmarked letters weak-insert into the row below the last bumped cell,
    marked letters into the column to its right; a letter bumped off the
    diagonal becomes marked.
    """
    w = tuple(w)
    if len(set(w)) != len(w):
        raise ValueError("mixed insertion needs distinct letters")
    rows: list[list[Letter]] = []
    q: dict[Cell, int] = {}
    for step, letter in enumerate(w, start=1):
        x = Letter(letter, False)
        y = z = 0
        while True:
            if not x.marked:
                i = y
                if i == len(rows):
                    rows.append([x])
                    cell = (i + 1, i + 1)
                    break
                row = rows[i]
                k = _first_greater(row, x)
                if k == len(row):
                    row.append(x)
                    cell = (i + 1, i + 1 + k)
                    break
                bumped_cell = (i + 1, i + 1 + k)
                row[k], x = x, row[k]
            else:
                j = z + 1
                col = _column(rows, j, True)
                vals = [rows[r][j - 1 - r] for r in col]
                k = _first_greater(vals, x)
                if k == len(vals):
                    r = len(col)
                    if r == len(rows):
                        rows.append([])
                    if r + 1 + len(rows[r]) != j:
                        raise AssertionError("column insertion left the shifted shape")
                    rows[r].append(x)
                    cell = (r + 1, j)
                    break
                r = col[k]
                bumped_cell = (r + 1, j)
                rows[r][j - 1 - r], x = x, rows[r][j - 1 - r]
            y, z = bumped_cell
            if y == z:
                x = Letter(x.value, True)
        q[cell] = step
    p = _rows_to_tableau(rows, True)
    return InsertionPair(p, Tableau(p.shape, q), "mixed")


# -- jeu de taquin ---------------------------------------------------------------------

def inner_corners(shape: SkewShape) -> list[Cell]:
    inner = SkewShape(shape.inner, (), shape.shifted)
    cells = set(inner.cells())
    return [(r, c) for r, c in sorted(cells) if (r + 1, c) not in cells and (r, c + 1) not in cells]


def jdt_slide(t: Tableau, corner: Cell, trace: list | None = None) -> Tableau:
    """Inner slide into ``corner``; ties move the lower entry up.

    If ``trace`` is a list, the intermediate fillings (hole position, entries)
    are appended to it.
    """
    shape = t.shape
    if corner not in inner_corners(shape):
        raise ValueError(f"{corner} is not an inner corner of {shape}")
    entries = t.entries()
    hole = corner
    while True:
        r, c = hole
        down, right = (r + 1, c), (r, c + 1)
        options = [x for x in (down, right) if x in entries]
        if trace is not None:
            trace.append((hole, dict(entries)))
        if not options:
            break
        if len(options) == 2:
            nxt = down if entries[down] <= entries[right] else right
        else:
            nxt = options[0]
        entries[hole] = entries.pop(nxt)
        hole = nxt
    inner = list(shape.inner)
    inner[corner[0] - 1] -= 1
    outer = list(shape.outer)
    outer[hole[0] - 1] -= 1
    new_shape = SkewShape(tuple(outer), tuple(inner), shape.shifted)
    return Tableau(new_shape, entries)


def superstandard(shape: SkewShape) -> Tableau:
    """Consecutive values along rows, top to bottom."""
    return Tableau(shape, {c: k for k, c in enumerate(shape.cells(), start=1)})


def rectify(t: Tableau, order: Tableau | None = None) -> Tableau:
    """Slide into the inner cells in decreasing order of their labels in ``order``.

    ``order`` is a standard tableau of the inner shape (defaults to the
    superstandard one). Shifted tableaux use shifted slides.
    """
    inner = SkewShape(t.shape.inner, (), t.shape.shifted)
    if order is None:
        order = superstandard(inner)
    if order.shape != inner or not is_standard(order):
        raise ValueError("order must be a standard tableau of the inner shape")
    for cell in sorted(order.cells(), key=lambda c: -order[c]):
        t = jdt_slide(t, cell)
    return t


def embed_shifted(t: Tableau) -> Tableau:
    """Straight ``lambda/mu`` as shifted ``(lambda+delta)/(mu+delta)``, delta = (L-1, ..., 0)."""
    if t.shape.shifted:
        return t
    L = len(t.shape.outer)
    outer = tuple(p + L - i for i, p in enumerate(t.shape.outer, start=1))
    inner = tuple(t.shape.inner.part(i) + L - i for i in range(1, L + 1))
    shape = SkewShape(outer, inner, True)
    return Tableau(shape, {(r, c + L - 1): v for (r, c), v in t.items()})


def shifted_rectify(t: Tableau, order: Tableau | None = None) -> Tableau:
    return rectify(embed_shifted(t), order)


def evacuation(t: Tableau) -> Tableau:
    """Schutzenberger evacuation of a standard tableau of straight shape."""
    if t.shape.inner:
        raise ValueError("evacuation needs a straight shape")
    if not is_standard(t):
        raise ValueError("evacuation needs a standard tableau")
    n = len(t)
    out: dict[Cell, int] = {}
    cur = t
    for k in range(1, n + 1):
        entries = cur.entries()
        first = (1, 1 + cur.shape.offset(1))
        del entries[first]
        inner = [1]
        skew = Tableau(SkewShape(cur.shape.outer, inner, cur.shape.shifted), entries)
        nxt = jdt_slide(skew, first)
        gone = set(cur.cells()) - set(nxt.cells())
        (cell,) = gone
        out[cell] = n + 1 - k
        # drop the now-empty inner cell
        cur = Tableau(SkewShape(nxt.shape.outer, (), cur.shape.shifted), nxt.entries())
    return Tableau(t.shape, out)


# -- special tableaux -------------------------------------------------------------

def minimal_increasing(shape: Sequence[int]) -> Tableau:
    """Shifted tableau with ``i + j - 1`` in cell ``(i, j)``."""
    s = SkewShape(StrictPartition(shape), (), True)
    return Tableau(s, {(i, j): i + j - 1 for i, j in s.cells()})


def superstandard_straight(shape: Sequence[int]) -> Tableau:
    return superstandard(SkewShape(Partition(shape)))


def insertion_descents(q: Tableau) -> frozenset[int]:
    return descent_set(q)
