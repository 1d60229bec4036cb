"""Bijections between staircase-minus-rectangle tableaux and marked shifted tableaux.

``phi_map`` sends a standard tableau of shape ``delta_n / mu`` to the
Worley-Sagan recording tableau of its reduced word. For a rectangle ``mu``
the image is a marked shifted standard tableau of the straight shifted shape
``rho_n - tau`` and ``psi`` inverts it.
"""

from __future__ import annotations

from functools import lru_cache

from .insertion import _ws_uninsert, minimal_increasing, mixed_insert, rsk_inverse, superstandard, ws_insert, ws_inverse
from .shapes import (
    Partition,
    SkewShape,
    conjugate,
    rectangle,
    reflect_cell,
    shifted_staircase,
    staircase,
    subtract_reflect,
    trapezoid,
)
from .tableaux import Letter, Tableau, crystal_reading_word, is_marked_standard, is_standard, toggle_marks
from .words import phi, phi_inverse


class ShapeError(ValueError):
    pass


def staircase_size(shape: SkewShape) -> int:
    """The ``n`` with ``shape.outer == delta_n``."""
    n = len(shape.outer) + 1
    if shape.shifted or tuple(shape.outer) != tuple(staircase(n)):
        raise ShapeError(f"{shape} is not a staircase skew shape")
    return n


def rectangle_dims(mu) -> tuple[int, int]:
    """(rows, columns) of a rectangular partition; (0, 0) for the empty one."""
    mu = Partition(mu)
    if not mu:
        return 0, 0
    if len(set(mu)) != 1:
        raise ShapeError(f"{tuple(mu)} is not a rectangle")
    return len(mu), mu[0]


@lru_cache(maxsize=None)
def target_shape(n: int, rows: int, cols: int) -> SkewShape:
    """Shifted shape ``rho_n - tau^{rows,cols}``."""
    if rows + cols >= n and rows * cols:
        raise ShapeError(f"need rows + cols < n, got {rows} + {cols} >= {n}")
    eta = subtract_reflect(shifted_staircase(n), trapezoid(rows, cols))
    return SkewShape(eta, (), True)


# -- phi -------------------------------------------------------------------------

def phi_map(t: Tableau) -> Tableau:
    """Worley-Sagan recording tableau of the reduced word of ``t``."""
    staircase_size(t.shape)
    if not is_standard(t):
        raise ValueError("phi_map needs a standard tableau")
    return ws_insert(phi(t)).q


def phi_word(t: Tableau) -> tuple[int, ...]:
    staircase_size(t.shape)
    return phi(t)


# -- the completion block ------------------------------------------------------------

@lru_cache(maxsize=None)
def completion_block(n: int, rows: int, cols: int) -> dict:
    """Marked entries filling ``rho_n`` minus ``rho_n - tau`` for a rectangle with ``rows >= cols``.

    The ``rows x cols`` square block in the bottom-right corner of the shifted
    staircase is filled column by column, top to bottom, with the largest
    ``rows*cols`` values. The part of the block below the diagonal moves up:
    cell ``(i, j)`` with ``i > j`` goes to ``(top - (i - j), i)`` and is marked.
    """
    if rows < cols:
        raise ValueError("completion_block expects rows >= cols")
    total = n * (n - 1) // 2
    top, left = n - rows, n - cols
    out = {}
    k = total - rows * cols
    for j in range(left, n):
        for i in range(top, n):
            k += 1
            if i <= j:
                out[(i, j)] = Letter(k, False)
            else:
                out[(top - (i - j), i)] = Letter(k, True)
    return out


def tail_word(n: int, rows: int, cols: int) -> tuple[int, ...]:
    """``cols`` decreasing runs of length ``rows``; run ``i`` starts at ``n + rows - cols - 2 + i``."""
    return tuple(x for i in range(1, cols + 1)
                 for x in range(n + rows - cols - 2 + i, n - cols - 2 + i, -1))


def complete(u: Tableau, n: int, rows: int, cols: int) -> Tableau:
    """Add the completion block to a tableau of shape ``rho_n - tau``."""
    block = completion_block(n, rows, cols)
    entries = u.entries()
    if set(entries) & set(block):
        raise ShapeError("tableau overlaps the completion block")
    entries.update(block)
    return Tableau(SkewShape(shifted_staircase(n), (), True), entries)


@lru_cache(maxsize=None)
def _minimal_staircase(n: int) -> Tableau:
    return minimal_increasing(shifted_staircase(n))


def _psi_tall(u: Tableau, n: int, rows: int, cols: int) -> Tableau:
    full = complete(u, n, rows, cols)
    # u is checked by psi and the block is fixed; a bad combination fails the tail test
    word = _ws_uninsert(_minimal_staircase(n), full)
    k = rows * cols
    head, tail = word[:len(word) - k], word[len(word) - k:]
    if tail != tail_word(n, rows, cols):
        raise ValueError(f"unexpected tail {tail}; input is not in the image of phi")
    out = phi_inverse(head, frame=n)
    if out.shape != SkewShape(staircase(n), rectangle(rows, cols)):
        raise ValueError("inverse word does not land on the staircase minus the rectangle")
    return out


def transpose_tableau(t: Tableau) -> Tableau:
    return t.transpose()


def psi(u: Tableau, rows: int, cols: int, n: int | None = None) -> Tableau:
    """Inverse of ``phi_map`` onto ``SYT(delta_n / (cols^rows))``.

    Rectangles with at least as many rows as columns are inverted directly;
    wide rectangles go through the transpose, using
    ``phi(T') = toggle(phi(T))``.
    """
    if not u.shape.shifted or u.shape.inner:
        raise ShapeError("psi needs a straight shifted tableau")
    if not is_marked_standard(u):
        raise ValueError("psi needs a marked shifted standard tableau")
    if n is None:
        n = u.shape.outer[0] + 1 if u.shape.outer else 2
    if rows * cols == 0:
        rows = cols = 0
    expected = target_shape(n, rows, cols) if rows else SkewShape(shifted_staircase(n), (), True)
    if u.shape != expected:
        raise ShapeError(f"tableau shape {u.shape} is not {expected}")
    if rows >= cols:
        return _psi_tall(u, n, rows, cols)
    return _psi_tall(toggle_marks(u), n, cols, rows).transpose()


# -- descent-preserving conjugation map ----------------------------------------------------

def stembridge_map(t: Tableau) -> Tableau:
    """Descent-preserving bijection ``SYT(delta_n / mu) -> SYT(delta_n / mu')``.

    With ``a`` the reduced word of ``t``, the image is the tableau whose
    reduced word has the recording tableau of ``a`` and the insertion tableau
    of the word of the transpose ``2n - 2 - a``.
    """
    n = staircase_size(t.shape)
    a = phi(t)
    conj = tuple(2 * n - 2 - x for x in a)
    target_p = ws_insert(conj).p
    b = ws_inverse(target_p, ws_insert(a).q)
    out = phi_inverse(b, frame=n)
    if out.shape != SkewShape(staircase(n), conjugate(t.shape.inner)):
        raise AssertionError("conjugation map left the conjugate shape")
    return out


# -- alternative routes ---------------------------------------------------------------------

def _reflect_complement(t: Tableau, n: int) -> Tableau:
    """Mirror a shifted staircase tableau in the anti-diagonal and complement its values."""
    total = n * (n - 1) // 2
    entries = {}
    for cell, v in t.items():
        entries[reflect_cell(cell, n)] = Letter(total + 1 - v.value, v.marked)
    return Tableau.from_cells(entries, shifted=True)


def mixed_route(t: Tableau) -> Tableau:
    """phi_map computed through RSK, mixed insertion and a reflection.

    The rectangle cells are filled with the superstandard tableau, the skew part
    is shifted up, RSK pairs the result with the superstandard staircase, mixed
    insertion produces a marked tableau of the shifted staircase, which is then
    mirrored, complemented, mark-toggled and restricted to ``rho_n - tau``.
    """
    n = staircase_size(t.shape)
    rows, cols = rectangle_dims(t.shape.inner)
    k = rows * cols
    entries = {c: v + k for c, v in t.items()}
    entries.update(superstandard(SkewShape(rectangle(rows, cols))).entries())
    full = Tableau(SkewShape(staircase(n)), entries)
    w = rsk_inverse(full, superstandard(SkewShape(staircase(n))))
    p_ms = mixed_insert(w).p
    mirrored = toggle_marks(_reflect_complement(p_ms, n))
    keep = set(target_shape(n, rows, cols).cells()) if k else set(mirrored.cells())
    return Tableau.from_cells({c: v for c, v in mirrored.items() if c in keep}, shifted=True)


def crystal_route(t: Tableau) -> Tableau:
    """Mixed insertion tableau of the crystal reading word."""
    staircase_size(t.shape)
    return mixed_insert(crystal_reading_word(t)).p
