"""Permutations, reduced words, fully commutative inversion posets and rewriting systems.

Permutations are tuples in one-line notation. Right multiplication by the
simple transposition ``s_a`` swaps positions ``a`` and ``a+1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from . import _kernels
from .shapes import Cell, SkewShape, shape_of, staircase
from .tableaux import Tableau, value_of, word_descents

Permutation = tuple[int, ...]
Word = tuple[int, ...]

DEFAULT_MAX_HECKE_LENGTH = 12
MODES = ("knuth", "shifted_knuth", "k_knuth", "weak_k_knuth")


class NotReducedError(ValueError):
    pass


class NotFullyCommutativeError(ValueError):
    pass


# -- permutations ----------------------------------------------------------------

def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def inverse(w: Sequence[int]) -> Permutation:
    out = [0] * len(w)
    for pos, v in enumerate(w, start=1):
        out[v - 1] = pos
    return tuple(out)


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def length(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def is_fully_commutative(w: Sequence[int]) -> bool:
    """321-avoidance, checked in one pass via the running maximum."""
    # w has a 321 iff some entry has a larger entry before it and a smaller one after it
    n = len(w)
    suffix_min = [n + 1] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(w[i], suffix_min[i + 1])
    best = 0
    for i, v in enumerate(w):
        if best > v and suffix_min[i + 1] < v:
            return False
        best = max(best, v)
    return True


def w_staircase(n: int) -> Permutation:
    """2 4 ... (2n-2) 1 3 ... (2n-3), a permutation of [2n-2]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return tuple(range(2, 2 * n - 1, 2)) + tuple(range(1, 2 * n - 2, 2))


def w_skew_staircase(n: int, mu: Iterable[int]) -> Permutation:
    """Move the value ``2i-1`` left by ``mu_i`` positions, for i = 1, 2, ... in turn."""
    mu = tuple(mu)
    outer = staircase(n)
    if len(mu) > len(outer) or any(m > o for m, o in zip(mu, outer)):
        raise ValueError(f"{mu} is not contained in the staircase {tuple(outer)}")
    if any(a < b for a, b in zip(mu, mu[1:])):
        raise ValueError(f"{mu} is not a partition")
    w = list(w_staircase(n))
    for i, steps in enumerate(mu, start=1):
        pos = w.index(2 * i - 1)
        w.insert(pos - steps, w.pop(pos))
    return tuple(w)


# -- inversion posets --------------------------------------------------------------

def inversions(w: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Value pairs ``(i, j)`` with ``i < j`` and ``j`` left of ``i`` in ``w``."""
    pos = inverse(w)
    n = len(w)
    return frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if pos[i - 1] > pos[j - 1])


@dataclass(frozen=True)
class InversionPoset:
    """Inversions of a fully commutative permutation laid out as a skew diagram.

    ``cell_of`` maps each inversion to its cell; the cell order is the reverse
    of the order in which a reduced word can create the inversions.
    """

    perm: Permutation
    cell_of: dict
    shape: SkewShape

    @property
    def elements(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.cell_of)

    @cached_property
    def inversion_of(self) -> dict:
        return {c: inv for inv, c in self.cell_of.items()}

    def covers(self) -> set[tuple[tuple[int, int], tuple[int, int]]]:
        """Pairs ``(x, y)`` with ``y`` covering ``x`` in the diagram order."""
        inv_of = self.inversion_of
        out = set()
        for (r, c), inv in inv_of.items():
            for nb in ((r + 1, c), (r, c + 1)):
                if nb in inv_of:
                    out.add((inv, inv_of[nb]))
        return out


def _staircase_cells(invs, n: int) -> dict:
    out = {}
    for i, j in invs:
        if i % 2 == 0 or j % 2 == 1:
            raise NotFullyCommutativeError(f"inversion {(i, j)} does not fit the staircase frame")
        out[(i, j)] = ((i + 1) // 2, n - j // 2)
    return out


def _rank_cells(invs) -> dict:
    smalls = sorted({i for i, _ in invs})
    larges = sorted({j for _, j in invs})
    row = {v: k for k, v in enumerate(smalls, start=1)}
    col = {v: len(larges) + 1 - k for k, v in enumerate(larges, start=1)}
    return {(i, j): (row[i], col[j]) for i, j in invs}


def inversion_poset(w: Sequence[int], frame: int | None = None) -> InversionPoset:
    """Lay out the inversions of a 321-avoiding ``w`` as a skew diagram.

    The smaller value of an inversion fixes its row and the larger value fixes
    its column (larger values further left). With ``frame=n`` the inversion
    ``(2r-1, 2b)`` of a permutation below the staircase permutation of ``n``
    goes to ``(r, n-b)``, so empty rows and columns keep their place.
    """
    return _inversion_poset(tuple(w), frame)


# results are shared between callers and must not be mutated
@lru_cache(maxsize=2048)
def _inversion_poset(w: Permutation, frame: int | None) -> InversionPoset:
    if not is_permutation(w):
        raise ValueError(f"not a permutation: {w}")
    if not is_fully_commutative(w):
        raise NotFullyCommutativeError(f"{w} contains the pattern 321")
    invs = inversions(w)
    cell_of = _staircase_cells(invs, frame) if frame is not None else _rank_cells(invs)
    if frame is None:
        try:
            shape = shape_of(cell_of.values())
        except ValueError as exc:
            raise NotFullyCommutativeError(str(exc)) from None
    else:
        # keep the full staircase as the outer shape
        outer = staircase(frame)
        frame_shape = SkewShape(outer)
        if not all(cell in frame_shape for cell in cell_of.values()):
            raise NotFullyCommutativeError("inversions fall outside the staircase frame")
        first = {}
        for r, c in cell_of.values():
            first[r] = min(c, first.get(r, c))
        inner = [first[r] - 1 if r in first else outer[r - 1] for r in range(1, len(outer) + 1)]
        shape = SkewShape(outer, tuple(inner))
        if set(shape.cells()) != set(cell_of.values()):
            raise NotFullyCommutativeError("inversions do not form a staircase skew shape")
    return InversionPoset(w, cell_of, shape)


def inversion_set(w: Sequence[int]) -> InversionPoset:
    return inversion_poset(w)


def fc_shape(w: Sequence[int], frame: int | None = None) -> SkewShape:
    return inversion_poset(w, frame).shape


# -- reduced words ------------------------------------------------------------------

def apply_word(word: Iterable[int], n: int) -> Permutation:
    """Ordinary product ``s_{a_1} ... s_{a_p}`` acting on positions of the identity."""
    w = list(range(1, n + 1))
    for a in word:
        w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def is_reduced(word: Sequence[int], n: int | None = None) -> bool:
    n = (max(word) + 1 if word else 1) if n is None else n
    w = list(range(1, n + 1))
    for a in word:
        if w[a - 1] > w[a]:
            return False
        w[a - 1], w[a] = w[a], w[a - 1]
    return True


def reduced_words(w: Sequence[int]) -> list[Word]:
    """All reduced words, lexicographically sorted."""
    return sorted(_reduced_words(tuple(w)))


@lru_cache(maxsize=4096)
def _reduced_words(w: Permutation) -> tuple[Word, ...]:
    descents = [a for a in range(1, len(w)) if w[a - 1] > w[a]]
    if not descents:
        return ((),)
    out = []
    for a in descents:
        v = list(w)
        v[a - 1], v[a] = v[a], v[a - 1]
        out.extend(word + (a,) for word in _reduced_words(tuple(v)))
    return tuple(out)


def commutation_neighbors(a: Sequence[int]) -> set[Word]:
    a = tuple(a)
    return {a[:i] + (a[i + 1], a[i]) + a[i + 2:] for i in range(len(a) - 1) if abs(a[i] - a[i + 1]) > 1}


def braid_neighbors(a: Sequence[int]) -> set[Word]:
    a = tuple(a)
    out = set()
    for i in range(len(a) - 2):
        x, y, z = a[i:i + 3]
        if x == z and abs(x - y) == 1:
            out.add(a[:i] + (y, x, y) + a[i + 3:])
    return out


# -- Phi -------------------------------------------------------------------------------

def _poset_for(shape: SkewShape, w: Sequence[int] | None) -> InversionPoset:
    if w is None:
        return _staircase_poset(shape)
    poset = inversion_poset(w)
    if poset.shape != shape:
        # try the staircase frame when the shape sits in one
        n = len(shape.outer) + 1
        if tuple(shape.outer) == tuple(staircase(n)) and len(w) == 2 * n - 2:
            poset = inversion_poset(w, frame=n)
    if set(poset.cell_of.values()) != set(shape.cells()):
        raise ValueError(f"tableau shape {shape} does not match the inversions of {tuple(w)}")
    return poset


@lru_cache(maxsize=1024)
def _staircase_poset(shape: SkewShape) -> InversionPoset:
    n = len(shape.outer) + 1
    if shape.shifted or tuple(shape.outer) != tuple(staircase(n)):
        raise ValueError("shape is not a staircase skew shape; pass the permutation explicitly")
    cell_of = {(2 * r - 1, 2 * (n - c)): (r, c) for r, c in shape.cells()}
    perm = _perm_from_staircase_cells(shape, n)
    return InversionPoset(perm, cell_of, shape)


def _perm_from_staircase_cells(shape: SkewShape, n: int) -> Permutation:
    return w_skew_staircase(n, tuple(shape.inner))


def phi(t: Tableau, w: Sequence[int] | None = None) -> Word:
    """Reduced word attached to a standard tableau on the inversion diagram.

    The entry ``p+1-i`` names the inversion created by the ``i``-th letter.
    Without ``w`` the shape must be a staircase skew shape.
    """
    poset = _poset_for(t.shape, w)
    inv_of = poset.inversion_of
    p = len(t)
    order = sorted(t.cells(), key=lambda c: -value_of(t[c]))
    current = list(range(1, len(poset.perm) + 1))
    pos = {v: k for k, v in enumerate(current, start=1)}
    word = []
    for cell in order:
        small, large = inv_of[cell]
        a = pos[small]
        if pos[large] != a + 1:
            raise ValueError(f"tableau is not a linear extension of the inversion order at {cell}")
        current[a - 1], current[a] = large, small
        pos[small], pos[large] = a + 1, a
        word.append(a)
    if tuple(current) != tuple(poset.perm):
        raise ValueError("word does not reach the permutation")
    assert len(word) == p
    return tuple(word)


def phi_inverse(a: Sequence[int], frame: int | None = None, n: int | None = None) -> Tableau:
    """Standard tableau from a reduced word of a fully commutative permutation.

    ``frame`` places the result inside the staircase of that size; ``n`` is the
    size of the symmetric group (default: ``max(a)+1``, or ``2*frame-2``).
    """
    a = tuple(a)
    if n is None:
        n = 2 * frame - 2 if frame is not None else (max(a) + 1 if a else 1)
    try:
        created = _kernels.word_inversions(a, n)
    except ArithmeticError:
        raise NotReducedError(f"{a} is not reduced") from None
    current = apply_word(a, n)
    poset = inversion_poset(current, frame)
    p = len(a)
    entries = {poset.cell_of[inv]: p - i for i, inv in enumerate(created)}
    return Tableau(poset.shape, entries)


def phi_inverse_staircase(a: Sequence[int], k: int) -> Tableau:
    """Shorthand for words below the staircase permutation of ``k``."""
    return phi_inverse(a, frame=k)


# -- rewriting systems ---------------------------------------------------------------

def _knuth_triples(x, y, z, strict: bool):
    out = []
    le = (lambda p, q: p < q) if strict else (lambda p, q: p <= q)
    # acb <-> cab
    if le(x, z) and z < y:
        out.append((y, x, z))
    if le(y, z) and z < x:
        out.append((y, x, z))
    # bac <-> bca
    if y < x and le(x, z):
        out.append((x, z, y))
    if z < x and le(x, y):
        out.append((x, z, y))
    return out


def rewrite_neighbors(a: Sequence[int], mode: str = "knuth") -> set[Word]:
    """All words one move away from ``a``."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    a = tuple(a)
    out: set[Word] = set()
    k_theory = mode in ("k_knuth", "weak_k_knuth")
    for i in range(len(a) - 2):
        x, y, z = a[i:i + 3]
        for triple in _knuth_triples(x, y, z, strict=k_theory):
            out.add(a[:i] + triple + a[i + 3:])
        if k_theory and x == z and x != y:
            out.add(a[:i] + (y, x, y) + a[i + 3:])
    if k_theory:
        for i in range(len(a)):
            out.add(a[:i + 1] + (a[i],) + a[i + 1:])
            if i + 1 < len(a) and a[i] == a[i + 1]:
                out.add(a[:i] + a[i + 1:])
    if mode in ("shifted_knuth", "weak_k_knuth") and len(a) >= 2:
        out.add((a[1], a[0]) + a[2:])
    out.discard(a)
    return out


def rewrite_class(a: Sequence[int], mode: str = "knuth", slack: int = 2) -> frozenset[Word]:
    """Breadth-first closure under ``mode`` moves.

    Length-changing moves are capped at ``len(a) + slack`` letters.
    """
    a = tuple(a)
    cap = len(a) + slack
    seen = {a}
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        for nb in rewrite_neighbors(cur, mode):
            if len(nb) <= cap and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return frozenset(seen)


class _DisjointSets:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def partition_classes(words: Iterable[Sequence[int]], mode: str = "knuth") -> list[frozenset[Word]]:
    """Split a finite word set into the classes generated by moves staying inside it."""
    words = {tuple(w) for w in words}
    dsu = _DisjointSets(words)
    for w in words:
        for nb in rewrite_neighbors(w, mode):
            if nb in words:
                dsu.union(w, nb)
    groups: dict = {}
    for w in words:
        groups.setdefault(dsu.find(w), set()).add(w)
    return sorted((frozenset(g) for g in groups.values()), key=lambda g: min(g))


def is_closed(words: Iterable[Sequence[int]], mode: str = "knuth") -> bool:
    """True when no length-preserving move leaves the set."""
    words = {tuple(w) for w in words}
    return all(nb in words for w in words for nb in rewrite_neighbors(w, mode) if len(nb) == len(w))


# -- 0-Hecke monoid -------------------------------------------------------------------

def hecke_product(a: Iterable[int], n: int) -> Permutation:
    """Demazure product: ``s_a`` swaps positions ``a, a+1`` only when that adds an inversion."""
    w = list(range(1, n + 1))
    for letter in a:
        if not 1 <= letter < n:
            raise ValueError(f"letter {letter} out of range for S_{n}")
        if w[letter - 1] < w[letter]:
            w[letter - 1], w[letter] = w[letter], w[letter - 1]
    return tuple(w)


def hecke_expressions(w: Sequence[int], size: int, bound: int | None = None) -> Iterator[Word]:
    """All length-``size`` 0-Hecke expressions for ``w``, lexicographically.

    Prefix products only gain inversions, so any prefix producing an inversion
    outside ``w`` is pruned.
    """
    bound = DEFAULT_MAX_HECKE_LENGTH if bound is None else bound
    if size > bound:
        raise ValueError(f"length {size} exceeds the bound {bound}")
    w = tuple(w)
    n = len(w)
    target = inversions(w)
    need = len(target)
    if size < need:
        return
    cur = list(range(1, n + 1))
    acc: list[int] = []

    def rec(have):
        if len(acc) == size:
            if have == need:
                yield tuple(acc)
            return
        if need - have > size - len(acc):
            return
        for a in range(1, n):
            x, y = cur[a - 1], cur[a]
            if x < y:
                if (x, y) not in target:
                    continue
                cur[a - 1], cur[a] = y, x
                acc.append(a)
                yield from rec(have + 1)
                acc.pop()
                cur[a - 1], cur[a] = x, y
            else:
                acc.append(a)
                yield from rec(have)
                acc.pop()

    yield from rec(0)


# -- res ---------------------------------------------------------------------------

def res_inverse(a: Sequence[int], frame: int | None = None, n: int | None = None) -> Tableau:
    """Set-valued tableau from a 0-Hecke expression of a fully commutative permutation.

    A letter that adds an inversion goes to that inversion's cell; a letter that
    changes nothing joins the cell of the latest earlier copy of itself. The
    ``i``-th letter of a length-``p`` word contributes the value ``p+1-i``.
    """
    a = tuple(a)
    if n is None:
        n = 2 * frame - 2 if frame is not None else (max(a) + 1 if a else 1)
    current = list(range(1, n + 1))
    owner: list = []
    for letter in a:
        if not 1 <= letter < n:
            raise ValueError(f"letter {letter} out of range for S_{n}")
        x, y = current[letter - 1], current[letter]
        if x < y:
            current[letter - 1], current[letter] = y, x
            owner.append(("new", (x, y)))
        else:
            h = max((k for k in range(len(owner)) if a[k] == letter), default=None)
            if h is None:
                raise ValueError("redundant letter without an earlier copy")
            owner.append(("copy", h))
    poset = inversion_poset(current, frame)
    p = len(a)
    cells: list[Cell] = []
    sets: dict[Cell, set] = {}
    for i, (kind, ref) in enumerate(owner):
        cell = poset.cell_of[ref] if kind == "new" else cells[ref]
        cells.append(cell)
        sets.setdefault(cell, set()).add(p - i)
    return Tableau(poset.shape, {c: frozenset(s) for c, s in sets.items()})


def res(t: Tableau, w: Sequence[int] | None = None) -> Word:
    """0-Hecke expression attached to a set-valued tableau on the inversion diagram."""
    poset = _poset_for(t.shape, w)
    inv_of = poset.inversion_of
    where = t.position()
    p = len(where)
    current = list(range(1, len(poset.perm) + 1))
    pos = {v: k for k, v in enumerate(current, start=1)}
    opened: set[Cell] = set()
    word: list[int] = []
    letter_cell: list[Cell] = []
    for i in range(p):
        cell = where[p - i]
        if cell not in opened:
            small, large = inv_of[cell]
            letter = pos[small]
            if pos[large] != letter + 1:
                raise ValueError(f"tableau is not compatible with the inversion order at {cell}")
            current[letter - 1], current[letter] = large, small
            pos[small], pos[large] = letter + 1, letter
            opened.add(cell)
        else:
            last_cell: dict[int, Cell] = {}
            for b, c in zip(word, letter_cell):
                last_cell[b] = c
            options = [b for b, c in last_cell.items()
                       if c == cell and current[b - 1] > current[b]]
            if len(options) != 1:
                raise ValueError(f"no unique repeated letter for value {p - i} in {cell}")
            letter = options[0]
        word.append(letter)
        letter_cell.append(cell)
    return tuple(word)


def word_descent_set(a: Sequence[int]) -> frozenset[int]:
    return word_descents(a)


def first_two_same_parity(a: Sequence[int]) -> bool:
    return len(a) < 2 or (a[0] - a[1]) % 2 == 0
