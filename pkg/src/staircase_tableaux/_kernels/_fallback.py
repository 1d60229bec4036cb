"""Pure-Python versions of the hot loops. Same inputs, outputs and random stream as ``_core``."""

from __future__ import annotations

from bisect import bisect_left, bisect_right

BLOCK = 4096


class _Uniforms:
    """Uniform doubles drawn from a numpy Generator in fixed-size blocks."""

    def __init__(self, rng):
        self.rng = rng
        self.buf = []
        self.pos = BLOCK

    def next(self) -> float:
        if self.pos == BLOCK:
            self.buf = self.rng.random(BLOCK).tolist()
            self.pos = 0
        u = self.buf[self.pos]
        self.pos += 1
        return u


def hook_walk(parts, rng) -> list[list[int]]:
    """Uniform shifted standard tableau of the strict partition ``parts``, as rows.

    Row ``i`` (0-based) starts in column ``i``. Each round places the current
    largest value at the corner reached by a hook walk from a uniform cell.
    """
    parts = [int(p) for p in parts]
    nrows = len(parts)
    if nrows == 0:
        return []
    width = parts[0]
    lens = parts[:]
    rows = [[0] * p for p in parts]
    # bottom[j]: last row containing column j, or -1
    bottom = [-1] * width
    for i, p in enumerate(parts):
        for j in range(i, i + p):
            bottom[j] = i
    total = sum(parts)
    draw = _Uniforms(rng).next
    for value in range(total, 0, -1):
        # uniform start cell by rejection from the width x width square
        while True:
            i = int(draw() * width)
            j = int(draw() * width)
            if i <= j and i < nrows and j < i + lens[i]:
                break
        while True:
            arm = i + lens[i] - 1 - j
            leg = bottom[j] - i
            extra = 0
            if bottom[j] == j and j + 1 < nrows:
                extra = lens[j + 1]
            m = arm + leg + extra
            if m == 0:
                break
            r = int(draw() * m)
            if r < arm:
                j = j + 1 + r
            elif r < arm + leg:
                i = i + 1 + (r - arm)
            else:
                i, j = j + 1, j + 1 + (r - arm - leg)
        rows[i][j - i] = value
        lens[i] -= 1
        # row i-1 always reaches column j when (i, j) is a corner
        bottom[j] = i - 1
    return rows


def ws_insert_word(word) -> tuple[list[list[int]], list[tuple[int, int, bool]]]:
    """Worley-Sagan insertion of ``word``.

    Returns the insertion rows (row ``i`` starts in column ``i``, 0-based) and
    ``steps[s] = (row, col, column_phase)`` for the cell created by letter ``s``.
    """
    rows: list[list[int]] = []
    steps = []
    for x in word:
        i = 0
        cell = None
        while True:
            if i == len(rows):
                rows.append([x])
                cell = (i, i, False)
                break
            row = rows[i]
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                cell = (i, i + k, False)
                break
            row[k], x = x, row[k]
            if k == 0:
                break
            i += 1
        if cell is None:
            # bumped off the diagonal: strict insertion into columns i+1, i+2, ...
            j = i + 1
            while True:
                t = 0
                while t < len(rows) and t <= j < t + len(rows[t]):
                    t += 1
                k = 0
                while k < t and rows[k][j - k] < x:
                    k += 1
                if k == t:
                    if t == len(rows):
                        rows.append([])
                    if t + len(rows[t]) != j:
                        raise AssertionError("column insertion left the shifted shape")
                    rows[t].append(x)
                    cell = (t, j, True)
                    break
                rows[k][j - k], x = x, rows[k][j - k]
                j += 1
        steps.append(cell)
    return rows, steps


def ws_uninsert(rows, steps) -> list[int]:
    """Invert Worley-Sagan insertion in place.

    ``rows`` holds the insertion tableau (row ``i`` starts in column ``i``,
    0-based). ``steps[s]`` is ``(row, col, marked)`` of recording value ``s+1``.
    """
    lens = [len(r) for r in rows]
    out = []
    for s in range(len(steps) - 1, -1, -1):
        r, c, column = steps[s]
        if c != r + lens[r] - 1:
            raise ValueError("largest recording entry is not at the end of its row")
        y = rows[r].pop()
        lens[r] -= 1
        row_mode_from = r
        if column:
            j = c - 1
            while True:
                # rows containing column j: 0 .. last, with row ends non-increasing
                last = min(j, len(rows) - 1)
                while last >= 0 and last + lens[last] - 1 < j:
                    last -= 1
                lo, hi = 0, last + 1
                while lo < hi:
                    mid = (lo + hi) // 2
                    if rows[mid][j - mid] <= y:
                        lo = mid + 1
                    else:
                        hi = mid
                i = lo - 1
                if i < 0:
                    raise ValueError("invalid pair: column un-bumping failed")
                if i == j:
                    row_mode_from = j + 1
                    break
                rows[i][j - i], y = y, rows[i][j - i]
                j -= 1
        for i in range(row_mode_from - 1, -1, -1):
            row = rows[i]
            k = bisect_left(row, y, 0, lens[i]) - 1
            if k < 0:
                raise ValueError("invalid pair: row un-bumping failed")
            row[k], y = y, row[k]
        out.append(y)
    out.reverse()
    return out


def word_inversions(word, n: int) -> list[tuple[int, int]]:
    """Inversion ``(x, y)``, ``x < y``, created by each letter; rejects non-reduced words."""
    current = list(range(1, n + 1))
    created = []
    for letter in word:
        if not 1 <= letter < n:
            raise ValueError(f"letter {letter} out of range for S_{n}")
        x, y = current[letter - 1], current[letter]
        if x > y:
            raise ArithmeticError("word is not reduced")
        current[letter - 1], current[letter] = y, x
        created.append((x, y))
    return created


__all__ = ["hook_walk", "ws_uninsert", "word_inversions", "BLOCK"]
