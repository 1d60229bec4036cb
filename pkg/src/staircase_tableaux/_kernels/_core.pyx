# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Must stay draw-for-draw identical to ``_fallback``."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport calloc, free, realloc

cnp.import_array()

BLOCK = 4096


cdef class _Uniforms:
    cdef object rng
    cdef double[::1] buf
    cdef Py_ssize_t pos

    def __init__(self, rng):
        self.rng = rng
        self.pos = BLOCK

    cdef inline double draw(self):
        if self.pos == BLOCK:
            self.buf = np.ascontiguousarray(self.rng.random(BLOCK), dtype=np.float64)
            self.pos = 0
        cdef double u = self.buf[self.pos]
        self.pos += 1
        return u


def hook_walk(parts, rng):
    """Uniform shifted standard tableau of the strict partition ``parts``, as rows."""
    cdef Py_ssize_t nrows = len(parts)
    if nrows == 0:
        return []
    cdef cnp.int64_t[::1] lens = np.array(parts, dtype=np.int64)
    cdef Py_ssize_t width = lens[0]
    cdef cnp.int64_t[:, ::1] grid = np.zeros((nrows, width), dtype=np.int64)
    cdef cnp.int64_t[::1] bottom = np.full(width, -1, dtype=np.int64)
    cdef Py_ssize_t i, j, p, total = 0
    for i in range(nrows):
        p = lens[i]
        total += p
        for j in range(i, i + p):
            bottom[j] = i
    cdef _Uniforms src = _Uniforms(rng)
    cdef Py_ssize_t value, arm, leg, extra, m, r
    for value in range(total, 0, -1):
        while True:
            i = <Py_ssize_t>(src.draw() * width)
            j = <Py_ssize_t>(src.draw() * width)
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
            r = <Py_ssize_t>(src.draw() * m)
            if r < arm:
                j = j + 1 + r
            elif r < arm + leg:
                i = i + 1 + (r - arm)
            else:
                i, j = j + 1, j + 1 + (r - arm - leg)
        grid[i, j - i] = value
        lens[i] -= 1
        bottom[j] = i - 1
    arr = np.asarray(grid)
    return [arr[i, :parts[i]].tolist() for i in range(nrows)]


def ws_uninsert(rows, steps):
    """Invert Worley-Sagan insertion; see ``_fallback.ws_uninsert``."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t width = max([len(row) for row in rows], default=0)
    cdef cnp.int64_t[:, ::1] grid = np.zeros((max(nrows, 1), max(width, 1)), dtype=np.int64)
    cdef cnp.int64_t[::1] lens = np.zeros(max(nrows, 1), dtype=np.int64)
    cdef Py_ssize_t i, k
    for i in range(nrows):
        row = rows[i]
        lens[i] = len(row)
        for k in range(lens[i]):
            grid[i, k] = row[k]
    cdef Py_ssize_t nsteps = len(steps)
    cdef cnp.int64_t[::1] srow = np.zeros(max(nsteps, 1), dtype=np.int64)
    cdef cnp.int64_t[::1] scol = np.zeros(max(nsteps, 1), dtype=np.int64)
    cdef cnp.uint8_t[::1] smark = np.zeros(max(nsteps, 1), dtype=np.uint8)
    for k in range(nsteps):
        st = steps[k]
        srow[k] = st[0]
        scol[k] = st[1]
        smark[k] = 1 if st[2] else 0
    cdef cnp.int64_t[::1] out = np.zeros(max(nsteps, 1), dtype=np.int64)
    cdef Py_ssize_t s, r, c, j, last, lo, hi, mid, row_mode_from
    cdef cnp.int64_t y, tmp
    for s in range(nsteps - 1, -1, -1):
        r = srow[s]
        c = scol[s]
        if r < 0 or r >= nrows or c != r + lens[r] - 1:
            raise ValueError("largest recording entry is not at the end of its row")
        y = grid[r, lens[r] - 1]
        lens[r] -= 1
        row_mode_from = r
        if smark[s]:
            j = c - 1
            while True:
                last = j if j < nrows - 1 else nrows - 1
                while last >= 0 and last + lens[last] - 1 < j:
                    last -= 1
                lo = 0
                hi = last + 1
                while lo < hi:
                    mid = (lo + hi) // 2
                    if grid[mid, j - mid] <= y:
                        lo = mid + 1
                    else:
                        hi = mid
                i = lo - 1
                if i < 0:
                    raise ValueError("invalid pair: column un-bumping failed")
                if i == j:
                    row_mode_from = j + 1
                    break
                tmp = grid[i, j - i]
                grid[i, j - i] = y
                y = tmp
                j -= 1
        for i in range(row_mode_from - 1, -1, -1):
            lo = 0
            hi = lens[i]
            while lo < hi:
                mid = (lo + hi) // 2
                if grid[i, mid] < y:
                    lo = mid + 1
                else:
                    hi = mid
            k = lo - 1
            if k < 0:
                raise ValueError("invalid pair: row un-bumping failed")
            tmp = grid[i, k]
            grid[i, k] = y
            y = tmp
        out[s] = y
    return np.asarray(out)[:nsteps].tolist()


def word_inversions(word, Py_ssize_t n):
    """Inversion created by each letter; rejects non-reduced words."""
    cdef cnp.int64_t[::1] current = np.arange(1, n + 1, dtype=np.int64)
    cdef Py_ssize_t p = len(word), k, letter
    cdef cnp.int64_t x, y
    created = []
    for k in range(p):
        letter = word[k]
        if letter < 1 or letter >= n:
            raise ValueError(f"letter {letter} out of range for S_{n}")
        x = current[letter - 1]
        y = current[letter]
        if x > y:
            raise ArithmeticError("word is not reduced")
        current[letter - 1] = y
        current[letter] = x
        created.append((x, y))
    return created


cdef struct _Row:
    cnp.int64_t* data
    Py_ssize_t len
    Py_ssize_t cap


cdef int _push(_Row* row, cnp.int64_t x) except -1:
    cdef Py_ssize_t cap
    cdef cnp.int64_t* grown
    if row.len == row.cap:
        cap = 8 if row.cap == 0 else 2 * row.cap
        grown = <cnp.int64_t*> realloc(row.data, cap * sizeof(cnp.int64_t))
        if grown == NULL:
            raise MemoryError()
        row.data = grown
        row.cap = cap
    row.data[row.len] = x
    row.len += 1
    return 0


def ws_insert_word(word):
    """Worley-Sagan insertion; same contract as ``_fallback.ws_insert_word``."""
    cdef Py_ssize_t L = len(word)
    # the diagonal strictly increases, so there are at most L rows
    cdef _Row* rows = <_Row*> calloc(L + 1, sizeof(_Row))
    if rows == NULL:
        raise MemoryError()
    cdef Py_ssize_t nrows = 0, s, i, j, k, t, lo, hi, mid
    cdef cnp.int64_t x, tmp
    cdef bint placed
    steps = []
    try:
        for s in range(L):
            x = word[s]
            i = 0
            placed = False
            while True:
                if i == nrows:
                    _push(&rows[i], x)
                    nrows += 1
                    steps.append((i, i, False))
                    placed = True
                    break
                # first entry strictly greater than x
                lo, hi = 0, rows[i].len
                while lo < hi:
                    mid = (lo + hi) // 2
                    if rows[i].data[mid] <= x:
                        lo = mid + 1
                    else:
                        hi = mid
                k = lo
                if k == rows[i].len:
                    _push(&rows[i], x)
                    steps.append((i, i + k, False))
                    placed = True
                    break
                tmp = rows[i].data[k]
                rows[i].data[k] = x
                x = tmp
                if k == 0:
                    break
                i += 1
            if placed:
                continue
            j = i + 1
            while True:
                t = 0
                while t < nrows and t <= j and j < t + rows[t].len:
                    t += 1
                k = 0
                while k < t and rows[k].data[j - k] < x:
                    k += 1
                if k == t:
                    if t == nrows:
                        nrows += 1
                    if t + rows[t].len != j:
                        raise AssertionError("column insertion left the shifted shape")
                    _push(&rows[t], x)
                    steps.append((t, j, True))
                    break
                tmp = rows[k].data[j - k]
                rows[k].data[j - k] = x
                x = tmp
                j += 1
        out = [[rows[i].data[k] for k in range(rows[i].len)] for i in range(nrows)]
    finally:
        for i in range(L + 1):
            free(rows[i].data)
        free(rows)
    return out, steps
