"""Uniform random tableaux.

The shifted hook walk draws a uniform shifted standard tableau of ``eta``;
fair coins on the off-diagonal cells make it a uniform marked tableau, and
``psi`` carries that to a uniform standard tableau of the staircase minus a
rectangle. ``sample_exact`` is a slower corner-by-corner sampler kept as an
independent check on the hook walk.
"""

from __future__ import annotations

import csv
import time
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .bijections import psi
from .counting import eta_shape, shifted_hlf
from .shapes import SkewShape, StrictPartition
from .tableaux import Letter, Tableau, value_of

MAX_EXACT_CELLS = 1000


def make_rng(seed: int | np.random.SeedSequence | None = None) -> np.random.Generator:
    return np.random.default_rng(seed)


def split_streams(seed: int, count: int) -> list[np.random.Generator]:
    """Independent generators for parallel tasks, derived from one seed."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def _shifted_from_rows(rows: list[list[int]], parts: Sequence[int]) -> Tableau:
    entries = {(i + 1, i + 1 + k): v for i, row in enumerate(rows) for k, v in enumerate(row)}
    return Tableau(SkewShape(StrictPartition(parts), (), True), entries)


def sample_shifted_rows(eta: Iterable[int], rng: np.random.Generator) -> list[list[int]]:
    """Hook-walk sample as plain rows (row ``i`` starts in column ``i``)."""
    return _kernels.hook_walk(list(StrictPartition(eta)), rng)


def sample_shifted_syt(eta: Iterable[int], rng: np.random.Generator) -> Tableau:
    """Uniform shifted standard tableau of the strict partition ``eta``."""
    eta = StrictPartition(eta)
    return _shifted_from_rows(sample_shifted_rows(eta, rng), eta)


def _shifted_corners(parts: list[int]) -> list[int]:
    """Rows whose last cell can be removed leaving a strict partition."""
    out = []
    for i, p in enumerate(parts):
        if p == 0:
            continue
        nxt = parts[i + 1] if i + 1 < len(parts) else 0
        if p - 1 > nxt or (p == 1 and nxt == 0):
            out.append(i)
    return out


def _randbelow(rng: np.random.Generator, bound: int) -> int:
    """Exactly uniform integer in ``[0, bound)`` for arbitrarily large ``bound``."""
    nbits = max(bound.bit_length(), 1)
    nbytes = (nbits + 7) // 8
    while True:
        x = int.from_bytes(rng.bytes(nbytes), "little") >> (8 * nbytes - nbits)
        if x < bound:
            return x


def sample_exact(eta: Iterable[int], rng: np.random.Generator) -> Tableau:
    """Uniform shifted standard tableau by exact corner probabilities.

    The largest value goes to corner ``c`` with probability ``g(eta - c) / g(eta)``
    where ``g`` counts shifted standard tableaux; then recurse.
    """
    eta = StrictPartition(eta)
    if eta.size > MAX_EXACT_CELLS:
        raise ValueError(f"sample_exact supports at most {MAX_EXACT_CELLS} cells")
    parts = list(eta)
    entries = {}
    for value in range(eta.size, 0, -1):
        total = shifted_hlf([p for p in parts if p])
        options = []
        for i in _shifted_corners(parts):
            parts[i] -= 1
            options.append((i, shifted_hlf([p for p in parts if p])))
            parts[i] += 1
        u = _randbelow(rng, total)
        acc = 0
        for i, weight in options:
            acc += weight
            if u < acc:
                break
        entries[(i + 1, i + parts[i])] = value
        parts[i] -= 1
    return Tableau(SkewShape(eta, (), True), entries)


def random_marks(t: Tableau, rng: np.random.Generator) -> Tableau:
    """Mark each off-diagonal cell with a fair coin, consumed in row-major order."""
    cells = [c for c in t.cells() if c[0] != c[1]]
    coins = rng.integers(0, 2, size=len(cells)) if cells else []
    marked = {c for c, b in zip(cells, coins) if b}
    return Tableau(t.shape, {c: Letter(value_of(v), c in marked) for c, v in t.items()})


def sample_marked_shifted(eta: Iterable[int], rng: np.random.Generator) -> Tableau:
    return random_marks(sample_shifted_syt(eta, rng), rng)


def sample_skew_staircase(k: int, a: int = 0, b: int = 0,
                          rng: np.random.Generator | None = None) -> Tableau:
    """Uniform standard tableau of ``delta_k / (b^a)``.

    Draws a uniform marked shifted tableau of ``eta(k, a, b)`` and applies ``psi``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    if a * b == 0:
        a = b = 0
    elif a + b >= k:
        raise ValueError(f"need a + b < k, got {a} + {b} >= {k}")
    rng = make_rng() if rng is None else rng
    u = sample_marked_shifted(eta_shape(k, a, b), rng)
    return psi(u, rows=a, cols=b, n=k)


def sample_staircase(k: int, rng: np.random.Generator | None = None) -> Tableau:
    return sample_skew_staircase(k, 0, 0, rng)


# -- export ---------------------------------------------------------------------------

CSV_HEADER = ["row", "col", "entry", "marked"]


def write_csv(t: Tableau, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_HEADER)
        for (r, c), v in t.items():
            w.writerow([r, c, value_of(v), int(isinstance(v, Letter) and v.marked)])


def read_csv(path, shifted: bool | None = None) -> Tableau:
    """Read a tableau written by :func:`write_csv`.

    The shape is inferred from the cells. By default it is read as shifted when
    every row starts on the diagonal and there is more than one row.
    """
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != CSV_HEADER:
            raise ValueError(f"expected CSV columns {','.join(CSV_HEADER)}")
        entries = {}
        any_marked = False
        for line in reader:
            try:
                r, c, v, m = int(line["row"]), int(line["col"]), int(line["entry"]), int(line["marked"])
            except (TypeError, ValueError):
                raise ValueError(f"malformed CSV line {line}") from None
            entries[(r, c)] = (v, bool(m))
            any_marked |= bool(m)
    if not entries:
        raise ValueError("CSV holds no cells")
    if shifted is None:
        shifted = _looks_shifted(entries) and any(r > 1 for r, _ in entries)
    if any_marked:
        vals = {cell: Letter(v, m) for cell, (v, m) in entries.items()}
    else:
        vals = {cell: v for cell, (v, _) in entries.items()}
    return Tableau.from_cells(vals, shifted=shifted)


def _looks_shifted(entries) -> bool:
    firsts = {}
    for r, c in entries:
        firsts[r] = min(c, firsts.get(r, c))
    return all(firsts[r] == r for r in firsts)


def to_grid(t: Tableau) -> np.ndarray:
    """Entries normalized to (0, 1] on a row/column grid; empty cells are NaN."""
    rows = max(r for r, _ in t.cells())
    cols = max(c for _, c in t.cells())
    grid = np.full((rows, cols), np.nan)
    n = len(t)
    for (r, c), v in t.items():
        grid[r - 1, c - 1] = value_of(v) / n
    return grid


# -- timing ---------------------------------------------------------------------------

def time_sample(k: int, a: int, b: int, seed: int = 0) -> float:
    rng = make_rng(seed)
    start = time.perf_counter()
    sample_skew_staircase(k, a, b, rng)
    return time.perf_counter() - start


def benchmark_scaling(k_list: Iterable[int], reps: int, seed: int = 0,
                      rect=lambda k: (k // 5, k // 3)) -> list[tuple[int, float]]:
    """Median wall-clock seconds of one staircase sample per ``k``.

    ``rect(k)`` gives the removed rectangle ``(a, b)``; the default keeps the
    proportions of a 60 x 100 rectangle in the staircase of 300.
    """
    if reps <= 0:
        return []
    table = []
    for k in k_list:
        a, b = rect(k)
        times = [time_sample(k, a, b, seed + r) for r in range(reps)]
        table.append((k, float(np.median(times))))
    return table


def fitted_exponent(table: Sequence[tuple[int, float]]) -> float:
    """Slope of log(time) against log(k) by least squares."""
    if len(table) < 2:
        raise ValueError("need at least two points to fit an exponent")
    ks = np.log([k for k, _ in table])
    ts = np.log([t for _, t in table])
    slope, _ = np.polyfit(ks, ts, 1)
    return float(slope)


def write_benchmark_csv(table: Sequence[tuple[int, float]], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["k", "seconds"])
        w.writerows(table)
