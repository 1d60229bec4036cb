"""Exact counts and truncated generating functions.

Counts are Python ints, so nothing overflows. Every closed formula here has a
brute-force counterpart (``count_linear_extensions`` or a direct enumeration of
fillings) that the tests compare against.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterable, Iterator

from .shapes import (
    Cell,
    Partition,
    SkewShape,
    StrictPartition,
    cell_census,
    contains,
    shifted_staircase,
    staircase,
    subtract_reflect,
    trapezoid,
)
from .tableaux import (
    Letter,
    descent_set,
    enumerate_set_valued,
    enumerate_standard,
    iter_descent_contents,
)

MAX_ORACLE_CELLS = 20
MAX_GF_VARS = 4
MAX_GF_DEGREE = 12


# -- superfactorials and the product formula --------------------------------------------

def double_factorial(m: int) -> int:
    return prod(range(m, 0, -2)) if m > 0 else 1


def superfactorials(m: int) -> tuple[int, int]:
    """``F(m) = 1! 2! ... (m-1)!`` and ``G(m) = 1!! 3!! ... (2m-3)!!``."""
    f = prod(factorial(i) for i in range(1, m))
    g = prod(double_factorial(2 * i - 1) for i in range(1, m))
    return f, g


def _F(m: int) -> int:
    return superfactorials(m)[0]


def _G(m: int) -> int:
    return superfactorials(m)[1]


def product_formula(a: int, b: int, c: int) -> int:
    """Number of standard tableaux of ``delta_{a+b+2c} / (b^a)`` by the superfactorial product.

    Raises ``ArithmeticError`` if the quotient is not an integer.
    """
    if min(a, b, c) < 0:
        raise ValueError("a, b, c must be nonnegative")
    k = a + b + 2 * c
    if k < 2:
        raise ValueError("the staircase needs a + b + 2c >= 2")
    n = comb(k, 2) - a * b
    num = factorial(n) * _F(a) * _F(b) * _F(c) * _F(a + b + c) * _G(c) * _G(a + b + c)
    den = _F(a + b) * _F(b + c) * _F(a + c) * _G(a + c) * _G(b + c) * _G(a + b + 2 * c)
    q = Fraction(num, den)
    if q.denominator != 1:
        raise ArithmeticError(f"product formula gave non-integer {q} for {(a, b, c)}")
    return q.numerator


# -- brute-force oracle -------------------------------------------------------------------

def count_linear_extensions(shape: SkewShape, bound: int = MAX_ORACLE_CELLS) -> int:
    """Linear extensions of the cell poset, by a dynamic program over order ideals."""
    cells = shape.cells()
    if len(cells) > bound:
        raise ValueError(f"shape has {len(cells)} cells, oracle bound is {bound}")
    index = {c: i for i, c in enumerate(cells)}
    need = []
    for r, c in cells:
        mask = 0
        for x in ((r - 1, c), (r, c - 1)):
            if x in index:
                mask |= 1 << index[x]
        need.append(mask)
    layer = {0: 1}
    for _ in cells:
        nxt: dict[int, int] = {}
        for ideal, ways in layer.items():
            for i, mask in enumerate(need):
                if not (ideal >> i) & 1 and ideal & mask == mask:
                    key = ideal | (1 << i)
                    nxt[key] = nxt.get(key, 0) + ways
        layer = nxt
    return sum(layer.values())


# -- hook-length formulas -------------------------------------------------------------------

def hook_lengths(lam: Iterable[int]) -> dict[Cell, int]:
    lam = Partition(lam)
    conj = [sum(1 for p in lam if p >= j) for j in range(1, (lam[0] if lam else 0) + 1)]
    return {(i, j): lam[i - 1] - j + conj[j - 1] - i + 1
            for i in range(1, len(lam) + 1) for j in range(1, lam[i - 1] + 1)}


def hlf(lam: Iterable[int]) -> int:
    lam = Partition(lam)
    return factorial(lam.size) // prod(hook_lengths(lam).values())


def doubled_diagram(eta: Iterable[int]) -> Partition:
    """Partition with Frobenius coordinates ``(eta | eta - 1)``."""
    eta = StrictPartition(eta)
    if not eta:
        return Partition()
    rows = []
    d = len(eta)
    legs = [p - 1 for p in eta]
    for i in range(1, d + 1):
        rows.append(eta[i - 1] + i)
    col_len = [legs[j - 1] + j for j in range(1, d + 1)]
    r = d + 1
    while True:
        length = sum(1 for cl in col_len if cl >= r)
        if length == 0:
            break
        rows.append(length)
        r += 1
    return Partition(rows)


def shifted_hook_lengths(eta: Iterable[int]) -> dict[Cell, int]:
    """Shifted hooks: cell ``(i, j)`` takes the ordinary hook of ``(i, j+1)`` in the doubled diagram."""
    eta = StrictPartition(eta)
    hooks = hook_lengths(doubled_diagram(eta))
    return {(i, j): hooks[(i, j + 1)]
            for i in range(1, len(eta) + 1) for j in range(i, i + eta[i - 1])}


def shifted_hlf(eta: Iterable[int]) -> int:
    eta = StrictPartition(eta)
    if not eta:
        return 1
    return factorial(eta.size) // prod(shifted_hook_lengths(eta).values())


# -- Feit determinant ---------------------------------------------------------------------

def feit(lam: Iterable[int], mu: Iterable[int] = ()) -> int:
    """``n! det[1 / (lam_i - mu_j - i + j)!]`` with ``1/m! = 0`` for negative ``m``."""
    import sympy

    lam, mu = list(Partition(lam)), list(Partition(mu))
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not inside {lam}")
    L = len(lam)
    if L > 12:
        raise ValueError("feit supports at most 12 rows")
    mu = mu + [0] * (L - len(mu))
    n = sum(lam) - sum(mu)
    if L == 0:
        return 1

    def entry(i, j):
        m = lam[i] - mu[j] - i + j
        return sympy.Rational(1, factorial(m)) if m >= 0 else sympy.Integer(0)

    det = sympy.Matrix(L, L, entry).det(method="bareiss")
    value = det * factorial(n)
    if not value.is_integer:
        raise ArithmeticError(f"Feit determinant gave non-integer {value}")
    return int(value)


# -- the exponent of two and the target shape ---------------------------------------------

def eta_shape(k: int, a: int, b: int) -> StrictPartition:
    """Shifted staircase ``rho_k`` minus the trapezoid of the ``a x b`` rectangle."""
    if a * b == 0:
        return shifted_staircase(k)
    if a + b >= k:
        raise ValueError(f"need a + b < k, got {a} + {b} >= {k}")
    return subtract_reflect(shifted_staircase(k), trapezoid(a, b))


def mark_exponent(k: int, a: int, b: int) -> int:
    """Free mark bits on ``eta``: its number of off-diagonal cells."""
    return cell_census(eta_shape(k, a, b))[1]


def printed_mark_exponent(k: int, a: int, b: int) -> int:
    """``|eta| - k + a``, kept for comparison; :func:`mark_exponent` is ``|eta| - k + 1 + min(a, b)``."""
    return eta_shape(k, a, b).size - k + a


def skew_staircase_count(k: int, a: int = 0, b: int = 0, method: str = "formula") -> int:
    """``|SYT(delta_k / (b^a))|`` by one of: formula, feit, oracle, shifted."""
    if a * b == 0:
        a = b = 0
    if a and a + b >= k:
        raise ValueError(f"need a + b < k, got {a} + {b} >= {k}")
    if method == "formula":
        if (k - a - b) % 2:
            raise ValueError("the product formula needs k - a - b even")
        return product_formula(a, b, (k - a - b) // 2)
    if method == "feit":
        return feit(staircase(k), [b] * a)
    if method == "oracle":
        return count_linear_extensions(SkewShape(staircase(k), [b] * a))
    if method == "shifted":
        return 2 ** mark_exponent(k, a, b) * shifted_hlf(eta_shape(k, a, b))
    raise ValueError(f"unknown counting method {method!r}")


# -- Littlewood-Richardson coefficients ------------------------------------------------------

def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int], bound: int = 16) -> int:
    """Count LR tableaux: semistandard fillings of ``lam/mu`` with content ``nu`` whose
    reverse reading word (rows top to bottom, each right to left) is a lattice word."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size or not contains(lam, mu):
        return 0
    if lam.size - mu.size > bound:
        raise ValueError("skew shape exceeds the LR enumeration bound")
    shape = SkewShape(lam, mu)
    order = [(r, c) for r in range(1, len(lam) + 1) for c in reversed(shape.row_range(r))]
    filled: dict[Cell, int] = {}
    used = [0] * (len(nu) + 2)

    def rec(idx):
        if idx == len(order):
            return 1
        r, c = order[idx]
        hi = filled.get((r, c + 1), len(nu))
        lo = filled.get((r - 1, c), 0) + 1
        total = 0
        for v in range(lo, min(hi, len(nu)) + 1):
            if used[v] >= nu[v - 1]:
                continue
            if v > 1 and used[v - 1] <= used[v]:
                continue
            used[v] += 1
            filled[(r, c)] = v
            total += rec(idx + 1)
            del filled[(r, c)]
            used[v] -= 1
        return total

    return rec(0)


# -- truncated generating functions ----------------------------------------------------------

@dataclass
class MonomialGF:
    """Polynomial in ``numvars`` variables keeping only monomials of degree at most ``maxdeg``."""

    numvars: int
    maxdeg: int
    coeffs: dict[tuple[int, ...], int] = field(default_factory=dict)

    def add(self, exps: Iterable[int], c: int = 1) -> None:
        exps = tuple(exps)
        if len(exps) != self.numvars:
            raise ValueError("exponent vector has the wrong length")
        if sum(exps) > self.maxdeg or c == 0:
            return
        v = self.coeffs.get(exps, 0) + c
        if v:
            self.coeffs[exps] = v
        else:
            del self.coeffs[exps]

    def add_content(self, content: Iterable[int]) -> None:
        exps = [0] * self.numvars
        for x in content:
            exps[x - 1] += 1
        self.add(exps)

    def __add__(self, other: "MonomialGF") -> "MonomialGF":
        self._check(other)
        out = MonomialGF(self.numvars, self.maxdeg, dict(self.coeffs))
        for e, c in other.coeffs.items():
            out.add(e, c)
        return out

    def scale(self, k: int) -> "MonomialGF":
        return MonomialGF(self.numvars, self.maxdeg, {e: k * c for e, c in self.coeffs.items() if k})

    def _check(self, other: "MonomialGF") -> None:
        if (self.numvars, self.maxdeg) != (other.numvars, other.maxdeg):
            raise ValueError("generating functions have different truncations")

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialGF):
            return NotImplemented
        return (self.numvars, self.maxdeg, self.coeffs) == (other.numvars, other.maxdeg, other.coeffs)

    def __getitem__(self, exps) -> int:
        return self.coeffs.get(tuple(exps), 0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_symmetric(self) -> bool:
        from itertools import permutations
        return all(self[p] == c for e, c in self.coeffs.items() for p in permutations(e))

    def to_json(self) -> dict:
        terms = [{"e": list(e), "c": str(c)} for e, c in sorted(self.coeffs.items())]
        return {"vars": self.numvars, "deg": self.maxdeg, "terms": terms}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj) -> "MonomialGF":
        if isinstance(obj, str):
            obj = json.loads(obj)
        out = cls(obj["vars"], obj["deg"])
        for t in obj["terms"]:
            out.add(t["e"], int(t["c"]))
        return out

    def __repr__(self) -> str:
        return f"MonomialGF(vars={self.numvars}, deg={self.maxdeg}, terms={len(self.coeffs)})"


def _semistandard_fillings(shape: SkewShape, numvars: int, marked: bool) -> Iterator[dict[Cell, object]]:
    """Semistandard fillings with letters in ``[numvars]``, plain or marked shifted.

    Marked fillings use the order 1' < 1 < 2' < 2 < ...; an unmarked letter may
    repeat along a row, a marked letter may repeat down a column, and diagonal
    cells stay unmarked.
    """
    cells = shape.cells()
    if marked:
        alphabet = [Letter(v, m) for v in range(1, numvars + 1) for m in (True, False)]
    else:
        alphabet = list(range(1, numvars + 1))
    filled: dict[Cell, object] = {}

    def ok(cell, x):
        r, c = cell
        left, up = filled.get((r, c - 1)), filled.get((r - 1, c))
        if not marked:
            return (left is None or left <= x) and (up is None or up < x)
        if x.marked and r == c:
            return False
        if left is not None and (left > x or (left == x and x.marked)):
            return False
        if up is not None and (up > x or (up == x and not x.marked)):
            return False
        return True

    def rec(i):
        if i == len(cells):
            yield dict(filled)
            return
        cell = cells[i]
        for x in alphabet:
            if ok(cell, x):
                filled[cell] = x
                yield from rec(i + 1)
                del filled[cell]

    yield from rec(0)


def _content_of(values: Iterable) -> list[int]:
    return [x.value if isinstance(x, Letter) else x for x in values]


def _check_gf_bounds(numvars: int, maxdeg: int) -> None:
    if numvars > MAX_GF_VARS or maxdeg > MAX_GF_DEGREE:
        raise ValueError(f"truncation bounds are {MAX_GF_VARS} variables, degree {MAX_GF_DEGREE}")


GF_KINDS = ("schur", "schur_skew", "schurP", "schurP_skew", "grothendieck_G", "grothendieck_GP")


def gf_truncate(kind: str, shape: SkewShape, numvars: int, maxdeg: int) -> MonomialGF:
    """Truncated monomial expansion of a Schur, Schur P, G or GP function.

    Schur and Schur P functions sum ``x^T`` over semistandard fillings. ``G`` and
    ``GP`` sum ``x^i`` over set-valued standard tableaux ``T`` of every size up to
    ``maxdeg`` and content vectors ``i`` that strictly ascend at ``Des(T)``.
    """
    _check_gf_bounds(numvars, maxdeg)
    if kind not in GF_KINDS:
        raise ValueError(f"unknown generating function {kind!r}")
    wants_shifted = kind in ("schurP", "schurP_skew", "grothendieck_GP")
    if shape.shifted != wants_shifted:
        raise ValueError(f"{kind} needs a {'shifted' if wants_shifted else 'straight'} shape")
    if kind in ("schur", "schurP") and shape.inner:
        raise ValueError(f"{kind} needs a straight shape; use {kind}_skew")
    gf = MonomialGF(numvars, maxdeg)
    if kind.startswith("schur"):
        if shape.size <= maxdeg:
            for filling in _semistandard_fillings(shape, numvars, marked=wants_shifted):
                gf.add_content(_content_of(filling.values()))
        return gf
    set_kind = "marked_shifted" if wants_shifted else "plain"
    for size in range(shape.size, maxdeg + 1):
        for t in enumerate_set_valued(shape, size, set_kind, bound=max(size, 1)):
            des = descent_set(t)
            if len(des) >= numvars:
                continue
            for content in iter_descent_contents(des, size, numvars):
                gf.add_content(content)
    return gf


def fundamental_expansion(descent_sets: Iterable[Iterable[int]], size: int, numvars: int,
                          maxdeg: int | None = None) -> MonomialGF:
    """Sum of fundamental quasisymmetric functions ``F_S`` over a multiset of descent sets."""
    maxdeg = size if maxdeg is None else maxdeg
    gf = MonomialGF(numvars, maxdeg)
    if size > maxdeg:
        return gf
    for des in descent_sets:
        for content in iter_descent_contents(des, size, numvars):
            gf.add_content(content)
    return gf


def tableau_fundamental_expansion(shape: SkewShape, numvars: int, reverse: bool = False) -> MonomialGF:
    """``sum_T F_{Des(T)}`` over standard tableaux, or with ``Des(T)^r`` when ``reverse``."""
    n = shape.size
    sets = []
    for t in enumerate_standard(shape):
        d = descent_set(t)
        sets.append(frozenset(n - i for i in d) if reverse else d)
    return fundamental_expansion(sets, n, numvars)


# -- Schur P expansion of skew staircases --------------------------------------------------------

def schurP_expand(n: int, mu: Iterable[int]) -> Counter:
    """Multiset of shifted shapes ``nu`` with ``s_{delta_n/mu} = sum P_nu``.

    One shape per distinct Worley-Sagan insertion tableau among the reduced
    words of the skew staircase permutation.
    """
    from .insertion import ws_insert
    from .words import phi

    if n > 6:
        raise ValueError("schurP_expand supports n <= 6")
    shape = SkewShape(staircase(n), Partition(mu))
    seen = {}
    for t in enumerate_standard(shape, bound=shape.size):
        p = ws_insert(phi(t)).p
        seen.setdefault(p, StrictPartition(p.shape.outer))
    return Counter(seen.values())


def schurP_sum(shapes: Counter, numvars: int, maxdeg: int) -> MonomialGF:
    gf = MonomialGF(numvars, maxdeg)
    for nu, mult in shapes.items():
        gf = gf + gf_truncate("schurP", SkewShape(nu, (), True), numvars, maxdeg).scale(mult)
    return gf
