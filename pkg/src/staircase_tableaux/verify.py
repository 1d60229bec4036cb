"""Exhaustive small-case checks behind ``staircase-tableaux verify``.

Each check takes ``max_n`` (the largest staircase to visit) and returns
``(ok, detail)``. Checks are registered per suite; ``run_suite`` collects them.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable

from .bijections import mixed_route, phi_map, psi, stembridge_map, target_shape
from .counting import (
    count_linear_extensions,
    eta_shape,
    feit,
    gf_truncate,
    hlf,
    lr_coefficient,
    mark_exponent,
    printed_mark_exponent,
    product_formula,
    schurP_expand,
    schurP_sum,
    shifted_hlf,
    tableau_fundamental_expansion,
    _semistandard_fillings,
)
from .insertion import (
    evacuation,
    jdt_slide,
    minimal_increasing,
    mixed_insert,
    rectify,
    rsk,
    rsk_inverse,
    shifted_rectify,
    superstandard,
    ws_insert,
    ws_inverse,
)
from .shapes import (
    SkewShape,
    StrictPartition,
    cell_census,
    conjugate,
    corners,
    iter_partitions,
    iter_partitions_inside,
    iter_strict_partitions_inside,
    rectangle,
    shifted_staircase,
    staircase,
    subtract_reflect,
    trapezoid,
)
from .tableaux import (
    Tableau,
    content_expand,
    descent_set,
    enumerate_marked_standard,
    enumerate_set_valued,
    enumerate_standard,
    is_marked_standard,
    is_set_valued,
    is_standard,
    iter_descent_contents,
    standardize,
    toggle_marks,
    value_of,
    word_descents,
)
from .words import (
    braid_neighbors,
    commutation_neighbors,
    first_two_same_parity,
    hecke_expressions,
    hecke_product,
    inverse,
    is_closed,
    partition_classes,
    phi,
    phi_inverse,
    reduced_words,
    res,
    res_inverse,
    rewrite_class,
    w_skew_staircase,
    w_staircase,
)

SUITES = ("properties", "words", "insertion", "bijections", "counting", "ktheory")


@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str
    seconds: float

    def to_json(self) -> dict:
        return {"suite": self.suite, "name": self.name, "ok": self.ok,
                "detail": self.detail, "seconds": round(self.seconds, 3)}


_REGISTRY: dict[str, list[tuple[str, Callable[[int], tuple[bool, str]]]]] = {s: [] for s in SUITES}


def check(suite: str):
    def wrap(fn):
        _REGISTRY[suite].append((fn.__name__.removeprefix("check_"), fn))
        return fn
    return wrap


def checks_in(suite: str) -> list[str]:
    return [name for name, _ in _REGISTRY[suite]]


def run_check(suite: str, name: str, max_n: int) -> CheckResult:
    fn = dict(_REGISTRY[suite])[name]
    start = time.perf_counter()
    try:
        ok, detail = fn(max_n)
    except Exception as exc:  # a crash is a failed check, not a crashed run
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(suite, name, bool(ok), detail, time.perf_counter() - start)


def run_suite(suite: str, max_n: int = 5, threads: int = 1) -> list[CheckResult]:
    """Run one suite (or ``all``); results come back in registration order."""
    suites = SUITES if suite == "all" else (suite,)
    for s in suites:
        if s not in _REGISTRY:
            raise KeyError(f"unknown suite {s!r}")
    jobs = [(s, name) for s in suites for name in checks_in(s)]
    if threads <= 1:
        return [run_check(s, name, max_n) for s, name in jobs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda job: run_check(job[0], job[1], max_n), jobs))


# -- shared enumerations ---------------------------------------------------------------

def _rect_params(max_n: int, cap: int = 6):
    for n in range(3, min(max_n, cap) + 1):
        for rows in range(1, n):
            for cols in range(1, n - rows):
                yield n, rows, cols


def _straight_shapes(max_cells: int):
    for m in range(1, max_cells + 1):
        for lam in iter_partitions(m):
            yield SkewShape(lam)


def _skew_shapes(max_cells: int, outer_cap=(4, 3, 2, 1)):
    for lam in iter_partitions_inside(outer_cap):
        for mu in iter_partitions_inside(lam):
            s = SkewShape(lam, mu)
            if 0 < s.size <= max_cells:
                yield s


def _shifted_shapes(max_cells: int):
    for eta in iter_strict_partitions_inside(shifted_staircase(6)):
        if 0 < eta.size <= max_cells:
            yield SkewShape(eta, (), True)


def _fail(msg: str, bad) -> tuple[bool, str]:
    return False, f"{msg}: {bad}"


# -- properties ----------------------------------------------------------------------

@check("properties")
def check_conjugate_involution(max_n):
    bound = min(12, 2 * max_n)
    total = 0
    for m in range(0, bound + 1):
        for lam in iter_partitions(m, max_part=bound):
            if len(lam) > bound:
                continue
            total += 1
            if conjugate(conjugate(lam)) != lam or sum(conjugate(lam)) != m:
                return _fail("conjugate is not an involution", lam)
    return True, f"{total} partitions"


@check("properties")
def check_subtract_reflect_size(max_n):
    # the mirror of a shifted staircase minus an order ideal is always straight
    pairs = 0
    for n in range(2, max_n + 4):
        outer = shifted_staircase(n)
        for inner in iter_strict_partitions_inside(outer):
            pairs += 1
            out = subtract_reflect(outer, inner)
            if out.size != outer.size - inner.size:
                return _fail("cell count changed", (outer, inner))
    return True, f"{pairs} pairs"


@check("properties")
def check_shifted_embedding_isomorphism(max_n):
    count = 0
    for lam in iter_partitions_inside(staircase(max_n)):
        for mu in iter_partitions_inside(lam):
            s = SkewShape(lam, mu)
            if s.size == 0 or s.size > 8:
                continue
            L = len(lam)
            outer = [p + L - i for i, p in enumerate(lam, start=1)]
            inner = [mu.part(i) + L - i for i in range(1, L + 1)]
            shifted = SkewShape(StrictPartition(outer), StrictPartition([x for x in inner if x]), True)
            count += 1
            if count_linear_extensions(s) != count_linear_extensions(shifted):
                return _fail("linear extension counts differ", s)
    return True, f"{count} skew shapes"


@check("properties")
def check_enumerator_self_consistency(max_n):
    shapes = list(_straight_shapes(min(6, max_n + 1))) + list(_skew_shapes(6)) + list(_shifted_shapes(6))
    for s in shapes:
        found = list(enumerate_standard(s))
        if len(set(found)) != len(found) or not all(is_standard(t) for t in found):
            return _fail("enumerator produced an invalid or repeated tableau", s)
        cells = s.cells()
        brute = 0
        for perm in permutations(range(1, len(cells) + 1)):
            if is_standard(Tableau(s, dict(zip(cells, perm)))):
                brute += 1
        if brute != len(found):
            return _fail("enumerator missed tableaux", s)
        if [tuple(t[c] for c in cells) for t in found] != sorted(tuple(t[c] for c in cells) for t in found):
            return _fail("enumeration order is not lexicographic", s)
    for s in [SkewShape((2, 1)), SkewShape((3,)), SkewShape((2, 1), (1,)), SkewShape((2,), (), True)]:
        for size in range(s.size, s.size + 3):
            found = set(enumerate_set_valued(s, size))
            cells = s.cells()
            brute = set()
            for assign in product(cells, repeat=size):
                sets = {c: frozenset(v for v, a in enumerate(assign, start=1) if a == c) for c in cells}
                if all(sets.values()):
                    t = Tableau(s, sets)
                    if is_set_valued(t, size):
                        brute.add(t)
            if found != brute:
                return _fail("set-valued enumerator disagrees with brute force", (s, size))
    return True, f"{len(shapes)} shapes"


@check("properties")
def check_marked_count(max_n):
    for s in _shifted_shapes(10 if max_n >= 5 else 8):
        off = cell_census(s.outer)[1]
        plain = sum(1 for _ in enumerate_standard(s))
        marked = sum(1 for _ in enumerate_marked_standard(s))
        if marked != 2 ** off * plain:
            return _fail("marked count is not 2^off times the plain count", s)
    return True, "all shifted shapes"


@check("properties")
def check_toggle_complement(max_n):
    checked = 0
    for s in _shifted_shapes(8):
        n = s.size
        for t in enumerate_marked_standard(s):
            u = toggle_marks(t)
            checked += 1
            if toggle_marks(u) != t:
                return _fail("toggle is not an involution", t)
            if descent_set(u) != frozenset(range(1, n)) - descent_set(t):
                return _fail("toggle does not complement descents", t)
    return True, f"{checked} tableaux"


def _fundamental_partition(shape: SkewShape, numvars: int, marked: bool) -> bool:
    gen = enumerate_marked_standard(shape) if marked else enumerate_standard(shape)
    images = Counter()
    for t in gen:
        for content in iter_descent_contents(descent_set(t), t.size, numvars):
            f = content_expand(t, content)
            images[f] += 1
            if standardize(f) != t:
                return False
    fillings = set()
    for filling in _semistandard_fillings(shape, numvars, marked):
        fillings.add(Tableau(shape, filling))
    return set(images) == fillings and all(v == 1 for v in images.values())


@check("properties")
def check_fundamental_partition(max_n):
    count = 0
    for s in list(_straight_shapes(min(6, max_n + 1))) + list(_skew_shapes(5)):
        count += 1
        if not _fundamental_partition(s, 3, False):
            return _fail("content expansion is not a partition of SSYT", s)
    for s in _shifted_shapes(min(6, max_n + 1)):
        count += 1
        if not _fundamental_partition(s, 3, True):
            return _fail("content expansion is not a partition of marked SSYT", s)
    return True, f"{count} shapes"


@check("properties")
def check_evacuation(max_n):
    count = 0
    for s in list(_straight_shapes(min(6, max_n + 1))) + [SkewShape(staircase(4))]:
        n = s.size
        for t in enumerate_standard(s):
            e = evacuation(t)
            count += 1
            if evacuation(e) != t:
                return _fail("evacuation is not an involution", t)
            if descent_set(e) != frozenset(n - i for i in descent_set(t)):
                return _fail("evacuation does not reverse descents", t)
    return True, f"{count} tableaux"


def _maj_multisets(n: int, rows: int, cols: int) -> bool:
    shape = SkewShape(staircase(n), rectangle(rows, cols))
    size = shape.size
    left = Counter(frozenset(size - i for i in descent_set(t)) for t in enumerate_standard(shape))
    eta = SkewShape(eta_shape(n, rows, cols), (), True)
    right = Counter(descent_set(u) for u in enumerate_marked_standard(eta))
    return left == right


@check("properties")
def check_maj_multiset(max_n):
    done = []
    for n, rows, cols in _rect_params(max_n, 6):
        if not _maj_multisets(n, rows, cols):
            return _fail("descent multisets differ", (n, rows, cols))
        done.append((n, rows, cols))
    return True, f"{len(done)} rectangles"


@check("properties")
def check_reverse_complement_expansion(max_n):
    count = 0
    for lam in iter_partitions_inside(staircase(min(max_n, 5))):
        if not lam:
            continue
        s = SkewShape(lam)
        count += 1
        if tableau_fundamental_expansion(s, 3) != tableau_fundamental_expansion(s, 3, reverse=True):
            return _fail("Des and reversed Des expansions differ", lam)
    return True, f"{count} shapes"


# -- words --------------------------------------------------------------------------

def _connected(words, neighbours) -> bool:
    words = set(words)
    start = next(iter(words))
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for nb in neighbours(cur):
            if nb in words and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == words


@check("words")
def check_matsumoto_tits(max_n):
    m = min(max_n, 5)
    for w in permutations(range(1, m + 1)):
        words = reduced_words(w)
        if not _connected(words, lambda a: commutation_neighbors(a) | braid_neighbors(a)):
            return _fail("reduced words are not connected", w)
    return True, f"S_{m}"


@check("words")
def check_grassmannian_knuth(max_n):
    m = min(max_n + 1, 6)
    count = 0
    for w in permutations(range(1, m + 1)):
        if sum(1 for i in range(m - 1) if w[i] > w[i + 1]) != 1:
            continue
        count += 1
        if len(partition_classes(reduced_words(w), "knuth")) != 1:
            return _fail("reduced words split into several Knuth classes", w)
    return True, f"{count} Grassmannian permutations in S_{m}"


@check("words")
def check_staircase_classes(max_n):
    for n in range(2, min(max_n, 4) + 1):
        words = reduced_words(w_staircase(n))
        if len(partition_classes(words, "knuth")) != 1:
            return _fail("staircase words split into Knuth classes", n)
        if len(partition_classes(words, "shifted_knuth")) != 1:
            return _fail("staircase words split into shifted Knuth classes", n)
        if not all(first_two_same_parity(a) for a in words):
            return _fail("first two letters differ in parity", n)
    return True, f"n <= {min(max_n, 4)}"


@check("words")
def check_skew_shifted_closure(max_n):
    n = min(max_n, 4)
    count = 0
    for mu in iter_partitions_inside(staircase(n)):
        count += 1
        if not is_closed(reduced_words(w_skew_staircase(n, mu)), "shifted_knuth"):
            return _fail("reduced words are not a union of shifted Knuth classes", mu)
    return True, f"{count} shapes inside delta_{n}"


@check("words")
def check_hecke_k_knuth(max_n):
    w = w_staircase(3)
    for m in range(3, min(max_n, 5) + 1):
        exprs = set(hecke_expressions(w, m))
        cls = rewrite_class(min(exprs), "k_knuth", slack=2)
        if not exprs <= cls:
            return _fail("Hecke expressions split into several K-Knuth classes", m)
        same_len = {a for a in cls if len(a) == m}
        if any(hecke_product(a, len(w)) != w for a in same_len):
            return _fail("K-Knuth class leaves the Hecke fibre", m)
    return True, "delta_3"


@check("words")
def check_hecke_first_letters_odd(max_n):
    n = min(max_n, 4)
    count = 0
    for mu in iter_partitions_inside(staircase(n)):
        w = w_skew_staircase(n, mu)
        length = len(reduced_words(w)[0])
        for m in range(max(length, 2), length + 3):
            for a in hecke_expressions(w, m):
                count += 1
                if a[0] % 2 == 0 or a[1] % 2 == 0:
                    return _fail("a Hecke expression starts with an even letter", (mu, a))
    return True, f"{count} expressions"


@check("words")
def check_hecke_reduced(max_n):
    for w in permutations(range(1, min(max_n, 4) + 1)):
        length = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
        if set(hecke_expressions(w, length)) != set(reduced_words(w)):
            return _fail("length-l Hecke expressions are not the reduced words", w)
    return True, "S_4"


@check("words")
def check_phi_descents(max_n):
    count = 0
    for n in range(2, min(max_n, 5) + 1):
        for mu in iter_partitions_inside(staircase(n)):
            s = SkewShape(staircase(n), mu)
            for t in enumerate_standard(s):
                a = phi(t)
                count += 1
                if word_descents(a) != frozenset(s.size - i for i in descent_set(t)):
                    return _fail("phi does not reverse descents", t)
                if phi_inverse(a, frame=n) != t:
                    return _fail("phi_inverse does not invert phi", t)
    return True, f"{count} tableaux"


@check("words")
def check_res(max_n):
    count = 0
    shape = SkewShape(staircase(3))
    for size in range(shape.size, 7):
        for t in enumerate_set_valued(shape, size):
            a = res(t)
            count += 1
            if res_inverse(a, frame=3) != t:
                return _fail("res_inverse does not invert res", t)
            if word_descents(a) != frozenset(size - i for i in descent_set(t)):
                return _fail("res does not reverse descents", t)
            if hecke_product(a, 4) != w_staircase(3):
                return _fail("res is not a Hecke expression for the staircase", t)
    return True, f"{count} set-valued tableaux"


# -- insertion ------------------------------------------------------------------------

def _words(max_len: int, alphabet: int = 4):
    for m in range(1, max_len + 1):
        yield from product(range(1, alphabet + 1), repeat=m)


@check("insertion")
def check_round_trips(max_n):
    count = 0
    for a in _words(min(max_n + 1, 6)):
        count += 1
        p, q = rsk(a)
        if rsk_inverse(p, q) != a:
            return _fail("RSK round trip failed", a)
        p, q = ws_insert(a)
        if ws_inverse(p, q) != a:
            return _fail("Worley-Sagan round trip failed", a)
    return True, f"{count} words"


@check("insertion")
def check_ws_theorem(max_n):
    m = min(max_n, 5)
    for length in range(1, m + 1):
        words = list(product(range(1, 5), repeat=length))
        by_p: dict = {}
        for a in words:
            p, q = ws_insert(a)
            if word_descents(a) != descent_set(q):
                return _fail("Des(a) differs from Des(Q)", a)
            by_p.setdefault(p, set()).add(a)
        classes = {frozenset(c) for c in partition_classes(words, "shifted_knuth")}
        if classes != {frozenset(v) for v in by_p.values()}:
            return _fail("insertion classes differ from shifted Knuth classes", length)
    return True, f"lengths <= {m} over [4]"


def _negation_failures(words, top: int):
    checked = bad = 0
    example = None
    for a in words:
        checked += 1
        if ws_insert(tuple(top - x for x in a)).q != toggle_marks(ws_insert(a).q):
            bad += 1
            example = example or a
    return checked, bad, example


@check("insertion")
def check_negation(max_n):
    # all words; fails once a letter repeats, e.g. (1, 2, 1)
    checked, bad, example = _negation_failures(_words(min(max_n, 5)), 5)
    if bad:
        return False, f"{bad} of {checked} words fail; first: {example}"
    return True, f"{checked} words"


@check("insertion")
def check_negation_distinct_letters(max_n):
    m = min(max_n + 1, 6)
    words = (a for k in range(1, m + 1) for a in permutations(range(1, m + 1), k))
    checked, bad, example = _negation_failures(words, m + 1)
    if bad:
        return False, f"{bad} of {checked} words fail; first: {example}"
    return True, f"{checked} words with distinct letters"


@check("insertion")
def check_negation_reduced_words(max_n):
    checked = 0
    for n in range(2, min(max_n, 5) + 1):
        for mu in iter_partitions_inside(staircase(n)):
            c, bad, example = _negation_failures(reduced_words(w_skew_staircase(n, mu)), 2 * n - 1)
            checked += c
            if bad:
                return False, f"{bad} words of delta_{n}/{tuple(mu)} fail; first: {example}"
    return True, f"{checked} reduced words"


@check("insertion")
def check_mixed_duality(max_n):
    m = min(max_n, 5)
    for w in permutations(range(1, m + 1)):
        pm, qm = mixed_insert(w)
        ps, qs = ws_insert(inverse(w))
        if pm != qs or qm != ps:
            return _fail("mixed insertion is not dual to Worley-Sagan", w)
        if qm != shifted_rectify(rsk(w).q):
            return _fail("Q_MS is not the shifted rectification of Q", w)
    return True, f"S_{m}"


@check("insertion")
def check_staircase_insertion_tableau(max_n):
    for n in range(2, min(max_n, 4) + 1):
        m = minimal_increasing(shifted_staircase(n))
        for a in reduced_words(w_staircase(n)):
            if ws_insert(a).p != m:
                return _fail("P_SW is not the minimal increasing tableau", a)
    return True, f"n <= {min(max_n, 4)}"


@check("insertion")
def check_rectify_order_independent(max_n):
    count = 0
    for s in _skew_shapes(6):
        if not s.inner or s.inner.size > 6:
            continue
        orders = list(enumerate_standard(SkewShape(s.inner)))
        for t in list(enumerate_standard(s))[:10]:
            outs = {rectify(t, o) for o in orders}
            count += 1
            if len(outs) != 1:
                return _fail("rectification depends on the order", t)
            (r,) = outs
            if not is_standard(r) or r.shape.inner:
                return _fail("rectification is not a straight standard tableau", t)
    return True, f"{count} tableaux"


@check("insertion")
def check_slides_valid(max_n):
    count = 0
    for s in _skew_shapes(7):
        inner, _ = corners(s)
        for t in enumerate_standard(s):
            for c in inner:
                count += 1
                if not is_standard(jdt_slide(t, c)):
                    return _fail("slide broke standardness", (t, c))
    return True, f"{count} slides"


@check("insertion")
def check_staircase_rectification(max_n):
    for n in range(2, min(max_n, 5) + 1):
        sup = superstandard(SkewShape(staircase(n)))
        want = superstandard(SkewShape(shifted_staircase(n), (), True))
        if shifted_rectify(sup) != want:
            return _fail("shifted rectification of the superstandard staircase", n)
    return True, f"n <= {min(max_n, 5)}"


# -- bijections -----------------------------------------------------------------------

@check("bijections")
def check_phi_psi(max_n):
    total = 0
    for n, rows, cols in list(_rect_params(max_n, 6)) + [(n, 0, 0) for n in range(2, min(max_n, 5) + 1)]:
        source = SkewShape(staircase(n), rectangle(rows, cols)) if rows else SkewShape(staircase(n))
        target = target_shape(n, rows, cols) if rows else SkewShape(shifted_staircase(n), (), True)
        size = source.size
        images = set()
        for t in enumerate_standard(source):
            u = phi_map(t)
            total += 1
            if u.shape != target or not is_marked_standard(u):
                return _fail("phi left the target shape", t)
            if descent_set(u) != frozenset(size - i for i in descent_set(t)):
                return _fail("phi does not reverse descents", t)
            if psi(u, rows, cols, n) != t:
                return _fail("psi does not invert phi", t)
            images.add(u)
        if len(images) != sum(1 for _ in enumerate_marked_standard(target)):
            return _fail("phi is not onto", (n, rows, cols))
    return True, f"{total} tableaux"


@check("bijections")
def check_stembridge(max_n):
    count = 0
    n = min(max_n, 5)
    for mu in iter_partitions_inside(staircase(n)):
        src = list(enumerate_standard(SkewShape(staircase(n), mu)))
        images = set()
        for t in src:
            u = stembridge_map(t)
            if descent_set(u) != descent_set(t):
                return _fail("conjugation map changed the descent set", t)
            images.add(u)
        target = SkewShape(staircase(n), conjugate(mu))
        if len(images) != len(src) or len(src) != sum(1 for _ in enumerate_standard(target)):
            return _fail("conjugation map is not a bijection", mu)
        count += len(src)
    return True, f"{count} tableaux"


@check("bijections")
def check_mixed_route(max_n):
    count = 0
    for n, rows, cols in list(_rect_params(min(max_n, 5))) + [(n, 0, 0) for n in range(2, min(max_n, 5) + 1)]:
        source = SkewShape(staircase(n), rectangle(rows, cols)) if rows else SkewShape(staircase(n))
        for t in list(enumerate_standard(source))[:200]:
            count += 1
            if mixed_route(t) != phi_map(t):
                return _fail("mixed-insertion route disagrees with phi", t)
    return True, f"{count} tableaux"


@check("bijections")
def check_shifted_skew_equality(max_n):
    for n, rows, cols in _rect_params(max_n, 6):
        skew = SkewShape(shifted_staircase(n), trapezoid(rows, cols), True)
        straight = SkewShape(eta_shape(n, rows, cols), (), True)
        if count_linear_extensions(skew) != count_linear_extensions(straight):
            return _fail("shifted skew and reflected counts differ", (n, rows, cols))
    return True, "all rectangles"


# -- counting -------------------------------------------------------------------------

@check("counting")
def check_product_formula(max_n):
    count = 0
    for a in range(0, 6):
        for b in range(0, 6):
            for c in range(0, 6):
                k = a + b + 2 * c
                if k < 2:
                    continue
                shape = SkewShape(staircase(k), [b] * a)
                if shape.size > 12:
                    continue
                count += 1
                vals = {product_formula(a, b, c), count_linear_extensions(shape), feit(staircase(k), [b] * a)}
                if len(vals) != 1:
                    return _fail("product formula, oracle and Feit disagree", (a, b, c))
    return True, f"{count} triples"


@check("counting")
def check_main_identity(max_n):
    gaps = Counter()
    for k in range(2, min(max_n + 1, 6) + 1):
        for a in range(0, k):
            for b in range(0, k):
                if (a == 0) != (b == 0) or (a and a + b >= k):
                    continue
                f = count_linear_extensions(SkewShape(staircase(k), [b] * a))
                g = count_linear_extensions(SkewShape(eta_shape(k, a, b), (), True))
                if f != 2 ** mark_exponent(k, a, b) * g:
                    return _fail("f is not 2^N times the shifted count", (k, a, b))
                if a:
                    gaps[mark_exponent(k, a, b) - printed_mark_exponent(k, a, b)] += 1
    summary = ", ".join(f"{gap:+d} on {n}" for gap, n in sorted(gaps.items(), reverse=True))
    return True, f"off-diagonal N holds; off-diagonal minus |eta|-k+a: {summary} rectangles"


@check("counting")
def check_hook_formulas(max_n):
    for eta in iter_strict_partitions_inside(shifted_staircase(min(max_n + 2, 7))):
        s = SkewShape(eta, (), True)
        if shifted_hlf(eta) != count_linear_extensions(s, bound=21):
            return _fail("shifted hook formula disagrees with the oracle", eta)
    for lam in iter_partitions_inside((5, 4, 3, 2, 1)):
        if hlf(lam) != count_linear_extensions(SkewShape(lam)):
            return _fail("hook formula disagrees with the oracle", lam)
        for mu in iter_partitions_inside(lam):
            if SkewShape(lam, mu).size <= 12 and feit(lam, mu) != count_linear_extensions(SkewShape(lam, mu)):
                return _fail("Feit disagrees with the oracle", (lam, mu))
    return True, "strict shapes in rho_7, partitions in delta_6"


def _lr_orbit(k, mu, nu):
    lam = staircase(k)
    mc, nc = conjugate(mu), conjugate(nu)
    return [lr_coefficient(lam, mu, nu), lr_coefficient(lam, mc, nu), lr_coefficient(lam, mu, nc),
            lr_coefficient(lam, mc, nc), lr_coefficient(lam, nc, mc), lr_coefficient(lam, nu, mc),
            lr_coefficient(lam, nc, mu), lr_coefficient(lam, nu, mu)]


@check("counting")
def check_lr_symmetry(max_n):
    count = 0
    for k in range(2, min(max_n, 4) + 1):
        total = staircase(k).size
        for mu in iter_partitions_inside(staircase(k)):
            for nu in iter_partitions_inside(staircase(k)):
                if mu.size + nu.size != total:
                    continue
                count += 1
                if len(set(_lr_orbit(k, mu, nu))) != 1:
                    return _fail("LR symmetry orbit is not constant", (k, mu, nu))
    # sum_nu c^{lam}_{mu nu} f^nu = f^{lam/mu}
    for lam in iter_partitions_inside((4, 3, 2, 1)):
        for mu in iter_partitions_inside(lam):
            m = lam.size - mu.size
            lhs = sum(lr_coefficient(lam, mu, nu) * hlf(nu) for nu in iter_partitions(m))
            if lhs != count_linear_extensions(SkewShape(lam, mu)):
                return _fail("LR expansion does not count skew tableaux", (lam, mu))
    return True, f"{count} pairs"


@check("counting")
def check_schur_identities(max_n):
    n_cap = min(max_n, 5)
    for n in range(2, n_cap + 1):
        for mu in iter_partitions_inside(staircase(n)):
            s = SkewShape(staircase(n), mu)
            t = SkewShape(staircase(n), conjugate(mu))
            if gf_truncate("schur_skew", s, 3, s.size) != gf_truncate("schur_skew", t, 3, t.size):
                return _fail("s_{delta/mu} differs from s_{delta/mu'}", (n, mu))
    for n in range(2, min(max_n, 4) + 1):
        size = staircase(n).size
        if gf_truncate("schur", SkewShape(staircase(n)), 3, size) != \
                gf_truncate("schurP", SkewShape(shifted_staircase(n), (), True), 3, size):
            return _fail("s_delta differs from P_rho", n)
        for mu in iter_partitions_inside(staircase(n)):
            s = SkewShape(staircase(n), mu)
            expansion = schurP_sum(schurP_expand(n, mu), 3, s.size)
            if expansion != gf_truncate("schur_skew", s, 3, s.size):
                return _fail("Schur P expansion does not reproduce s_{delta/mu}", (n, mu))
    for n, rows, cols in _rect_params(min(max_n, 5)):
        s = SkewShape(staircase(n), rectangle(rows, cols))
        if gf_truncate("schur_skew", s, 3, s.size) != \
                gf_truncate("schurP", SkewShape(eta_shape(n, rows, cols), (), True), 3, s.size):
            return _fail("s_{delta/rect} differs from P_eta", (n, rows, cols))
        if schurP_expand(n, rectangle(rows, cols)) != Counter({eta_shape(n, rows, cols): 1}):
            return _fail("rectangle expansion is not a single P", (n, rows, cols))
    return True, f"n <= {n_cap}"


# -- K-theory -------------------------------------------------------------------------

def _shares_cell(t: Tableau) -> bool:
    """Some cell holds two consecutive values."""
    for _, v in t.items():
        vals = sorted(value_of(x) for x in v)
        if any(b == a + 1 for a, b in zip(vals, vals[1:])):
            return True
    return False


def _kdes_scan(max_size: int, restrict: bool):
    checked = bad = 0
    example = None
    for eta in iter_strict_partitions_inside(shifted_staircase(4)):
        s = SkewShape(eta, (), True)
        if s.size == 0:
            continue
        for size in range(s.size, max_size + 1):
            for t in enumerate_set_valued(s, size, "marked_shifted", bound=max_size):
                if restrict and _shares_cell(t):
                    continue
                checked += 1
                if descent_set(toggle_marks(t)) != frozenset(range(1, size)) - descent_set(t):
                    bad += 1
                    example = example or t
    return checked, bad, example


@check("ktheory")
def check_set_valued_toggle_complement(max_n):
    checked, bad, example = _kdes_scan(min(max_n + 2, 7), restrict=False)
    if bad:
        return False, f"{bad} of {checked} tableaux fail; first: {example}"
    return True, f"{checked} tableaux"


@check("ktheory")
def check_set_valued_toggle_complement_separate_cells(max_n):
    checked, bad, example = _kdes_scan(min(max_n + 2, 7), restrict=True)
    if bad:
        return False, f"{bad} of {checked} tableaux fail; first: {example}"
    return True, f"{checked} tableaux without consecutive values in one cell"


@check("ktheory")
def check_res_round_trip(max_n):
    return check_res(max_n)


@check("ktheory")
def check_grothendieck_conjugation(max_n):
    count = 0
    for n in range(2, min(max_n, 4) + 1):
        for mu in iter_partitions_inside(staircase(n)):
            a = gf_truncate("grothendieck_G", SkewShape(staircase(n), mu), 3, 8)
            b = gf_truncate("grothendieck_G", SkewShape(staircase(n), conjugate(mu)), 3, 8)
            count += 1
            if a != b:
                return _fail("G_{delta/mu} differs from G_{delta/mu'}", (n, mu))
    return True, f"{count} shapes, 3 variables, degree <= 8"


@check("ktheory")
def check_grothendieck_dewitt(max_n):
    count = 0
    for n, rows, cols in _rect_params(min(max_n, 4)):
        a = gf_truncate("grothendieck_G", SkewShape(staircase(n), rectangle(rows, cols)), 3, 8)
        b = gf_truncate("grothendieck_GP", SkewShape(eta_shape(n, rows, cols), (), True), 3, 8)
        count += 1
        if a != b:
            return _fail("G of the skew staircase differs from GP of eta", (n, rows, cols))
    return True, f"{count} rectangles, 3 variables, degree <= 8"


@check("ktheory")
def check_set_valued_counts(max_n):
    rows_out = []
    for n, rows, cols in _rect_params(min(max_n, 4)):
        src = SkewShape(staircase(n), rectangle(rows, cols))
        dst = SkewShape(eta_shape(n, rows, cols), (), True)
        for m in range(src.size, src.size + 4):
            x = sum(1 for _ in enumerate_set_valued(src, m, bound=m))
            y = sum(1 for _ in enumerate_set_valued(dst, m, "marked_shifted", bound=m))
            if x != y:
                return _fail("set-valued counts differ", (n, rows, cols, m, x, y))
            rows_out.append((n, rows, cols, m, x))
    return True, f"{len(rows_out)} sizes"
