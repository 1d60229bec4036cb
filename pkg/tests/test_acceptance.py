"""Acceptance criteria 1-10, one test each; every test reports a PASS/FAIL line.

Each test evaluates all of its parts before asserting, so a failing part is
named in the report instead of hiding the rest.
"""

import json
import time
from collections import Counter

from scipy.stats import chisquare

from staircase_tableaux import cli, verify
from staircase_tableaux.bijections import complete, phi_map, psi, stembridge_map, target_shape
from staircase_tableaux.counting import (
    count_linear_extensions,
    eta_shape,
    feit,
    gf_truncate,
    lr_coefficient,
    mark_exponent,
    printed_mark_exponent,
    product_formula,
    shifted_hlf,
)
from staircase_tableaux.insertion import (
    jdt_slide,
    minimal_increasing,
    mixed_insert,
    rectify,
    superstandard,
    ws_insert,
    ws_inverse,
)
from staircase_tableaux.sampling import (
    benchmark_scaling,
    fitted_exponent,
    make_rng,
    sample_marked_shifted,
    sample_shifted_rows,
    sample_skew_staircase,
)
from staircase_tableaux.shapes import (
    SkewShape,
    cell_census,
    conjugate,
    contains,
    iter_partitions,
    iter_partitions_inside,
    rectangle,
    shifted_staircase,
    staircase,
)
from staircase_tableaux.tableaux import (
    Letter,
    Tableau,
    crystal_reading_word,
    descent_set,
    enumerate_marked_standard,
    enumerate_standard,
    is_marked_standard,
    word_descents,
)
from staircase_tableaux.words import apply_word, phi, phi_inverse, w_skew_staircase, w_staircase

N = None


def text_rows(t):
    return [[str(v) for v in row] for row in t.rows()]


def summarize(parts: dict) -> tuple[bool, str]:
    bad = [name for name, ok in parts.items() if not ok]
    return not bad, ("all parts hold" if not bad else "failed: " + ", ".join(bad))


# -- 1 ------------------------------------------------------------------------------

def test_criterion_1_golden_examples(report):
    start = time.perf_counter()
    parts = {}

    a, b = (1, 3, 2, 5, 4, 3), (3, 1, 5, 2, 4, 3)
    pa, qa = ws_insert(a)
    pb, qb = ws_insert(b)
    parts["ws example"] = (pa == pb and pa.rows() == [[1, 2, 3], [3, 4], [5]]
                           and text_rows(qa) == [["1", "2", "4"], ["3", "5"], ["6"]]
                           and text_rows(qb) == [["1", "2'", "3"], ["4", "5"], ["6"]])

    full = (1, 7, 5, 9, 8, 3, 6, 7, 2, 4, 3, 5, 4, 6, 5)
    head = full[:11]
    t = phi_inverse(head, frame=6)
    u = phi_map(t)
    full_q = ws_insert(full).q
    parts["inverse example: completed recording tableau"] = (
        complete(u, 6, 2, 2) == full_q
        and text_rows(full_q) == [["1", "2", "4", "6'", "9'"], ["3", "5", "8", "11'"],
                                  ["7", "10'", "13'"], ["12", "14"], ["15"]])
    parts["inverse example: full word"] = ws_inverse(minimal_increasing(shifted_staircase(6)), full_q) == full
    parts["inverse example: full staircase tableau"] = phi_inverse(full).rows() == [
        [1, 3, 5, 7, 15], [2, 4, 6, 10], [8, 9, 13], [11, 14], [12]]
    parts["inverse example: skew tableau"] = (
        t.rows() == [[1, 3, 11], [2, 6], [4, 5, 9], [7, 10], [8]]
        and t.shape == SkewShape(staircase(6), (2, 2))
        and psi(u, 2, 2, 6) == t)

    c = (1, 3, 2, 5, 4, 3)
    tc = phi_inverse(c)
    parts["phi example"] = (apply_word(c, 6) == (2, 4, 6, 1, 3, 5)
                            and word_descents(c) == {2, 4, 5}
                            and descent_set(tc) == {1, 2, 4} and phi(tc) == c)

    tx = Tableau.from_rows([[N, N, 1, 3, 11], [N, N, 2, 6], [4, 5, 9], [7, 10], [8]])
    w = crystal_reading_word(tx)
    p, q = mixed_insert(w)
    parts["crystal mixed insertion"] = (
        w == (1, 9, 11, 6, 10, 3, 7, 8, 2, 5, 4)
        and text_rows(p) == [["1", "2", "4", "6'", "9'"], ["3", "5", "8", "11'"], ["7", "10'"]]
        and q.rows() == [[1, 2, 3, 7, 8], [4, 5, 9, 10], [6, 11]])

    tj = Tableau.from_rows([[N, N, 2, 5, 9], [N, 2, 4, 7, 10], [1, 6, 8]])
    trace = []
    slid = jdt_slide(tj, (1, 2), trace)
    parts["jdt slide"] = ([h for h, _ in trace] == [(1, 2), (2, 2), (2, 3), (2, 4), (2, 5)]
                          and slid.rows() == [[2, 2, 5, 9], [4, 7, 10], [1, 6, 8]]
                          and slid.shape == SkewShape((5, 4, 3), (1, 1)))
    parts["jdt rectification"] = rectify(tj).rows() == [[1, 2, 2, 5, 9], [4, 7, 10], [6, 8]]

    parts["staircase one-lines"] = (w_staircase(6) == (2, 4, 6, 8, 10, 1, 3, 5, 7, 9)
                                    and w_skew_staircase(6, (3, 1)) == (2, 4, 1, 6, 8, 3, 10, 5, 7, 9))

    elapsed = time.perf_counter() - start
    parts["runtime < 1 s"] = elapsed < 1
    ok, detail = summarize(parts)
    report(1, ok, f"{detail} ({elapsed:.2f}s)")
    assert ok, detail


# -- 2 ------------------------------------------------------------------------------

FIGURE_SKEW = [(1, 2, 3, 4), (1, 2, 4, 3), (2, 1, 3, 4), (2, 1, 4, 3),
               (3, 1, 2, 4), (3, 1, 4, 2), (4, 1, 2, 3), (4, 1, 3, 2)]
FIGURE_SHIFTED = ["1 2' 4' 3", "1 2 4' 3", "1 2' 3' 4", "1 2 3' 4",
                  "1 2' 4 3", "1 2' 3 4", "1 2 4 3", "1 2 3 4"]


def test_criterion_2_figure(report):
    start = time.perf_counter()
    left = [Tableau.from_rows([[N, N, x], [y, z], [w]]) for x, y, z, w in FIGURE_SKEW]
    cells = [(1, 1), (1, 2), (1, 3), (2, 2)]
    right = [Tableau(SkewShape((3, 1), (), True),
                     dict(zip(cells, (Letter(int(s.rstrip("'")), s.endswith("'")) for s in text.split()))))
             for text in FIGURE_SHIFTED]
    source = list(enumerate_standard(SkewShape(staircase(4), (2,))))
    target = list(enumerate_marked_standard(SkewShape((3, 1), (), True)))
    images = [phi_map(t) for t in left]
    parts = {
        "8 skew tableaux enumerated": len(source) == 8 and set(source) == set(left),
        "8 marked tableaux enumerated": len(target) == 8 and set(target) == set(right),
        "phi matches the figure": images == right,
        "phi is a bijection": set(images) == set(target),
        "descents reversed": all(descent_set(u) == frozenset(4 - i for i in descent_set(t))
                                 for t, u in zip(left, images)),
    }
    elapsed = time.perf_counter() - start
    parts["runtime < 1 s"] = elapsed < 1
    ok, detail = summarize(parts)
    report(2, ok, f"{detail} ({elapsed:.2f}s)")
    assert ok, detail


# -- 3 ------------------------------------------------------------------------------

def test_criterion_3_product_formula(report):
    start = time.perf_counter()
    triples, bad = [], []
    for a in range(0, 13):
        for b in range(0, 13):
            for c in range(0, 7):
                k = a + b + 2 * c
                if k < 2:
                    continue
                shape = SkewShape(staircase(k), [b] * a)
                if shape.size > 12:
                    continue
                triples.append((a, b, c))
                values = (product_formula(a, b, c), count_linear_extensions(shape), feit(staircase(k), [b] * a))
                if len(set(values)) != 1:
                    bad.append(((a, b, c), values))
    parts = {
        "formula = oracle = Feit": not bad,
        "(1,1,1) gives 16": product_formula(1, 1, 1) == 16 and (1, 1, 1) in triples,
    }
    elapsed = time.perf_counter() - start
    parts["runtime < 2 min"] = elapsed < 120
    ok, detail = summarize(parts)
    report(3, ok, f"{detail}; {len(triples)} triples ({elapsed:.1f}s)")
    assert ok, (detail, bad[:3])


# -- 4 ------------------------------------------------------------------------------

def test_criterion_4_main_identity(report):
    start = time.perf_counter()
    bad, gaps, checked = [], Counter(), 0
    for k in range(2, 7):
        for a in range(0, k):
            for b in range(0, k):
                if (a == 0) != (b == 0) or (a and a + b >= k):
                    continue
                eta = eta_shape(k, a, b)
                off = cell_census(eta)[1]
                f = count_linear_extensions(SkewShape(staircase(k), [b] * a))
                g = count_linear_extensions(SkewShape(eta, (), True))
                checked += 1
                if f != 2 ** off * g or mark_exponent(k, a, b) != off:
                    bad.append((k, a, b))
                if a:
                    gaps[off - printed_mark_exponent(k, a, b)] += 1
    elapsed = time.perf_counter() - start
    parts = {"f = 2^N g with N = off-diagonal cells": not bad, "runtime < 1 min": elapsed < 60}
    ok, detail = summarize(parts)
    gap_text = ", ".join(f"{gap:+d} on {n}" for gap, n in sorted(gaps.items(), reverse=True))
    report(4, ok, f"{detail}; {checked} cases; N minus (|eta|-k+a): {gap_text} ({elapsed:.1f}s)")
    assert ok, (detail, bad)


# -- 5 ------------------------------------------------------------------------------

def _phi_psi_rectangle(n, a, b):
    """Exhaustive on the source side; returns (ok, number of source tableaux)."""
    source = SkewShape(staircase(n), rectangle(a, b))
    target = target_shape(n, a, b)
    eta = target.outer
    images = set()
    count = 0
    for t in enumerate_standard(source):
        u = phi_map(t)
        if u.shape != target or not is_marked_standard(u) or psi(u, a, b, n) != t:
            return False, count
        images.add(tuple(2 * v.value + v.marked for _, v in u.items()))
        count += 1
    # injective with |source| = |target| makes phi onto, and then phi(psi(u)) = u
    target_size = 2 ** cell_census(eta)[1] * shifted_hlf(eta)
    if len(images) != count or count != target_size:
        return False, count
    if n <= 5:
        targets = enumerate_marked_standard(target)
    else:
        rng = make_rng(n * 100 + a * 10 + b)
        targets = (sample_marked_shifted(eta, rng) for _ in range(500))
    return all(phi_map(psi(u, a, b, n)) == u for u in targets), count


def test_criterion_5_conjugation_and_phi_bijection(report):
    start = time.perf_counter()
    parts = {}

    stembridge_ok = True
    for mu in iter_partitions_inside(staircase(5)):
        src = list(enumerate_standard(SkewShape(staircase(5), mu)))
        images = [stembridge_map(t) for t in src]
        target = set(enumerate_standard(SkewShape(staircase(5), conjugate(mu))))
        if set(images) != target or len(target) != len(src):
            stembridge_ok = False
        if any(descent_set(u) != descent_set(t) for t, u in zip(src, images)):
            stembridge_ok = False
    parts["conjugation map, all mu in delta_5"] = stembridge_ok

    schur_ok = True
    for n in range(2, 6):
        for mu in iter_partitions_inside(staircase(n)):
            s, t = SkewShape(staircase(n), mu), SkewShape(staircase(n), conjugate(mu))
            if gf_truncate("schur_skew", s, 3, s.size) != gf_truncate("schur_skew", t, 3, t.size):
                schur_ok = False
    parts["skew Schur mu vs mu'"] = schur_ok

    total, phi_ok = 0, True
    for n in range(3, 7):
        for a in range(1, n):
            for b in range(1, n - a):
                ok, count = _phi_psi_rectangle(n, a, b)
                total += count
                phi_ok &= ok
    parts["phi bijection with psi inverse, n <= 6"] = phi_ok
    elapsed = time.perf_counter() - start
    parts["runtime < 5 min"] = elapsed < 300
    ok, detail = summarize(parts)
    report(5, ok, f"{detail}; {total} rectangle tableaux ({elapsed:.1f}s)")
    assert ok, detail


# -- 6 ------------------------------------------------------------------------------

def _lr_by_rectification(lam, mu, nu) -> int:
    """Skew tableaux of ``lam/mu`` rectifying to one fixed tableau of shape ``nu``."""
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if not contains(lam, mu):
        return 0
    fixed = superstandard(SkewShape(nu))
    return sum(1 for t in enumerate_standard(SkewShape(lam, mu)) if rectify(t) == fixed)


def _orbit(k, mu, nu, lr):
    lam = staircase(k)
    mc, nc = conjugate(mu), conjugate(nu)
    return [lr(lam, mu, nu), lr(lam, mc, nu), lr(lam, mu, nc), lr(lam, mc, nc),
            lr(lam, nc, mc), lr(lam, nu, mc), lr(lam, nc, mu), lr(lam, nu, mu)]


def test_criterion_6_lr_symmetries(report):
    start = time.perf_counter()
    pairs, bad = 0, []
    for k in range(2, 5):
        total = staircase(k).size
        for m in range(total + 1):
            for mu in iter_partitions(m):
                for nu in iter_partitions(total - m):
                    pairs += 1
                    first = _orbit(k, mu, nu, lr_coefficient)
                    second = _orbit(k, mu, nu, _lr_by_rectification)
                    if first != second or len(set(first)) != 1:
                        bad.append((k, mu, nu, first, second))
    elapsed = time.perf_counter() - start
    parts = {"eight symmetries, two enumerations agree": not bad, "runtime < 2 min": elapsed < 120}
    ok, detail = summarize(parts)
    report(6, ok, f"{detail}; {pairs} pairs ({elapsed:.1f}s)")
    assert ok, (detail, bad[:3])


# -- 7 ------------------------------------------------------------------------------

INSERTION_PARTS = [
    ("insertion", "ws_theorem", 5, "shifted Knuth classes and Des(Q), words <= 5 over [4]"),
    ("insertion", "negation", 5, "negated words toggle Q, words <= 5 over [4]"),
    ("insertion", "mixed_duality", 5, "mixed/Worley-Sagan duality and rectification, S_5"),
    ("insertion", "staircase_insertion_tableau", 4, "insertion tableau of staircase words, n <= 4"),
    ("words", "staircase_classes", 4, "staircase words form one shifted Knuth class, n <= 4"),
    ("words", "skew_shifted_closure", 4, "skew staircase words closed under shifted Knuth, n <= 4"),
]


def test_criterion_7_insertion_theorems(report):
    start = time.perf_counter()
    results = [verify.run_check(suite, name, max_n) for suite, name, max_n, _ in INSERTION_PARTS]
    parts = {label: r.ok for (_, _, _, label), r in zip(INSERTION_PARTS, results)}
    elapsed = time.perf_counter() - start
    parts["runtime < 5 min"] = elapsed < 300
    ok, detail = summarize(parts)
    failures = "; ".join(f"{r.name}: {r.detail}" for r in results if not r.ok)
    report(7, ok, f"{detail}{' [' + failures + ']' if failures else ''} ({elapsed:.1f}s)")
    assert ok, failures or detail


# -- 8 ------------------------------------------------------------------------------

def _chi_square_p(outcomes: Counter, support: int) -> float:
    assert len(outcomes) == support
    return chisquare(list(outcomes.values())).pvalue


def test_criterion_8_sampler(report, tmp_path):
    parts = {}
    draws = 100_000

    rng = make_rng(2024)
    skew = Counter(tuple(t.rows()[0] + t.rows()[1] + t.rows()[2])
                   for t in (sample_skew_staircase(4, 1, 2, rng) for _ in range(draws)))
    p_skew = _chi_square_p(skew, 8)
    parts["chi-square on SYT(delta_4/(2))"] = p_skew > 1e-3

    rng = make_rng(2025)
    support = shifted_hlf((4, 3, 1))
    shifted = Counter(tuple(map(tuple, sample_shifted_rows((4, 3, 1), rng))) for _ in range(draws))
    p_shifted = _chi_square_p(shifted, support)
    parts["chi-square on shifted (4,3,1)"] = p_shifted > 1e-3

    csv_path, svg_path = tmp_path / "k300.csv", tmp_path / "k300.svg"
    start = time.perf_counter()
    code = cli.main(["sample", "--staircase", "300", "--rect", "60", "100", "--seed", "1", "--out", str(csv_path)])
    sample_seconds = time.perf_counter() - start
    parts["k=300 sample < 60 s"] = code == 0 and sample_seconds < 60
    code = cli.main(["plot", "--in", str(csv_path), "--out", str(svg_path)])
    parts["plot exported"] = code == 0 and svg_path.read_text().lstrip().startswith(("<?xml", "<svg"))

    table = benchmark_scaling(range(50, 401, 50), reps=3, seed=7)
    exponent = fitted_exponent(table)
    parts["fitted exponent <= 3.5"] = exponent <= 3.5

    ok, detail = summarize(parts)
    report(8, ok, f"{detail}; p = {p_skew:.3f}, {p_shifted:.3f} ({support} shifted outcomes); "
                  f"k=300 in {sample_seconds:.1f}s; exponent {exponent:.2f}")
    assert ok, detail


# -- 9 ------------------------------------------------------------------------------

KTHEORY_PARTS = [
    ("ktheory", "set_valued_toggle_complement", 4, "toggle complements set-valued descents, size <= 6"),
    ("words", "res", 4, "res round trip and Des reversal on delta_3, size <= 6"),
    ("ktheory", "grothendieck_conjugation", 4, "G for mu vs mu', 3 vars, degree <= 8, n <= 4"),
    ("ktheory", "grothendieck_dewitt", 4, "G of the skew staircase vs GP of eta, n <= 4"),
    ("ktheory", "set_valued_counts", 4, "set-valued cardinalities, m <= |shape|+3, n <= 4"),
]


def test_criterion_9_ktheory(report):
    start = time.perf_counter()
    results = [verify.run_check(suite, name, max_n) for suite, name, max_n, _ in KTHEORY_PARTS]
    parts = {label: r.ok for (_, _, _, label), r in zip(KTHEORY_PARTS, results)}
    elapsed = time.perf_counter() - start
    parts["runtime < 10 min"] = elapsed < 600
    ok, detail = summarize(parts)
    failures = "; ".join(f"{r.name}: {r.detail}" for r in results if not r.ok)
    report(9, ok, f"{detail}{' [' + failures + ']' if failures else ''} ({elapsed:.1f}s)")
    assert ok, failures or detail


# -- 10 -----------------------------------------------------------------------------

PROPERTY_CHECKS = ["enumerator_self_consistency", "toggle_complement", "fundamental_partition",
                   "evacuation", "maj_multiset"]


def test_criterion_10_property_suites(report, capsys):
    start = time.perf_counter()
    code = cli.main(["--json", "verify", "--suite", "all", "--max-n", "5"])
    payload = json.loads(capsys.readouterr().out)
    by_name = {r["name"]: r for r in payload["checks"]}
    parts = {name: by_name[name]["ok"] for name in PROPERTY_CHECKS}
    elapsed = time.perf_counter() - start
    ok, detail = summarize(parts)
    others = [f"{r['suite']}.{r['name']}" for r in payload["checks"] if not r["ok"]]
    report(10, ok, f"{detail}; verify exit code {code}, failing elsewhere: {', '.join(others) or 'none'} "
                   f"({elapsed:.1f}s)")
    assert ok, detail
