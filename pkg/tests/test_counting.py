from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from staircase_tableaux.counting import (
    MonomialGF,
    count_linear_extensions,
    double_factorial,
    eta_shape,
    feit,
    gf_truncate,
    hlf,
    lr_coefficient,
    mark_exponent,
    printed_mark_exponent,
    product_formula,
    schurP_expand,
    shifted_hlf,
    skew_staircase_count,
    superfactorials,
)
from staircase_tableaux.shapes import (
    SkewShape,
    cell_census,
    conjugate,
    iter_partitions_inside,
    rectangle,
    shifted_staircase,
    staircase,
)
from staircase_tableaux.tableaux import Tableau, is_standard

from conftest import partitions, rectangles, strict_partitions


def brute_count(shape: SkewShape) -> int:
    """Fillings by permutations that pass the standardness predicate; tiny shapes only."""
    cells = shape.cells()
    return sum(is_standard(Tableau(shape, dict(zip(cells, p))))
               for p in permutations(range(1, len(cells) + 1)))


def test_superfactorials():
    assert superfactorials(1) == (1, 1)
    assert superfactorials(4) == (12, 45)
    assert double_factorial(5) == 15 and double_factorial(0) == 1


def test_product_formula_examples():
    assert product_formula(0, 0, 1) == 1
    assert product_formula(1, 1, 1) == 16
    assert product_formula(1, 2, 1) == count_linear_extensions(SkewShape(staircase(5), (2,)))
    with pytest.raises(ValueError):
        product_formula(-1, 0, 1)


@pytest.mark.parametrize("shape,count", [
    (SkewShape(staircase(4), (2,)), 8),
    (SkewShape((1,)), 1),
    (SkewShape((3, 1), (), True), 2),
])
def test_linear_extension_examples(shape, count):
    assert count_linear_extensions(shape) == count
    assert brute_count(shape) == count


def test_oracle_bound():
    with pytest.raises(ValueError):
        count_linear_extensions(SkewShape(staircase(8)), bound=20)


def test_hook_formulas():
    assert hlf((3, 2, 1)) == 16
    assert hlf((1,)) == 1
    assert shifted_hlf(shifted_staircase(4)) == 2
    assert feit(staircase(4), (2,)) == 8
    assert feit(staircase(4), (1,)) == 16
    assert feit((1,), ()) == 1


@given(partitions(max_len=4, max_part=4))
def test_hlf_matches_oracle(lam):
    assert hlf(lam) == count_linear_extensions(SkewShape(lam))


@given(strict_partitions(max_part=5))
def test_shifted_hlf_matches_oracle(eta):
    assert shifted_hlf(eta) == count_linear_extensions(SkewShape(eta, (), True))


@pytest.mark.parametrize("lam,mu", [((3, 2, 1), (1,)), ((3, 3), (1,)), ((4, 2, 1), (2, 1))])
def test_feit_matches_brute_force(lam, mu):
    assert feit(lam, mu) == brute_count(SkewShape(lam, mu))


@given(rectangles(max_k=6))
def test_counting_methods_agree(params):
    k, a, b = params
    values = {skew_staircase_count(k, a, b, m) for m in ("feit", "oracle", "shifted")}
    if (k - a - b) % 2 == 0:
        values.add(skew_staircase_count(k, a, b, "formula"))
    assert len(values) == 1


def test_counting_method_errors():
    with pytest.raises(ValueError):
        skew_staircase_count(5, 3, 2)
    with pytest.raises(ValueError):
        skew_staircase_count(5, 1, 1, "formula")
    with pytest.raises(ValueError):
        skew_staircase_count(5, 1, 1, "guess")


def test_mark_exponent_is_off_diagonal_count():
    # the figure: 8 tableaux = 2^N * 2 with N = 2
    assert mark_exponent(4, 1, 2) == 2
    assert printed_mark_exponent(4, 1, 2) == 1
    for k in range(3, 8):
        for a in range(1, k):
            for b in range(1, k - a):
                eta = eta_shape(k, a, b)
                assert mark_exponent(k, a, b) == cell_census(eta)[1]
                assert mark_exponent(k, a, b) == eta.size - k + 1 + min(a, b)


def test_eta_sizes():
    for k in range(3, 8):
        for a in range(1, k):
            for b in range(1, k - a):
                assert eta_shape(k, a, b).size == staircase(k).size - a * b


def test_lr_examples():
    for k in range(2, 5):
        assert lr_coefficient(staircase(k), (), staircase(k)) == 1
    assert lr_coefficient(staircase(3), (2,), (1,)) == lr_coefficient(staircase(3), (1, 1), (1,))
    mu = (2, 1)
    for nu in [(3,), (2, 1), (1, 1, 1)]:
        lam, mc, nc = staircase(4), conjugate(mu), conjugate(nu)
        orbit = {lr_coefficient(lam, x, y) for x, y in
                 [(mu, nu), (mc, nu), (mu, nc), (mc, nc), (nc, mc), (nu, mc), (nc, mu), (nu, mu)]}
        assert len(orbit) == 1


def test_lr_counts_skew_tableaux():
    # sum over nu of c^lam_{mu nu} f^nu = f^{lam/mu}
    lam, mu = (4, 3, 1), (2, 1)
    total = sum(lr_coefficient(lam, mu, nu) * hlf(nu) for nu in [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1),
                                                                  (2, 1, 1, 1), (1, 1, 1, 1, 1)])
    assert total == count_linear_extensions(SkewShape(lam, mu))


def test_schur_small():
    gf = gf_truncate("schur", SkewShape((1,)), 2, 1)
    assert gf.coeffs == {(1, 0): 1, (0, 1): 1}
    s21 = gf_truncate("schur", SkewShape((2, 1)), 2, 3)
    assert s21.coeffs == {(2, 1): 1, (1, 2): 1}
    assert gf_truncate("schur", SkewShape(staircase(4)), 3, 6) == \
        gf_truncate("schurP", SkewShape(shifted_staircase(4), (), True), 3, 6)
    assert gf_truncate("schur_skew", SkewShape(staircase(4), (2,)), 3, 4) == \
        gf_truncate("schur_skew", SkewShape(staircase(4), (1, 1)), 3, 4)


def test_schur_is_symmetric():
    for lam in [(2, 1), (3, 1), (2, 2)]:
        assert gf_truncate("schur", SkewShape(lam), 3, sum(lam)).is_symmetric()


def test_schurP_expansions():
    for n in range(3, 6):
        assert schurP_expand(n, ()) == Counter({shifted_staircase(n): 1})
        for a in range(1, n):
            for b in range(1, n - a):
                assert schurP_expand(n, rectangle(a, b)) == Counter({eta_shape(n, a, b): 1})
    assert sum(schurP_expand(4, (1,)).values()) >= 1


def test_gf_bounds_and_kinds():
    with pytest.raises(ValueError):
        gf_truncate("schur", SkewShape((2, 1)), 9, 3)
    with pytest.raises(ValueError):
        gf_truncate("plethysm", SkewShape((2, 1)), 2, 3)


def test_monomial_gf_round_trip():
    gf = gf_truncate("schur", SkewShape((2, 1)), 3, 3)
    assert MonomialGF.from_json(gf.dumps()) == gf
    doubled = gf + gf
    assert doubled == gf.scale(2)
    assert doubled[(1, 1, 1)] == 4
    with pytest.raises(ValueError):
        gf + MonomialGF(2, 3)


def test_grothendieck_degree_bottom_is_schur():
    # the lowest-degree part of G is the Schur function
    for mu in iter_partitions_inside(staircase(3)):
        shape = SkewShape(staircase(3), mu)
        g = gf_truncate("grothendieck_G", shape, 3, shape.size)
        assert g == gf_truncate("schur_skew", shape, 3, shape.size)


@given(st.integers(2, 6))
def test_product_formula_on_full_staircase(k):
    if k % 2 == 0:
        assert product_formula(0, 0, k // 2) == hlf(staircase(k))
