from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from staircase_tableaux.shapes import SkewShape, iter_partitions_inside, staircase
from staircase_tableaux.tableaux import descent_set, enumerate_set_valued, enumerate_standard, word_descents
from staircase_tableaux.words import (
    NotFullyCommutativeError,
    NotReducedError,
    apply_word,
    braid_neighbors,
    commutation_neighbors,
    fc_shape,
    first_two_same_parity,
    hecke_expressions,
    hecke_product,
    inversion_poset,
    inversions,
    is_fully_commutative,
    is_reduced,
    length,
    partition_classes,
    phi,
    phi_inverse,
    reduced_words,
    res,
    res_inverse,
    rewrite_class,
    rewrite_neighbors,
    w_skew_staircase,
    w_staircase,
)
from staircase_tableaux import _kernels


def test_staircase_one_lines():
    assert w_staircase(6) == (2, 4, 6, 8, 10, 1, 3, 5, 7, 9)
    assert w_skew_staircase(6, (3, 1)) == (2, 4, 1, 6, 8, 3, 10, 5, 7, 9)
    assert length(w_staircase(6)) == 15


def test_fully_commutative_shapes():
    assert str(fc_shape((2, 4, 1, 6, 3, 5))) == "(3, 2, 1)/(1,)"
    assert str(fc_shape((2, 4, 6, 1, 3, 5))) == "(3, 2, 1)"
    assert inversions((2, 4, 1, 6, 3, 5)) == {(1, 2), (1, 4), (3, 4), (3, 6), (5, 6)}
    with pytest.raises(NotFullyCommutativeError):
        inversion_poset((3, 2, 1))


def test_phi_example():
    a = (1, 3, 2, 5, 4, 3)
    assert apply_word(a, 6) == (2, 4, 6, 1, 3, 5)
    # inversion created by each letter
    assert _kernels.word_inversions(a, 6) == [(1, 2), (3, 4), (1, 4), (5, 6), (3, 6), (1, 6)]
    t = phi_inverse(a)
    assert word_descents(a) == {2, 4, 5}
    assert descent_set(t) == {1, 2, 4}
    assert phi(t) == a


def test_not_reduced():
    assert not is_reduced((1, 1))
    with pytest.raises(NotReducedError):
        phi_inverse((1, 2, 1, 2))


def test_reduced_word_counts():
    # |R(w0 in S_4)| = 16 and the staircase permutation of 4 has f^{delta_4} = 16 words
    assert len(reduced_words((4, 3, 2, 1))) == 16
    assert len(reduced_words(w_staircase(4))) == 16


def test_rewrite_moves():
    assert rewrite_neighbors((1, 3, 2), "knuth") == {(3, 1, 2)}
    assert rewrite_neighbors((2, 1, 3), "shifted_knuth") == {(2, 3, 1), (1, 2, 3)}


@pytest.mark.parametrize("w", list(permutations(range(1, 5))), ids=str)
def test_matsumoto_tits(w):
    words = set(reduced_words(w))
    start = next(iter(words))
    # commutation and braid moves connect the whole set
    seen, stack = {start}, [start]
    while stack:
        cur = stack.pop()
        for nb in commutation_neighbors(cur) | braid_neighbors(cur):
            if nb in words and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    assert seen == words
    if is_fully_commutative(w):
        assert all(not braid_neighbors(a) for a in words)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_staircase_words_one_shifted_class(n):
    words = reduced_words(w_staircase(n))
    assert len(partition_classes(words, "knuth")) == 1
    assert all(first_two_same_parity(a) for a in words)


@pytest.mark.parametrize("mu", list(iter_partitions_inside(staircase(5))), ids=str)
def test_phi_bijection_and_descents(mu):
    shape = SkewShape(staircase(5), mu)
    words = set()
    for t in enumerate_standard(shape):
        a = phi(t)
        assert word_descents(a) == frozenset(shape.size - i for i in descent_set(t))
        assert phi_inverse(a, frame=5) == t
        words.add(a)
    assert words == set(reduced_words(w_skew_staircase(5, mu)))


def test_hecke_basics():
    assert hecke_product((1, 1), 3) == (2, 1, 3)
    assert set(hecke_expressions((2, 1, 3), 2)) == {(1, 1)}
    assert set(hecke_expressions(w_staircase(3), 3)) == set(reduced_words(w_staircase(3)))


def test_hecke_staircase_one_k_knuth_class():
    w = w_staircase(3)
    for m in range(3, 6):
        exprs = set(hecke_expressions(w, m))
        assert exprs <= rewrite_class(min(exprs), "k_knuth", slack=2)


def test_res_round_trip():
    shape = SkewShape(staircase(3))
    total = 0
    for size in range(3, 7):
        for t in enumerate_set_valued(shape, size):
            a = res(t)
            assert hecke_product(a, 4) == w_staircase(3)
            assert word_descents(a) == frozenset(size - i for i in descent_set(t))
            assert res_inverse(a, frame=3) == t
            total += 1
    assert total == sum(1 for m in range(3, 7) for _ in hecke_expressions(w_staircase(3), m))


@given(st.lists(st.integers(1, 5), max_size=7))
def test_hecke_product_is_idempotent_on_repeats(word):
    doubled = [x for a in word for x in (a, a)]
    assert hecke_product(doubled, 6) == hecke_product(word, 6)
