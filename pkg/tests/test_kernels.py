import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from staircase_tableaux import _kernels
from staircase_tableaux._kernels import _fallback
from staircase_tableaux.insertion import ws_insert
from staircase_tableaux.sampling import sample_skew_staircase
from staircase_tableaux.shapes import StrictPartition
from staircase_tableaux.words import phi, w_staircase

core = _kernels.core
needs_core = pytest.mark.skipif(core is None, reason="compiled kernels not built")

words = st.lists(st.integers(1, 7), max_size=14)


def steps_of(q):
    steps = [None] * len(q)
    for (r, c), v in q.items():
        steps[v.value - 1] = (r - 1, c - 1, v.marked)
    return steps


def test_backend_is_reported():
    assert _kernels.BACKEND in ("cython", "python")
    assert (_kernels.BACKEND == "cython") == (core is not None)


@needs_core
@pytest.mark.parametrize("parts", [(1,), (3, 1), (4, 3, 1), (9, 7, 4, 2, 1), tuple(range(30, 0, -1))])
def test_hook_walk_matches(parts):
    for seed in range(5):
        a = core.hook_walk(list(parts), np.random.default_rng(seed))
        b = _fallback.hook_walk(list(parts), np.random.default_rng(seed))
        assert a == b
        assert [len(r) for r in a] == list(parts)


@needs_core
def test_hook_walk_consumes_the_same_stream():
    r1, r2 = np.random.default_rng(1), np.random.default_rng(1)
    for _ in range(3):
        assert core.hook_walk([6, 4, 1], r1) == _fallback.hook_walk([6, 4, 1], r2)
    assert r1.random() == r2.random()


@needs_core
@given(words)
def test_ws_insert_word_matches(w):
    assert core.ws_insert_word(w) == _fallback.ws_insert_word(w)


@needs_core
@given(words)
def test_ws_uninsert_matches(w):
    rows, steps = _fallback.ws_insert_word(w)
    a = core.ws_uninsert([list(r) for r in rows], steps)
    b = _fallback.ws_uninsert([list(r) for r in rows], steps)
    assert list(a) == list(b) == w


@needs_core
@pytest.mark.parametrize("k", [5, 20, 60])
def test_large_words_match(k):
    word = list(phi(sample_skew_staircase(k, k // 5, k // 3, np.random.default_rng(k))))
    assert core.ws_insert_word(word) == _fallback.ws_insert_word(word)
    assert core.word_inversions(word, 2 * k - 2) == _fallback.word_inversions(word, 2 * k - 2)


@needs_core
def test_word_inversions_staircase():
    w = w_staircase(5)
    word = list(phi(sample_skew_staircase(5, 0, 0, np.random.default_rng(0))))
    out = core.word_inversions(word, len(w))
    assert len(out) == len(set(out)) == len(word)


@pytest.mark.parametrize("impl", [_fallback] + ([core] if core is not None else []), ids=str)
def test_uninsert_rejects_bad_pairs(impl):
    # the largest recording entry must end its row
    with pytest.raises(ValueError):
        impl.ws_uninsert([[1, 2]], [(0, 1, False), (0, 0, False)])


def test_fallback_insertion_tableau_is_shifted():
    rows, _ = _fallback.ws_insert_word([3, 1, 2, 3, 1, 2])
    StrictPartition([len(r) for r in rows])
    assert ws_insert((3, 1, 2, 3, 1, 2)).p.rows() == rows


def test_pure_python_switch():
    code = ("from staircase_tableaux import _kernels, ws_insert; "
            "print(_kernels.BACKEND, ws_insert((1, 3, 2, 5, 4, 3)).p.rows())")
    env = dict(os.environ, STAIRCASE_TABLEAUX_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split()[0] == "python"
    assert "[[1, 2, 3], [3, 4], [5]]" in out.stdout
