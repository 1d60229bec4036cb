"""Hot loops: compiled ``_core`` when built, ``_fallback`` otherwise.

Set ``STAIRCASE_TABLEAUX_PURE=1`` to force the pure-Python versions.
"""

import os

from . import _fallback

core = None
if not os.environ.get("STAIRCASE_TABLEAUX_PURE"):
    try:
        from . import _core as core
    except ImportError:
        core = None

_impl = core if core is not None else _fallback
BACKEND = "cython" if core is not None else "python"

hook_walk = _impl.hook_walk
ws_insert_word = _impl.ws_insert_word
ws_uninsert = _impl.ws_uninsert
word_inversions = _impl.word_inversions

__all__ = ["BACKEND", "core", "hook_walk", "ws_insert_word", "ws_uninsert", "word_inversions"]
