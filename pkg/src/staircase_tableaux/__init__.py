"""Standard tableaux of staircase-minus-rectangle shapes and their marked shifted twins.

The main entry points are re-exported here; see the submodules for the rest.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .bijections import mixed_route, phi_map, psi, stembridge_map
from .counting import eta_shape, mark_exponent, product_formula, skew_staircase_count
from .insertion import mixed_insert, rsk, ws_insert, ws_inverse
from .sampling import make_rng, sample_exact, sample_shifted_syt, sample_skew_staircase
from .shapes import Partition, SkewShape, StrictPartition, shifted_staircase, staircase
from .tableaux import Letter, Tableau, descent_set, toggle_marks
from .words import phi, phi_inverse, reduced_words

__all__ = [
    "BACKEND", "Letter", "Partition", "SkewShape", "StrictPartition", "Tableau",
    "descent_set", "eta_shape", "make_rng", "mark_exponent", "mixed_insert", "mixed_route",
    "phi", "phi_inverse", "phi_map", "product_formula", "psi", "reduced_words", "rsk",
    "sample_exact", "sample_shifted_syt", "sample_skew_staircase", "shifted_staircase",
    "skew_staircase_count", "staircase", "stembridge_map", "toggle_marks", "ws_insert",
    "ws_inverse", "__version__",
]
