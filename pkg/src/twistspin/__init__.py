"""Exact computations for branched twist spins of classical knots.

The package computes knot-group presentations, Alexander matrices, and
elementary ideals over Z[t, 1/t] with exact big-integer arithmetic, and
applies a knot-determinant criterion that certifies non-equivalence of pairs
of branched twist spins.
"""

from .branched import (
    BtSpinParams,
    btspin_matrix,
    btspin_presentation,
    btspin_weights,
    e0_check,
    e1_brute_force,
    e1_closed_form,
    e1_closed_form_generators,
    meridian_word,
    solve_beta_alpha,
)
from .distinguish import Verdict, distinguish, parity_table_row
from .fox import abelianize, alexander_matrix, fox_derivative, uniform_weights
from .ideals import (
    Ideal,
    PolyMatrix,
    alexander_polynomial,
    all_minors_vanish,
    apply_equivalence,
    e2_generators,
    elementary_ideal,
    ideal_eval_fingerprint,
    knot_determinant,
    minor_det,
)
from .knots import (
    BraidWord,
    GaussCode,
    KnotDiagram,
    KnotTableEntry,
    PDCode,
    ParseError,
    bundled_table,
    load_knot_table,
    parse_braid,
    parse_code,
    parse_gauss,
    parse_pd,
    presentation_from_code,
    to_diagram,
    wirtinger,
)
from .laurent import LaurentPoly, gcd_up_to_unit, geometric_sum, parse_poly
from .words import GroupRingElement, Presentation, Word

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "BtSpinParams",
    "GaussCode",
    "GroupRingElement",
    "Ideal",
    "KnotDiagram",
    "KnotTableEntry",
    "LaurentPoly",
    "PDCode",
    "ParseError",
    "PolyMatrix",
    "Presentation",
    "Verdict",
    "Word",
    "abelianize",
    "alexander_matrix",
    "alexander_polynomial",
    "all_minors_vanish",
    "apply_equivalence",
    "btspin_matrix",
    "btspin_presentation",
    "btspin_weights",
    "bundled_table",
    "distinguish",
    "e0_check",
    "e1_brute_force",
    "e1_closed_form",
    "e1_closed_form_generators",
    "e2_generators",
    "elementary_ideal",
    "fox_derivative",
    "gcd_up_to_unit",
    "geometric_sum",
    "ideal_eval_fingerprint",
    "knot_determinant",
    "load_knot_table",
    "meridian_word",
    "minor_det",
    "parity_table_row",
    "parse_braid",
    "parse_code",
    "parse_gauss",
    "parse_pd",
    "parse_poly",
    "presentation_from_code",
    "solve_beta_alpha",
    "to_diagram",
    "uniform_weights",
    "wirtinger",
]
