"""Free differential calculus and abelianization to Z[t, 1/t].

The derivative of a word is computed by one left-to-right scan that
accumulates the prefix word, which is linear in the word length and agrees
with the recursive product-rule definition.
"""

from __future__ import annotations

from typing import Mapping

from .ideals import PolyMatrix
from .laurent import LaurentPoly
from .words import GroupRingElement, Presentation, Word

WeightAssignment = Mapping[int, int]  # generator index -> exponent of t


def fox_derivative(w: Word, g: int) -> GroupRingElement:
    """The free derivative dw/dx_g in the integral group ring.

    Defined by d(uv) = du + u dv, dx_g/dx_g = 1, d(x_g^-1)/dx_g = -x_g^-1 and
    dx_j/dx_g = 0 for j != g; the derivative of the empty word is 0.
    """
    if g < 0:
        raise ValueError("generator index must be nonnegative")
    terms: dict[Word, int] = {}
    prefix: list[tuple[int, int]] = []

    def _add(word: Word, coeff: int):
        s = terms.get(word, 0) + coeff
        if s:
            terms[word] = s
        elif word in terms:
            del terms[word]

    for gi, s in w.letters:
        if s == 1:
            if gi == g:
                _add(Word(prefix), 1)
            _push(prefix, gi, s)
        else:
            _push(prefix, gi, s)
            if gi == g:
                _add(Word(prefix), -1)
    return GroupRingElement(terms)


def _push(prefix: list[tuple[int, int]], g: int, s: int):
    # Maintain the prefix freely reduced so emitted words are in normal form.
    if prefix and prefix[-1][0] == g and prefix[-1][1] == -s:
        prefix.pop()
    else:
        prefix.append((g, s))


def word_weight(w: Word, weights: WeightAssignment) -> int:
    """Exponent of t that w abelianizes to: sum of weight(g) * exponent_sum(g)."""
    total = 0
    for g, s in w.letters:
        try:
            total += s * weights[g]
        except KeyError:
            raise ValueError(f"no weight assigned to generator {g}") from None
    return total


def abelianize(e: GroupRingElement | Word, weights: WeightAssignment) -> LaurentPoly:
    """Image in Z[t, 1/t]: each word w maps to t^(weight of w), extended linearly."""
    if isinstance(e, Word):
        e = GroupRingElement.from_word(e)
    out: dict[int, int] = {}
    for w, c in e.terms.items():
        k = word_weight(w, weights)
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return LaurentPoly(out)


def alexander_matrix(pres: Presentation, weights: WeightAssignment) -> PolyMatrix:
    """One row per relator, one column per generator; entry (i, j) is the
    abelianized derivative of relator i with respect to generator j.

    An empty relator contributes an all-zero row, which is kept so the matrix
    shape always matches the presentation.
    """
    for g in range(pres.generator_count):
        if g not in weights:
            raise ValueError(f"no weight assigned to generator {g}")
    if not pres.relators:
        raise ValueError("presentation has no relators; matrix would be empty")
    rows = []
    for r in pres.relators:
        rows.append(
            [abelianize(fox_derivative(r, g), weights) for g in range(pres.generator_count)]
        )
    return PolyMatrix(rows)


def uniform_weights(pres: Presentation, value: int = 1) -> dict[int, int]:
    """Send every generator to t^value (the classical knot-group abelianization)."""
    return {g: value for g in range(pres.generator_count)}
