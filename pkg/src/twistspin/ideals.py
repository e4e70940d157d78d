"""Matrices over Z[t, 1/t], elementary ideals, and the Alexander polynomial.

Determinants are computed by fraction-free (Bareiss) elimination with exact
Laurent division at each pivot step; a cofactor-expansion determinant exists
only in the test suite as an oracle.  Elementary-ideal generators are the
minors of a fixed size, enumerated over row and column subsets in
lexicographic order.
"""

from __future__ import annotations

import math
import warnings
from itertools import combinations
from typing import Iterable, Sequence

from .laurent import LaurentPoly, gcd_many
from .words import Presentation


class MinorBudgetError(RuntimeError):
    """Raised when a minor enumeration would exceed the configured ceiling."""


class PolyMatrix:
    """A rectangular matrix of Laurent polynomials (immutable)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]]):
        grid = tuple(tuple(row) for row in entries)
        if not grid or not grid[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ragged rows in matrix")
        self.rows = len(grid)
        self.cols = width
        self.entries = grid

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> PolyMatrix:
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(p) for p in row) + "]" for row in self.entries)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols})"


def minor_det(a: PolyMatrix, rows: Iterable[int], cols: Iterable[int]) -> LaurentPoly:
    """Exact determinant of the square submatrix on the given index sets."""
    rows = sorted(rows)
    cols = sorted(cols)
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError("repeated index in minor selection")
    if len(rows) != len(cols):
        raise ValueError("minor selection must be square")
    if rows and (rows[0] < 0 or rows[-1] >= a.rows):
        raise IndexError("row index out of range")
    if cols and (cols[0] < 0 or cols[-1] >= a.cols):
        raise IndexError("column index out of range")
    grid = [[a.entries[i][j] for j in cols] for i in rows]
    return _det_bareiss(grid)


def _det_bareiss(grid: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free determinant; every interior division is exact."""
    n = len(grid)
    if n == 0:
        return LaurentPoly.one()
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if grid[i][k]), None)
        if pivot_row is None:
            return LaurentPoly.zero()
        if pivot_row != k:
            grid[k], grid[pivot_row] = grid[pivot_row], grid[k]
            sign = -sign
        pivot = grid[k][k]
        for i in range(k + 1, n):
            row_i = grid[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * grid[k][j]).exact_div(prev)
            row_i[k] = LaurentPoly.zero()
        prev = pivot
    d = grid[n - 1][n - 1]
    return d if sign == 1 else -d


class Ideal:
    """A finitely generated ideal of Z[t, 1/t], held as a generator list.

    Generators are normalized, deduplicated, and stripped of zeros.  The zero
    ideal is the empty list; an ideal containing a unit collapses to the
    single generator 1.  Equality of ideals is not decidable here; compare
    through :func:`ideal_eval_fingerprint`, which is a necessary condition
    only.
    """

    __slots__ = ("generators",)

    def __init__(self, generators: Iterable[LaurentPoly] = ()):
        seen: dict[LaurentPoly, None] = {}
        for g in generators:
            if g.is_zero():
                continue
            n = g.normalize()
            if n.is_one():
                seen = {LaurentPoly.one(): None}
                break
            seen.setdefault(n, None)
        self.generators = tuple(seen)

    @staticmethod
    def zero() -> Ideal:
        return Ideal()

    @staticmethod
    def unit() -> Ideal:
        return Ideal([LaurentPoly.one()])

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one()

    def generator_gcd(self) -> LaurentPoly:
        """Gcd of all generators (0 for the zero ideal)."""
        return gcd_many(self.generators)

    def fingerprint(self, points: Sequence[int]) -> tuple[int, ...]:
        return ideal_eval_fingerprint(self, points)

    def render(self) -> str:
        if self.is_zero:
            return "0"
        if self.is_unit:
            return "(1)"
        return "< " + " ; ".join(str(g) for g in self.generators) + " >"

    def __eq__(self, other: object) -> bool:
        # Equality of the stored generator lists, not of the ideals they span.
        return isinstance(other, Ideal) and set(self.generators) == set(other.generators)

    def __repr__(self) -> str:
        return f"Ideal({self.render()})"


def ideal_eval_fingerprint(ideal: Ideal, points: Sequence[int]) -> tuple[int, ...]:
    """Per point t0: gcd over generators of |cleared evaluation| (0 if all vanish).

    Equal ideals get equal fingerprints whenever the two generator lists agree
    up to units and integer-multiple padding, which covers every comparison
    made in this library; it is a sound necessary condition in that setting,
    never a proof of ideal equality.
    """
    for t0 in points:
        if t0 == 0:
            raise ValueError("fingerprint points must be nonzero")
    out = []
    for t0 in points:
        acc = 0
        for g in ideal.generators:
            acc = math.gcd(acc, abs(g.evaluate_cleared(t0)))
            if acc == 1:
                break
        out.append(acc)
    return tuple(out)


def elementary_ideal(a: PolyMatrix, k: int, max_minors: int | None = None) -> Ideal:
    """The k-th elementary ideal of the matrix a.

    With q columns and p rows: generated by all (q-k) x (q-k) minors when
    0 < q-k <= p, the zero ideal when q-k > p, and the unit ideal when
    q-k <= 0.
    """
    if k < 0:
        raise ValueError("elementary ideal index must be nonnegative")
    size = a.cols - k
    if size > a.rows:
        return Ideal.zero()
    if size <= 0:
        return Ideal.unit()
    _check_minor_budget(a, size, max_minors)
    gens = []
    for rows in combinations(range(a.rows), size):
        for cols in combinations(range(a.cols), size):
            gens.append(minor_det(a, rows, cols))
    return Ideal(gens)


def all_minors_vanish(a: PolyMatrix, size: int, max_minors: int | None = None) -> bool:
    """True when every size x size minor is the zero polynomial.

    Short-circuits on the first nonzero minor.
    """
    if size <= 0:
        return False
    if size > a.rows or size > a.cols:
        raise ValueError("minor size exceeds matrix dimensions")
    _check_minor_budget(a, size, max_minors)
    for rows in combinations(range(a.rows), size):
        for cols in combinations(range(a.cols), size):
            if minor_det(a, rows, cols):
                return False
    return True


DEFAULT_MINOR_CEILING = 2_000_000


def _check_minor_budget(a: PolyMatrix, size: int, max_minors: int | None):
    ceiling = DEFAULT_MINOR_CEILING if max_minors is None else max_minors
    count = math.comb(a.rows, size) * math.comb(a.cols, size)
    if count > ceiling:
        raise MinorBudgetError(
            f"{count} minors of size {size} exceed the ceiling of {ceiling}"
        )


def minor_count(a: PolyMatrix, size: int) -> int:
    return math.comb(a.rows, size) * math.comb(a.cols, size)


# -- knot-level invariants from Wirtinger presentations -----------------------


def _require_wirtinger(pres: Presentation) -> int:
    l = pres.generator_count
    if len(pres.relators) != l:
        raise ValueError(
            "expected a Wirtinger presentation with equal generator and relator counts"
        )
    return l


def alexander_polynomial(pres: Presentation) -> LaurentPoly:
    """Normalized gcd of the (l-1) x (l-1) minors of the Wirtinger matrix.

    Weights send every generator to t.  A single-generator presentation (an
    unknot diagram after free reduction) yields 1.  All minors vanishing
    signals a malformed presentation and is reported as 0 with a warning.
    """
    from .fox import alexander_matrix

    l = _require_wirtinger(pres)
    if l == 1:
        return LaurentPoly.one()
    weights = {g: 1 for g in range(l)}
    a = alexander_matrix(pres, weights)
    acc = LaurentPoly.zero()
    size = l - 1
    for rows in combinations(range(l), size):
        for cols in combinations(range(l), size):
            d = minor_det(a, rows, cols)
            if d.is_zero():
                continue
            acc = d.normalize() if acc.is_zero() else gcd_many([acc, d])
            if acc.is_one():
                return acc
    if acc.is_zero():
        warnings.warn(
            "all Alexander-matrix minors vanish; presentation is not a valid knot group",
            stacklevel=2,
        )
    return acc


def knot_determinant(pres: Presentation) -> int:
    """|Delta(-1)| of the normalized Alexander polynomial."""
    return abs(alexander_polynomial(pres).evaluate_at_unit(-1))


def e2_generators(pres: Presentation) -> Ideal:
    """Second elementary ideal of the Wirtinger matrix: all (l-2)-minors."""
    from .fox import alexander_matrix

    l = _require_wirtinger(pres)
    weights = {g: 1 for g in range(l)}
    if l <= 2:
        return Ideal.unit()
    return elementary_ideal(alexander_matrix(pres, weights), 2)


# -- matrix equivalence operations --------------------------------------------


def permute_rows(a: PolyMatrix, perm: Sequence[int]) -> PolyMatrix:
    _check_perm(perm, a.rows)
    return PolyMatrix([a.entries[i] for i in perm])


def permute_cols(a: PolyMatrix, perm: Sequence[int]) -> PolyMatrix:
    _check_perm(perm, a.cols)
    return PolyMatrix([[row[j] for j in perm] for row in a.entries])


def add_row_combination(
    a: PolyMatrix, target: int, coeffs: dict[int, LaurentPoly]
) -> PolyMatrix:
    """Add sum(coeffs[i] * row_i) to the target row; sources must be other rows."""
    if not 0 <= target < a.rows:
        raise IndexError("target row out of range")
    if target in coeffs:
        raise ValueError("a row combination may not use the target row itself")
    if any(not 0 <= i < a.rows for i in coeffs):
        raise IndexError("source row out of range")
    new_row = list(a.entries[target])
    for i, c in coeffs.items():
        for j in range(a.cols):
            new_row[j] = new_row[j] + c * a.entries[i][j]
    rows = [list(r) for r in a.entries]
    rows[target] = new_row
    return PolyMatrix(rows)


def add_col_combination(
    a: PolyMatrix, target: int, coeffs: dict[int, LaurentPoly]
) -> PolyMatrix:
    """Add sum(coeffs[j] * col_j) to the target column; sources must be other columns."""
    if not 0 <= target < a.cols:
        raise IndexError("target column out of range")
    if target in coeffs:
        raise ValueError("a column combination may not use the target column itself")
    if any(not 0 <= j < a.cols for j in coeffs):
        raise IndexError("source column out of range")
    rows = [list(r) for r in a.entries]
    for row in rows:
        acc = row[target]
        for j, c in coeffs.items():
            acc = acc + c * row[j]
        row[target] = acc
    return PolyMatrix(rows)


def adjoin_zero_row(a: PolyMatrix) -> PolyMatrix:
    zero_row = [LaurentPoly.zero()] * a.cols
    return PolyMatrix(list(a.entries) + [zero_row])


def stabilize_unit(a: PolyMatrix) -> PolyMatrix:
    """Extend to block-diagonal form with a new diagonal 1."""
    z = LaurentPoly.zero()
    rows = [list(r) + [z] for r in a.entries]
    rows.append([z] * a.cols + [LaurentPoly.one()])
    return PolyMatrix(rows)


_EQUIVALENCE_OPS = {
    "permute_rows": permute_rows,
    "permute_cols": permute_cols,
    "add_row_combination": add_row_combination,
    "add_col_combination": add_col_combination,
    "adjoin_zero_row": adjoin_zero_row,
    "stabilize_unit": stabilize_unit,
}


def apply_equivalence(a: PolyMatrix, op: str, **params) -> PolyMatrix:
    """Apply one of the named matrix-equivalence operations."""
    try:
        fn = _EQUIVALENCE_OPS[op]
    except KeyError:
        raise ValueError(f"unknown equivalence operation {op!r}") from None
    return fn(a, **params)


def _check_perm(perm: Sequence[int], n: int):
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")
