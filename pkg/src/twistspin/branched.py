"""Branched twist spins K^(m,n): twist parameters, the knot-group
presentation of the spun 2-knot, its Alexander matrix, and the first
elementary ideal in both closed form and by brute-force minor enumeration.

For a 1-knot K and coprime (|m|, n) with m != 0, the group of K^(m,n) is
obtained from a presentation of the group of K with meridian x1 by adjoining
one generator h, commutators of h with every generator, and the relator
x1^|m| h^beta, where beta > 0 satisfies n*beta = epsilon (mod m) with
epsilon the sign of m.  The meridian of the 2-knot is x1^(-epsilon*n) h^alpha
for the Bezout companion alpha with m*alpha + n*beta = epsilon.  Sending the
meridian to t forces every x_i to t^-beta and h to t^|m|, which is the weight
assignment used for the Alexander matrix here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fox import WeightAssignment, alexander_matrix
from .ideals import (
    Ideal,
    PolyMatrix,
    all_minors_vanish,
    alexander_polynomial,
    e2_generators,
    elementary_ideal,
)
from .laurent import LaurentPoly, geometric_sum
from .words import Presentation, Word


@dataclass(frozen=True)
class BtSpinParams:
    """The integer data (m, n, epsilon, beta, alpha) of a branched twist spin."""

    m: int
    n: int
    epsilon: int
    beta: int
    alpha: int

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("n must be a positive integer")
        if math.gcd(abs(self.m), self.n) != 1:
            raise ValueError(f"|m| = {abs(self.m)} and n = {self.n} must be coprime")
        if self.epsilon != (1 if self.m >= 0 else -1):
            raise ValueError("epsilon must be the sign of m (+1 for m >= 0)")
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        if self.m * self.alpha + self.n * self.beta != self.epsilon:
            raise ValueError("Bezout identity m*alpha + n*beta = epsilon fails")
        if self.m != 0 and (self.n * self.beta - self.epsilon) % self.m != 0:
            raise ValueError("n*beta must be congruent to epsilon mod m")
        if self.epsilon * self.n * self.beta + self.alpha * abs(self.m) != 1:
            raise ValueError("meridian exponent identity epsilon*n*beta + alpha*|m| = 1 fails")

    @staticmethod
    def spun() -> BtSpinParams:
        """The degenerate m = 0 data of the spun knot (only (m, n) = (0, 1))."""
        return BtSpinParams(m=0, n=1, epsilon=1, beta=1, alpha=0)


PARITIES = ("any", "prefer_even", "prefer_odd")


def solve_beta_alpha(m: int, n: int, parity: str = "any") -> BtSpinParams:
    """Smallest positive beta with n*beta = epsilon (mod |m|), plus its alpha.

    When |m| is odd, beta and beta + |m| have opposite parities, so a parity
    preference can always be honored by taking the second-smallest solution;
    when |m| is even, beta is forced odd by coprimality and the preference is
    ignored.
    """
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}")
    if m == 0:
        raise ValueError(
            "m = 0 (a spun knot) has no twist congruence; use BtSpinParams.spun()"
        )
    if n <= 0:
        raise ValueError("n must be a positive integer")
    am = abs(m)
    if math.gcd(am, n) != 1:
        raise ValueError(f"|m| = {am} and n = {n} must be coprime")
    epsilon = 1 if m > 0 else -1
    if am == 1:
        beta = 1
    else:
        inv = pow(n, -1, am)
        beta = (inv * epsilon) % am
        if beta == 0:
            beta = am
    if am % 2 == 1 and parity != "any":
        want_even = parity == "prefer_even"
        if (beta % 2 == 0) != want_even:
            beta += am
    alpha = (epsilon - n * beta) // m
    return BtSpinParams(m=m, n=n, epsilon=epsilon, beta=beta, alpha=alpha)


def meridian_word(params: BtSpinParams, meridian: int = 0, twist: int = 1) -> Word:
    """The meridian x1^(-epsilon*n) h^alpha of the spun 2-knot.

    ``meridian`` and ``twist`` are the generator indices of x1 and h; the
    defaults describe a two-generator setting.
    """
    return Word.generator_power(meridian, -params.epsilon * params.n) * Word.generator_power(
        twist, params.alpha
    )


def btspin_presentation(k: Presentation, params: BtSpinParams) -> Presentation:
    """The knot-group presentation of K^(m,n) built from a presentation of K.

    Appends the twist generator h after K's generators; relators are K's
    relators, then one commutator [x_i, h] per original generator, then
    x1^|m| h^beta (which degenerates to h when m = 0).  The recorded meridian
    word is x1^(-epsilon*n) h^alpha.
    """
    s = k.generator_count
    h = s
    names = k.generator_names + ("h",)
    relators = list(k.relators)
    hw = Word.generator(h)
    for i in range(s):
        xi = Word.generator(i)
        relators.append(xi * hw * xi.inverse() * hw.inverse())
    relators.append(
        Word.generator_power(k.meridian, abs(params.m)) * Word.generator_power(h, params.beta)
    )
    return Presentation(
        generator_names=names,
        relators=tuple(relators),
        meridian=k.meridian,
        meridian_word=meridian_word(params, k.meridian, h),
    )


def btspin_weights(params: BtSpinParams, generator_count: int) -> dict[int, int]:
    """Weights x_i -> -beta and h -> |m| induced by sending the meridian to t."""
    weights = {g: -params.beta for g in range(generator_count)}
    weights[generator_count] = abs(params.m)
    return weights


def btspin_matrix(k: Presentation, params: BtSpinParams) -> PolyMatrix:
    """The (2l+1) x (l+1) Alexander matrix of the spun 2-knot's presentation."""
    pres = btspin_presentation(k, params)
    return alexander_matrix(pres, btspin_weights(params, k.generator_count))


def _scale_factors(params: BtSpinParams) -> list[LaurentPoly]:
    """The four cofactor shapes: 1 - t^|m|, 1 - t^beta, and the two geometric
    sums equal to (1 - t^(|m| beta)) / (1 - t^beta) and / (1 - t^|m|)."""
    am, beta = abs(params.m), params.beta
    one = LaurentPoly.one()
    return [
        one - LaurentPoly.t(am),
        one - LaurentPoly.t(beta),
        geometric_sum(beta, am),
        geometric_sum(am, beta),
    ]


def e1_closed_form_generators(k: Presentation, params: BtSpinParams) -> list[LaurentPoly]:
    """The closed-form generator list for the first elementary ideal of K^(m,n).

    With S the four factors above, the list is Delta_K(t^beta) * S, then
    G_i(t^beta) * (1 - t^|m|) * S over the generators G_i of the second
    elementary ideal of K, then (1 - t^|m|)^(l-1) * S.  Each entry is
    normalized; the list keeps its 4 * (2 + #G) shape, duplicates included.
    """
    if params.m == 0:
        raise ValueError("the closed form requires m != 0")
    l = k.generator_count
    delta = alexander_polynomial(k).substitute_power(params.beta)
    g2 = [g.substitute_power(params.beta) for g in e2_generators(k).generators]
    s_factors = _scale_factors(params)
    one_minus_tm = s_factors[0]
    heads = [delta]
    heads.extend(g * one_minus_tm for g in g2)
    heads.append(one_minus_tm ** (l - 1))
    return [(head * s).normalize() for head in heads for s in s_factors]


def e1_closed_form(k: Presentation, params: BtSpinParams) -> Ideal:
    """The first elementary ideal of K^(m,n) from the closed-form generators."""
    return Ideal(e1_closed_form_generators(k, params))


def e1_brute_force(
    k: Presentation, params: BtSpinParams, max_minors: int | None = None
) -> Ideal:
    """The first elementary ideal from all l x l minors of the spun matrix.

    Practical for small knots only; refuses when the minor count exceeds the
    ceiling.
    """
    if params.m == 0:
        raise ValueError("elementary-ideal enumeration requires m != 0")
    return elementary_ideal(btspin_matrix(k, params), 1, max_minors=max_minors)


def e0_check(
    k: Presentation, params: BtSpinParams, max_minors: int | None = None
) -> bool:
    """True when the zeroth elementary ideal of K^(m,n) vanishes, verified by
    enumerating every (l+1) x (l+1) minor of the (2l+1) x (l+1) matrix."""
    if params.m == 0:
        raise ValueError("elementary-ideal enumeration requires m != 0")
    a = btspin_matrix(k, params)
    return all_minors_vanish(a, a.cols, max_minors=max_minors)
