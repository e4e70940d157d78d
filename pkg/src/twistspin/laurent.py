"""Exact arithmetic in the ring of integer Laurent polynomials Z[t, 1/t].

A Laurent polynomial is stored sparsely as a mapping from integer exponent to
nonzero integer coefficient, so arithmetic stays exact for coefficients and
exponents of any size.  Values are immutable after construction and all
operations return fresh polynomials, so they can be shared freely between
threads.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Mapping


class LaurentPoly:
    """An element of Z[t, 1/t], represented as {exponent: coefficient}.

    No zero coefficient is ever stored; the zero polynomial is the empty
    mapping.

    >>> t = LaurentPoly.t()
    >>> print((1 - t) * (1 + t))
    1 - t^2
    >>> print(LaurentPoly({-1: 1, 0: 2, 1: 1}))
    t^-1 + 2 + t
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        cleaned: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    cleaned[e] = c
        self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> LaurentPoly:
        return LaurentPoly()

    @staticmethod
    def one() -> LaurentPoly:
        return LaurentPoly({0: 1})

    @staticmethod
    def const(c: int) -> LaurentPoly:
        return LaurentPoly({0: c})

    @staticmethod
    def t(k: int = 1) -> LaurentPoly:
        """The monomial t^k."""
        return LaurentPoly({k: 1})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        """True for +-t^k, the units of Z[t, 1/t]."""
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    def degree(self) -> int:
        """Largest exponent; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def valuation(self) -> int:
        """Smallest exponent; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == LaurentPoly.const(other).terms
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: int | LaurentPoly) -> LaurentPoly:
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return (-self) + other

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit Laurent polynomial")
            e, c = next(iter(self.terms.items()))
            return LaurentPoly({e * n: c ** (n & 1)})
        out = LaurentPoly.one()
        for _ in range(n):
            out = out * self
        return out

    # -- the operations the rest of the library is built on -----------------

    def substitute_power(self, k: int) -> LaurentPoly:
        """Return p(t^k): every exponent e becomes k*e.  Requires k != 0.

        >>> print(LaurentPoly({0: 1, 1: -1}).substitute_power(-1))
        -t^-1 + 1
        """
        if k == 0:
            raise ValueError("substitute_power requires a nonzero exponent multiplier")
        return LaurentPoly({k * e: c for e, c in self.terms.items()})

    def evaluate_at_unit(self, u: int) -> int:
        """Exact value p(u) for u in {1, -1} (the only evaluable integer units)."""
        if u == 1:
            return sum(self.terms.values())
        if u == -1:
            return sum(c if e % 2 == 0 else -c for e, c in self.terms.items())
        raise ValueError("evaluate_at_unit accepts only 1 or -1")

    def evaluate_cleared(self, t0: int) -> int:
        """Exact value of (t^s * p)(t0) with s = -valuation(p).

        The shift clears all powers of t, so the result equals p(t0) up to the
        unit t0^s; that is enough for comparisons that only care about values
        up to units of Z[t, 1/t].
        """
        if t0 == 0:
            raise ValueError("evaluate_cleared requires a nonzero point")
        if not self.terms:
            return 0
        s = -self.valuation()
        return sum(c * t0 ** (e + s) for e, c in self.terms.items())

    def normalize(self) -> LaurentPoly:
        """Canonical associate: lowest exponent 0 and positive lowest coefficient.

        Every polynomial p satisfies normalize(u * p) == normalize(p) for any
        unit u = +-t^k, and normalize(0) == 0.

        >>> print(LaurentPoly({-1: -1, 0: 1, 1: -1}).normalize())
        1 - t + t^2
        """
        if not self.terms:
            return self
        v = self.valuation()
        sign = 1 if self.terms[v] > 0 else -1
        return LaurentPoly({e - v: sign * c for e, c in self.terms.items()})

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient self / other in Z[t, 1/t]; raises if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        vs, num = _dense(self)
        vo, den = _dense(other)
        quo = _div_exact_dense(num, den)
        if quo is None:
            raise ValueError(f"{self} is not divisible by {other}")
        return _from_dense(vs - vo, quo)

    def divides(self, other: LaurentPoly) -> bool:
        """True if self divides other in Z[t, 1/t]."""
        if self.is_zero():
            return other.is_zero()
        if other.is_zero():
            return True
        _, num = _dense(other)
        _, den = _dense(self)
        return _div_exact_dense(num, den) is not None

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                tpart = "t" if e == 1 else f"t^{e}"
                body = tpart if mag == 1 else f"{mag}{tpart}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def _coerce(x: int | LaurentPoly) -> LaurentPoly:
    if isinstance(x, int):
        return LaurentPoly.const(x)
    if isinstance(x, LaurentPoly):
        return x
    raise TypeError(f"cannot treat {x!r} as a Laurent polynomial")


def geometric_sum(a: int, b: int) -> LaurentPoly:
    """The polynomial 1 + t^a + t^(2a) + ... + t^((b-1)a).

    This is the exact polynomial value of (1 - t^(a*b)) / (1 - t^a), which is
    how division-shaped matrix entries are constructed here: as sums, never by
    ring division.  b = 0 gives the empty sum 0.

    >>> print(geometric_sum(-2, 2))
    t^-2 + 1
    """
    if a == 0:
        raise ValueError("geometric_sum requires a nonzero exponent step")
    if b < 0:
        raise ValueError("geometric_sum requires a nonnegative term count")
    return LaurentPoly({a * i: 1 for i in range(b)})


# -- gcd via content extraction + subresultant remainder sequence ------------

def gcd_up_to_unit(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """A gcd of p and q in Z[t, 1/t], returned in normalized form.

    Computed on the unit-shifted Z[t] representatives: the integer content is
    split off and the primitive parts go through a fraction-free subresultant
    remainder sequence, which avoids both rational arithmetic and the
    coefficient blowup of naive integer pseudo-remainders.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.normalize()
    if q.is_zero():
        return p.normalize()
    _, a = _dense(p)
    _, b = _dense(q)
    ca, pa = _content_split(a)
    cb, pb = _content_split(b)
    c = math.gcd(ca, cb)
    prim = _prs_gcd(pa, pb)
    return _from_dense(0, [c * x for x in prim]).normalize()


def gcd_many(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Fold gcd_up_to_unit over a sequence, skipping zeros; 0 if all are zero."""
    acc = LaurentPoly.zero()
    for p in polys:
        if p.is_zero():
            continue
        acc = p.normalize() if acc.is_zero() else gcd_up_to_unit(acc, p)
        if acc.is_one():
            break
    return acc


# Dense helpers operate on coefficient lists [c0, c1, ...] (low to high) with a
# nonzero leading coefficient.

def _dense(p: LaurentPoly) -> tuple[int, list[int]]:
    v = p.valuation()
    d = p.degree()
    return v, [p.terms.get(e, 0) for e in range(v, d + 1)]


def _from_dense(val: int, coeffs: list[int]) -> LaurentPoly:
    return LaurentPoly({val + i: c for i, c in enumerate(coeffs) if c})


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _content_split(c: list[int]) -> tuple[int, list[int]]:
    g = 0
    for x in c:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g, [x // g for x in c]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced mod b."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, bc in enumerate(b):
            r[shift + i] -= lr * bc
        _trim(r)
        e -= 1
    if e > 0:
        m = lb**e
        r = [m * x for x in r]
    return r


def _prs_gcd(a: list[int], b: list[int]) -> list[int]:
    """Gcd of two nonzero primitive integer polynomials (subresultant sequence)."""
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return [1]
    g, h = 1, 1
    while True:
        delta = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            break
        if len(r) == 1:
            b = [1]
            break
        divisor = g * h**delta
        a, b = b, [x // divisor for x in r]
        g = a[-1]
        h = h if delta == 0 else (g**delta if delta == 1 else g**delta // h ** (delta - 1))
    return _content_split(b)[1]


def _div_exact_dense(num: list[int], den: list[int]) -> list[int] | None:
    """Quotient num / den in Z[t], or None when the division is not exact."""
    if len(num) < len(den):
        return None
    r = list(num)
    ld = den[-1]
    qlen = len(num) - len(den) + 1
    q = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = r[len(den) - 1 + k]
        if c % ld:
            return None
        q[k] = c // ld
        if q[k]:
            for i, dc in enumerate(den):
                r[k + i] -= q[k] * dc
    if any(r):
        return None
    return q


# -- parsing -----------------------------------------------------------------

_TERM_RE = re.compile(r"(\d+)?\s*\*?\s*(t(?:\^(-?\d+))?)?")


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical rendering, e.g. ``1 - t + t^2`` or ``3t^-2 + t``.

    Accepts optional ``*`` between coefficient and monomial and arbitrary
    whitespace.  Raises ValueError with the offending position on bad input.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    out = LaurentPoly.zero()
    i = 0
    first = True
    while i < len(s):
        while i < len(s) and s[i].isspace():
            i += 1
        if i >= len(s):
            break
        sign = 1
        if s[i] in "+-":
            if first and s[i] == "+":
                raise ValueError(f"unexpected '+' at position {i} in {text!r}")
            sign = -1 if s[i] == "-" else 1
            i += 1
            while i < len(s) and s[i].isspace():
                i += 1
        elif not first:
            raise ValueError(f"expected '+' or '-' at position {i} in {text!r}")
        m = _TERM_RE.match(s, i)
        if not m or (m.group(1) is None and m.group(2) is None) or m.end() == i:
            raise ValueError(f"malformed term at position {i} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            exp = 0
        elif m.group(3) is None:
            exp = 1
        else:
            exp = int(m.group(3))
        out = out + LaurentPoly({exp: sign * coeff})
        i = m.end()
        first = False
    return out
