"""Freely reduced words, the integral group ring of a free group, and finite
group presentations with a distinguished meridian."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Letter = tuple[int, int]  # (generator index, +1 or -1)


class Word:
    """A freely reduced word in generators indexed 0, 1, 2, ...

    Adjacent cancelling pairs are removed eagerly at construction, so equality
    and hashing are on the free-group normal form.  The empty word is the
    identity.

    >>> x, y = Word.generator(0), Word.generator(1)
    >>> (x * y) * (y.inverse() * x)
    Word('x0 x0')
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        stack: list[Letter] = []
        for g, s in letters:
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +-1, got {s}")
            if g < 0:
                raise ValueError(f"generator index must be nonnegative, got {g}")
            if stack and stack[-1][0] == g and stack[-1][1] == -s:
                stack.pop()
            else:
                stack.append((g, s))
        self.letters = tuple(stack)

    @staticmethod
    def identity() -> Word:
        return Word()

    @staticmethod
    def generator(g: int) -> Word:
        return Word(((g, 1),))

    @staticmethod
    def generator_power(g: int, k: int) -> Word:
        """The word x_g^k; k = 0 gives the empty word."""
        s = 1 if k >= 0 else -1
        return Word(((g, s),) * abs(k))

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, k: int) -> Word:
        base = self if k >= 0 else self.inverse()
        out = Word()
        for _ in range(abs(k)):
            out = out * base
        return out

    def exponent_sum(self, g: int) -> int:
        """Signed count of occurrences of generator g."""
        return sum(s for gi, s in self.letters if gi == g)

    def max_generator(self) -> int:
        """Largest generator index used, or -1 for the empty word."""
        return max((g for g, _ in self.letters), default=-1)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def render(self, names: Sequence[str] | None = None) -> str:
        """Run-length rendering like ``x1 x2^-1 h``; the empty word is ``1``."""
        if not self.letters:
            return "1"
        runs: list[tuple[int, int]] = []
        for g, s in self.letters:
            if runs and runs[-1][0] == g and (runs[-1][1] > 0) == (s > 0):
                runs[-1] = (g, runs[-1][1] + s)
            else:
                runs.append((g, s))
        parts = []
        for g, k in runs:
            name = names[g] if names is not None else f"x{g}"
            parts.append(name if k == 1 else f"{name}^{k}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Word('{self.render()}')"


class GroupRingElement:
    """A finite integer combination of words: an element of the group ring ZF.

    ``terms`` maps Word -> nonzero integer coefficient; the zero element is
    the empty mapping.  Multiplication is the convolution induced by word
    concatenation.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        cleaned: dict[Word, int] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    cleaned[w] = c
        self.terms = cleaned

    @staticmethod
    def zero() -> GroupRingElement:
        return GroupRingElement()

    @staticmethod
    def one() -> GroupRingElement:
        return GroupRingElement({Word(): 1})

    @staticmethod
    def from_word(w: Word, coeff: int = 1) -> GroupRingElement:
        return GroupRingElement({w: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return GroupRingElement(out)

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __mul__(self, other: int | Word | GroupRingElement) -> GroupRingElement:
        other = _coerce(other)
        out: dict[Word, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
        return GroupRingElement(out)

    def __rmul__(self, other: int | Word) -> GroupRingElement:
        return _coerce(other) * self

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "GroupRingElement(0)"
        bits = [f"{c}*[{w.render()}]" for w, c in self.terms.items()]
        return "GroupRingElement(" + " + ".join(bits) + ")"


def _coerce(x: int | Word | GroupRingElement) -> GroupRingElement:
    if isinstance(x, GroupRingElement):
        return x
    if isinstance(x, Word):
        return GroupRingElement({x: 1})
    if isinstance(x, int):
        return GroupRingElement({Word(): x})
    raise TypeError(f"cannot treat {x!r} as a group ring element")


@dataclass(frozen=True)
class Presentation:
    """A finite presentation <generators | relators> with a meridian.

    ``meridian`` is the index of the distinguished meridian generator.  When
    the meridian class is represented by a word rather than a single
    generator (as happens for twist-spin groups), ``meridian_word`` carries
    it; it defaults to the one-letter word of the meridian generator.
    """

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]
    meridian: int = 0
    meridian_word: Word | None = None

    def __post_init__(self):
        if not self.generator_names:
            raise ValueError("a presentation needs at least one generator")
        n = len(self.generator_names)
        for r in self.relators:
            if r.max_generator() >= n:
                raise ValueError(f"relator {r.render()} uses an undefined generator")
        if not 0 <= self.meridian < n:
            raise ValueError(f"meridian index {self.meridian} out of range")
        if self.meridian_word is not None and self.meridian_word.max_generator() >= n:
            raise ValueError("meridian word uses an undefined generator")

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    def meridian_as_word(self) -> Word:
        if self.meridian_word is not None:
            return self.meridian_word
        return Word.generator(self.meridian)

    def render(self) -> str:
        gens = ", ".join(self.generator_names)
        rels = ", ".join(r.render(self.generator_names) for r in self.relators)
        return f"<{gens} | {rels}>"

    def __repr__(self) -> str:
        return f"Presentation('{self.render()}')"


def default_generator_names(count: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(count))
