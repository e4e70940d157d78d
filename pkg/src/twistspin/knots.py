"""Knot-diagram notations (PD code, signed Gauss code, braid word) and the
Wirtinger presentation of the knot group.

Only single-component diagrams (knots) are accepted.  Conventions:

* PD tuples ``X(a,b,c,d)`` list the four edges counterclockwise starting at
  the incoming under-edge ``a``; the under-strand exits at ``c`` and ``b``,
  ``d`` are the over-strand edges.  Edges must be labeled 1..2n consecutively
  along the knot; the over-strand then runs ``d -> b`` (positive crossing) or
  ``b -> d`` (negative crossing).  The convention is fixed here because PD
  conventions differ between programs and flip t and 1/t in the Alexander
  polynomial; that flip is invisible after normalization but matters for
  reproducible intermediate output.
* Gauss codes are sequences like ``O1+ U2+ O3- ...``; each crossing id occurs
  once with O and once with U, carrying the same sign both times.
* Braid words are ``s1 s2^-1 ...`` over a given strand count (``--strands k``
  may be embedded in the text); the closure of the braid is taken.  In a
  positive letter the strand entering on the right passes over.

Lines starting with ``#`` are comments and all whitespace is insignificant.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .words import Presentation, Word, default_generator_names


class ParseError(ValueError):
    """Malformed knot-notation input; ``position`` is a character offset."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Crossing:
    """One crossing: the over-arc and the incoming/outgoing under-arcs."""

    over: int
    under_in: int
    under_out: int
    sign: int


@dataclass(frozen=True)
class KnotDiagram:
    """A connected single-component diagram with arcs 0..arc_count-1."""

    crossings: tuple[Crossing, ...]
    arc_count: int

    def __post_init__(self):
        if self.arc_count <= 0:
            raise ValueError("diagram needs at least one arc")
        if len(self.crossings) != self.arc_count:
            raise ValueError("a knot diagram has as many crossings as arcs")
        ins = sorted(c.under_in for c in self.crossings)
        outs = sorted(c.under_out for c in self.crossings)
        if ins != list(range(self.arc_count)) or outs != list(range(self.arc_count)):
            raise ValueError("every arc must enter and leave exactly one under-crossing")
        for c in self.crossings:
            if not 0 <= c.over < self.arc_count:
                raise ValueError("over-arc index out of range")
            if c.sign not in (1, -1):
                raise ValueError("crossing sign must be +-1")
        if not self._connected():
            raise ValueError("diagram is not connected")

    def _connected(self) -> bool:
        adj: dict[int, set[int]] = {i: set() for i in range(self.arc_count)}
        for c in self.crossings:
            trio = {c.over, c.under_in, c.under_out}
            for x in trio:
                adj[x] |= trio
        seen = {0}
        stack = [0]
        while stack:
            for nxt in adj[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return len(seen) == self.arc_count

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)


@dataclass(frozen=True)
class PDCode:
    tuples: tuple[tuple[int, int, int, int], ...]


@dataclass(frozen=True)
class GaussCode:
    entries: tuple[tuple[int, str, int], ...]  # (crossing id, "O" | "U", sign)


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...]  # signed Artin generator indices, 1-based
    strands: int


def _strip_comments(text: str) -> str:
    return "\n".join(
        line for line in text.splitlines() if not line.lstrip().startswith("#")
    )


# -- PD codes ------------------------------------------------------------------

_PD_TUPLE_RE = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)", re.I)


def parse_pd(text: str) -> PDCode:
    """Parse ``PD[X(a,b,c,d), ...]`` with positive integer edge labels."""
    s = _strip_comments(text).strip()
    compact = re.sub(r"\s+", "", s)
    if not compact.upper().startswith("PD[") or not compact.endswith("]"):
        raise ParseError("PD code must look like PD[X(a,b,c,d), ...]", 0)
    body = compact[3:-1]
    if not body:
        raise ParseError("PD code lists no crossings", 3)
    tuples: list[tuple[int, int, int, int]] = []
    pos = 0
    while pos < len(body):
        m = _PD_TUPLE_RE.match(body, pos)
        if not m:
            raise ParseError("expected X(a,b,c,d)", pos + 3)
        labels = tuple(int(x) for x in m.groups())
        if any(x <= 0 for x in labels):
            raise ParseError("edge labels must be positive", pos + 3)
        tuples.append(labels)  # type: ignore[arg-type]
        pos = m.end()
        if pos < len(body):
            if body[pos] != ",":
                raise ParseError("expected ',' between crossings", pos + 3)
            pos += 1
    counts: dict[int, int] = {}
    for tup in tuples:
        for x in tup:
            counts[x] = counts.get(x, 0) + 1
    bad = sorted(x for x, k in counts.items() if k != 2)
    if bad:
        raise ParseError(f"edge labels must each appear exactly twice; offenders: {bad}")
    return PDCode(tuple(tuples))


def render_pd(code: PDCode) -> str:
    return "PD[" + ",".join(f"X({a},{b},{c},{d})" for a, b, c, d in code.tuples) + "]"


def _pd_to_diagram(code: PDCode) -> KnotDiagram:
    n = len(code.tuples)
    edges = sorted({x for tup in code.tuples for x in tup})
    if edges != list(range(1, 2 * n + 1)):
        raise ParseError(
            "PD edge labels must be exactly 1..2n, numbered consecutively along the knot"
        )

    def succ(e: int) -> int:
        return e % (2 * n) + 1

    # Resolve the over-strand direction at each crossing and collect the
    # passage map edge -> next edge along the knot.
    nxt: dict[int, int] = {}
    signs: list[int] = []
    over_in: list[int] = []

    def _claim(src: int, dst: int):
        if src in nxt:
            raise ParseError(f"edge {src} leaves two different crossings; not a knot")
        nxt[src] = dst

    for a, b, c, d in code.tuples:
        _claim(a, c)
        if succ(b) == d:
            signs.append(-1)
            over_in.append(b)
            _claim(b, d)
        elif succ(d) == b:
            signs.append(1)
            over_in.append(d)
            _claim(d, b)
        else:
            raise ParseError(
                f"cannot orient the over-strand of X({a},{b},{c},{d}): "
                "neither over-edge follows the other"
            )
    if len(nxt) != 2 * n:
        raise ParseError("PD code does not traverse every edge; not a knot")
    cursor, seen = 1, 1
    while nxt[cursor] != 1:
        cursor = nxt[cursor]
        seen += 1
    if seen != 2 * n:
        raise ParseError("PD code describes a link with several components, not a knot")

    # Merge the two over-edges of each crossing: arcs are the merge classes.
    parent = list(range(2 * n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, d in code.tuples:
        rb, rd = find(b), find(d)
        if rb != rd:
            parent[max(rb, rd)] = min(rb, rd)

    roots = sorted({find(e) for e in range(1, 2 * n + 1)})
    arc_of = {e: roots.index(find(e)) for e in range(1, 2 * n + 1)}
    crossings = [
        Crossing(over=arc_of[ov], under_in=arc_of[a], under_out=arc_of[c], sign=sg)
        for (a, b, c, d), sg, ov in zip(code.tuples, signs, over_in)
    ]
    return KnotDiagram(tuple(crossings), len(roots))


# -- Gauss codes -----------------------------------------------------------------

_GAUSS_TOKEN_RE = re.compile(r"([OUou])(\d+)([+-])")


def parse_gauss(text: str) -> GaussCode:
    """Parse a signed Gauss code like ``O1+ U2+ O3- ...``."""
    s = _strip_comments(text)
    entries: list[tuple[int, str, int]] = []
    pos = 0
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _GAUSS_TOKEN_RE.match(s, pos)
        if not m:
            raise ParseError("expected a token like O1+ or U2-", pos)
        entries.append(
            (int(m.group(2)), m.group(1).upper(), 1 if m.group(3) == "+" else -1)
        )
        pos = m.end()
    if not entries:
        raise ParseError("empty Gauss code")
    by_id: dict[int, list[tuple[str, int]]] = {}
    for cid, ou, sg in entries:
        by_id.setdefault(cid, []).append((ou, sg))
    for cid, occ in sorted(by_id.items()):
        if len(occ) != 2:
            raise ParseError(f"crossing {cid} appears {len(occ)} times, expected 2")
        kinds = {ou for ou, _ in occ}
        if kinds != {"O", "U"}:
            missing = "over" if kinds == {"U"} else "under"
            raise ParseError(f"crossing {cid} has no {missing}-pass")
        if occ[0][1] != occ[1][1]:
            raise ParseError(f"crossing {cid} carries inconsistent signs")
    return GaussCode(tuple(entries))


def render_gauss(code: GaussCode) -> str:
    return " ".join(
        f"{ou}{cid}{'+' if sg > 0 else '-'}" for cid, ou, sg in code.entries
    )


def _gauss_to_diagram(code: GaussCode) -> KnotDiagram:
    entries = code.entries
    u_positions = [i for i, (_, ou, _) in enumerate(entries) if ou == "U"]
    n = len(u_positions)

    def arc_of(pos: int) -> int:
        # Arc k covers positions in (u_{k-1}, u_k], cyclically.
        lo, hi = 0, n
        while lo < hi:
            mid = (lo + hi) // 2
            if u_positions[mid] >= pos:
                hi = mid
            else:
                lo = mid + 1
        return lo % n

    over_pos: dict[int, int] = {}
    under_pos: dict[int, int] = {}
    sign_of: dict[int, int] = {}
    for i, (cid, ou, sg) in enumerate(entries):
        (over_pos if ou == "O" else under_pos)[cid] = i
        sign_of[cid] = sg
    crossings = []
    for cid in sorted(under_pos):
        uin = arc_of(under_pos[cid])
        crossings.append(
            Crossing(
                over=arc_of(over_pos[cid]),
                under_in=uin,
                under_out=(uin + 1) % n,
                sign=sign_of[cid],
            )
        )
    return KnotDiagram(tuple(crossings), n)


# -- braid words -----------------------------------------------------------------

_BRAID_TOKEN_RE = re.compile(r"s(\d+)(?:\^(-?\d+))?")
_STRANDS_RE = re.compile(r"--strands\s+(\d+)")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``s1 s2^-1 ...``; strand count from the argument or an embedded
    ``--strands k``, defaulting to one more than the largest generator."""
    s = _strip_comments(text)
    m = _STRANDS_RE.search(s)
    if m:
        embedded = int(m.group(1))
        if strands is not None and strands != embedded:
            raise ParseError("conflicting strand counts given")
        strands = embedded
        s = s[: m.start()] + s[m.end() :]
    letters: list[int] = []
    pos = 0
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _BRAID_TOKEN_RE.match(s, pos)
        if not m:
            raise ParseError("expected a braid letter like s1 or s2^-1", pos)
        gen = int(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        if gen == 0:
            raise ParseError("braid generators are numbered from 1", pos)
        if power == 0:
            raise ParseError("braid letter with zero exponent", pos)
        letters.extend([gen if power > 0 else -gen] * abs(power))
        pos = m.end()
    if not letters:
        raise ParseError("empty braid word")
    top = max(abs(x) for x in letters)
    if strands is None:
        strands = top + 1
    if strands < 2:
        raise ParseError("a braid needs at least 2 strands")
    if top > strands - 1:
        raise ParseError(f"generator s{top} out of range for {strands} strands")
    return BraidWord(tuple(letters), strands)


def render_braid(code: BraidWord) -> str:
    body = " ".join(f"s{abs(x)}" if x > 0 else f"s{abs(x)}^-1" for x in code.letters)
    return f"{body} --strands {code.strands}"


def _braid_to_diagram(code: BraidWord) -> KnotDiagram:
    k = code.strands
    perm = list(range(k))
    for v in code.letters:
        p = abs(v) - 1
        perm[p], perm[p + 1] = perm[p + 1], perm[p]
    # The closure is a knot exactly when the strand permutation is one cycle.
    seen, cur = 1, perm[0]
    while cur != 0:
        cur = perm[cur]
        seen += 1
    if seen != k:
        raise ParseError("braid closure has several components, not a knot")

    pos_arc = list(range(k))
    next_arc = k
    provisional: list[tuple[int, int, int, int]] = []  # over, under_in, under_out, sign
    for v in code.letters:
        p = abs(v) - 1
        sign = 1 if v > 0 else -1
        if sign == 1:
            over_arc, under_arc = pos_arc[p + 1], pos_arc[p]
            provisional.append((over_arc, under_arc, next_arc, sign))
            pos_arc[p], pos_arc[p + 1] = over_arc, next_arc
        else:
            over_arc, under_arc = pos_arc[p], pos_arc[p + 1]
            provisional.append((over_arc, under_arc, next_arc, sign))
            pos_arc[p], pos_arc[p + 1] = next_arc, over_arc
        next_arc += 1

    parent = list(range(next_arc))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in range(k):
        ra, rb = find(pos_arc[j]), find(j)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    roots = sorted({find(x) for x in range(next_arc)})
    arc_of = {x: roots.index(find(x)) for x in range(next_arc)}
    crossings = [
        Crossing(over=arc_of[o], under_in=arc_of[ui], under_out=arc_of[uo], sign=sg)
        for o, ui, uo, sg in provisional
    ]
    return KnotDiagram(tuple(crossings), len(roots))


# -- shared surface ----------------------------------------------------------------


def to_diagram(code: PDCode | GaussCode | BraidWord) -> KnotDiagram:
    """Turn a validated code into a diagram whose arcs index Wirtinger generators."""
    if isinstance(code, PDCode):
        return _pd_to_diagram(code)
    if isinstance(code, GaussCode):
        return _gauss_to_diagram(code)
    if isinstance(code, BraidWord):
        return _braid_to_diagram(code)
    raise TypeError(f"not a knot code: {code!r}")


def wirtinger(diagram: KnotDiagram) -> Presentation:
    """One generator per arc and one conjugation relator per crossing.

    A positive crossing with over-arc o, incoming under-arc u, and outgoing
    under-arc w contributes the relator o u o^-1 w^-1; a negative crossing
    contributes o^-1 u o w^-1.  All relators are kept, including any that
    reduce to the empty word at a kink.  The meridian is generator 0.
    """
    relators = []
    for c in diagram.crossings:
        o = Word.generator(c.over)
        u = Word.generator(c.under_in)
        w = Word.generator(c.under_out)
        if c.sign > 0:
            relators.append(o * u * o.inverse() * w.inverse())
        else:
            relators.append(o.inverse() * u * o * w.inverse())
    return Presentation(
        generator_names=default_generator_names(diagram.arc_count),
        relators=tuple(relators),
        meridian=0,
    )


_FORMATS = ("pd", "gauss", "braid")


def parse_code(text: str, fmt: str | None = None, strands: int | None = None):
    """Parse any supported notation, auto-detecting the format if not given."""
    stripped = _strip_comments(text).strip()
    if fmt is None:
        head = stripped.lstrip()
        if head.upper().startswith("PD["):
            fmt = "pd"
        elif re.match(r"[OUou]\d", head):
            fmt = "gauss"
        elif re.match(r"s\d", head):
            fmt = "braid"
        else:
            raise ParseError("cannot recognize the input as PD, Gauss, or braid notation")
    if fmt == "pd":
        return parse_pd(stripped)
    if fmt == "gauss":
        return parse_gauss(stripped)
    if fmt == "braid":
        return parse_braid(stripped, strands)
    raise ParseError(f"unknown format {fmt!r}; expected one of {_FORMATS}")


def presentation_from_code(text: str, fmt: str | None = None, strands: int | None = None) -> Presentation:
    return wirtinger(to_diagram(parse_code(text, fmt, strands)))


# -- knot tables --------------------------------------------------------------------


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    format: str
    code: str

    def diagram(self) -> KnotDiagram:
        return to_diagram(parse_code(self.code, self.format))

    def presentation(self) -> Presentation:
        return wirtinger(self.diagram())


def load_knot_table(source: str | Path | io.TextIOBase) -> dict[str, KnotTableEntry]:
    """Read a CSV knot table with header ``name,format,code``.

    Returns entries keyed by name, in file order.  Raises ValueError with the
    line number on malformed rows, duplicate names, or codes that fail to
    parse.
    """
    if isinstance(source, (str, Path)):
        with open(source, newline="", encoding="utf-8") as fh:
            return load_knot_table(fh)
    reader = csv.DictReader(source)
    required = {"name", "format", "code"}
    if reader.fieldnames is None or not required.issubset(set(reader.fieldnames)):
        raise ValueError("knot table needs the header: name,format,code")
    table: dict[str, KnotTableEntry] = {}
    for row in reader:
        line = reader.line_num
        name = (row.get("name") or "").strip()
        fmt = (row.get("format") or "").strip().lower()
        code = (row.get("code") or "").strip()
        if not name or not fmt or not code:
            raise ValueError(f"line {line}: incomplete knot table row")
        if fmt not in _FORMATS:
            raise ValueError(f"line {line}: unknown format {fmt!r}")
        if name in table:
            raise ValueError(f"line {line}: duplicate knot name {name!r}")
        entry = KnotTableEntry(name, fmt, code)
        try:
            entry.diagram()
        except ValueError as exc:
            raise ValueError(f"line {line}: code for {name!r} does not parse: {exc}") from exc
        table[name] = entry
    return table


def bundled_table() -> dict[str, KnotTableEntry]:
    """The small knot table shipped with the package."""
    data = resources.files("twistspin").joinpath("data/knots.csv").read_text("utf-8")
    return load_knot_table(io.StringIO(data))
