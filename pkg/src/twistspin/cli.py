"""Command-line interface.

Exit codes: 0 for a completed run (verdict outcomes live in the output text,
never in the exit code), 1 for data errors in batch processing, 2 for usage
or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import branched, distinguish as dist, ideals, knots
from .laurent import LaurentPoly
from .words import Presentation

USAGE_ERROR = 2
DATA_ERROR = 1


def _load_table(path: str | None) -> dict[str, knots.KnotTableEntry]:
    if path is None:
        return knots.bundled_table()
    return knots.load_knot_table(path)


def _resolve(spec: str, table_path: str | None, fmt: str | None, strands: int | None) -> Presentation:
    """A knot argument is either a notation string or a name in the table."""
    try:
        return knots.presentation_from_code(spec, fmt, strands)
    except knots.ParseError:
        if fmt is not None:
            raise
    table = _load_table(table_path)
    if spec in table:
        return table[spec].presentation()
    raise knots.ParseError(
        f"{spec!r} is neither a parsable knot code nor a name in the knot table"
    )


def _diagram_report(diagram: knots.KnotDiagram) -> str:
    lines = [f"{diagram.arc_count} arcs, {len(diagram.crossings)} crossings"]
    for i, c in enumerate(diagram.crossings):
        s = "+" if c.sign > 0 else "-"
        lines.append(
            f"  crossing {i + 1}: over x{c.over + 1}, under x{c.under_in + 1} -> x{c.under_out + 1}, sign {s}"
        )
    lines.append(f"writhe: {diagram.writhe}")
    return "\n".join(lines)


def _cmd_parse(args) -> int:
    code = knots.parse_code(args.code, args.format, args.strands)
    diagram = knots.to_diagram(code)
    pres = knots.wirtinger(diagram)
    print(_diagram_report(diagram))
    print(f"presentation: {pres.render()}")
    print(f"meridian: {pres.generator_names[pres.meridian]}")
    return 0


def _cmd_alexander(args) -> int:
    pres = _resolve(args.knot, args.table, args.format, args.strands)
    print(ideals.alexander_polynomial(pres))
    return 0


def _cmd_det(args) -> int:
    pres = _resolve(args.knot, args.table, args.format, args.strands)
    print(ideals.knot_determinant(pres))
    return 0


def _params_for(args) -> branched.BtSpinParams:
    if args.m == 0:
        if args.n != 1:
            raise ValueError("m = 0 requires n = 1 (the spun knot)")
        return branched.BtSpinParams.spun()
    return branched.solve_beta_alpha(args.m, args.n, args.parity)


def _cmd_btspin(args) -> int:
    pres = _resolve(args.knot, args.table, args.format, args.strands)
    params = _params_for(args)
    if args.show == "presentation":
        spun = branched.btspin_presentation(pres, params)
        print(
            f"params: m={params.m} n={params.n} epsilon={params.epsilon} "
            f"beta={params.beta} alpha={params.alpha}"
        )
        print(f"presentation: {spun.render()}")
        print(f"meridian word: {spun.meridian_as_word().render(spun.generator_names)}")
        return 0
    if params.m == 0:
        raise ValueError("elementary-ideal computations require m != 0")
    if args.show == "e1":
        print(f"E1 = {branched.e1_closed_form(pres, params).render()}")
        return 0
    if args.show == "e1-brute":
        a = branched.btspin_matrix(pres, params)
        count = ideals.minor_count(a, a.cols - 1)
        ideal = branched.e1_brute_force(pres, params)
        print(f"E1 = {ideal.render()}")
        print(f"({count} minors enumerated)")
        return 0
    a = branched.btspin_matrix(pres, params)
    count = ideals.minor_count(a, a.cols)
    if branched.e0_check(pres, params):
        print(f"E0 = 0 (verified, {count} minors)")
        return 0
    print(f"E0 != 0 (a nonzero {a.cols} x {a.cols} minor exists)")
    return 0


def _cmd_distinguish(args) -> int:
    left = _resolve(args.left, args.table, None, None)
    right = _resolve(args.right, args.table, None, None)
    verdict = dist.distinguish(left, args.m1, args.n1, right, args.m2, args.n2)
    print(verdict.summary())
    print(
        f"det1={verdict.det1} (m1={args.m1} {verdict.m1_parity}), "
        f"det2={verdict.det2} (m2={args.m2} {verdict.m2_parity})"
    )
    if not verdict.distinguished:
        print("note: inconclusive means the determinant criterion does not apply;")
        print("it does not assert that the two 2-knots are equivalent.")
    return 0


@dataclass(frozen=True)
class PairJob:
    line: int
    left: str
    m1: int
    n1: int
    right: str
    m2: int
    n2: int


def _read_pairs(path: str) -> tuple[list[PairJob], list[str]]:
    jobs: list[PairJob] = []
    errors: list[str] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        required = {"left_name", "m1", "n1", "right_name", "m2", "n2"}
        if reader.fieldnames is None or not required.issubset(set(reader.fieldnames)):
            raise ValueError("pairs file needs the header: left_name,m1,n1,right_name,m2,n2")
        for row in reader:
            line = reader.line_num
            try:
                jobs.append(
                    PairJob(
                        line=line,
                        left=(row["left_name"] or "").strip(),
                        m1=int(row["m1"]),
                        n1=int(row["n1"]),
                        right=(row["right_name"] or "").strip(),
                        m2=int(row["m2"]),
                        n2=int(row["n2"]),
                    )
                )
            except (TypeError, ValueError, KeyError) as exc:
                errors.append(f"line {line}: malformed pair row ({exc})")
    return jobs, errors


def _cmd_batch(args) -> int:
    table = _load_table(args.table)
    jobs, errors = _read_pairs(args.pairs)
    presentations: dict[str, Presentation] = {}

    def pres_of(name: str) -> Presentation:
        if name not in presentations:
            if name not in table:
                raise ValueError(f"unknown knot name {name!r}")
            presentations[name] = table[name].presentation()
        return presentations[name]

    # Resolve names up front (sequential, deterministic) so workers run pure
    # computations only.
    runnable: list[PairJob] = []
    for job in jobs:
        try:
            pres_of(job.left)
            pres_of(job.right)
            runnable.append(job)
        except ValueError as exc:
            errors.append(f"line {job.line}: {exc}")

    def run(job: PairJob):
        try:
            v = dist.distinguish(
                presentations[job.left], job.m1, job.n1,
                presentations[job.right], job.m2, job.n2,
            )
            return job, v, None
        except ValueError as exc:
            return job, None, str(exc)

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(run, runnable))

    rows = []
    for job, verdict, err in results:
        if err is not None:
            errors.append(f"line {job.line}: {err}")
            continue
        rows.append(
            [
                job.left, job.right, job.m1, job.n1, job.m2, job.n2,
                verdict.det1, verdict.det2, verdict.outcome,
                verdict.rule if verdict.rule else "none",
            ]
        )

    out_path = Path(args.out)
    with open(out_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["left", "right", "m1", "n1", "m2", "n2", "det1", "det2", "outcome", "rule"]
        )
        writer.writerows(rows)

    for message in errors:
        print(message, file=sys.stderr)
    print(f"wrote {len(rows)} rows to {out_path}")
    return DATA_ERROR if errors else 0


def _add_knot_input(p: argparse.ArgumentParser, name: str = "knot"):
    p.add_argument(name, help="knot code (PD/Gauss/braid) or a name from the knot table")
    p.add_argument("--format", choices=["pd", "gauss", "braid"], default=None)
    p.add_argument("--strands", type=int, default=None, help="strand count for braid input")
    p.add_argument("--table", default=None, help="knot table CSV (default: bundled table)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistspin",
        description=(
            "Exact knot-group and Alexander-ideal computations for branched twist "
            "spins, and the knot-determinant non-equivalence test."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a knot code and print its Wirtinger presentation")
    p.add_argument("code")
    p.add_argument("--format", choices=["pd", "gauss", "braid"], default=None)
    p.add_argument("--strands", type=int, default=None)
    p.set_defaults(fn=_cmd_parse)

    p = sub.add_parser("alexander", help="print the normalized Alexander polynomial")
    _add_knot_input(p)
    p.set_defaults(fn=_cmd_alexander)

    p = sub.add_parser("det", help="print the knot determinant |Delta(-1)|")
    _add_knot_input(p)
    p.set_defaults(fn=_cmd_det)

    p = sub.add_parser("btspin", help="branched twist spin computations for one knot")
    _add_knot_input(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parity", choices=list(branched.PARITIES), default="any",
                   help="parity preference for beta (honored when |m| is odd)")
    p.add_argument("--show", choices=["presentation", "e1", "e1-brute", "e0"],
                   default="presentation")
    p.set_defaults(fn=_cmd_btspin)

    p = sub.add_parser("distinguish", help="apply the determinant criterion to two spins")
    p.add_argument("left")
    p.add_argument("m1", type=int)
    p.add_argument("n1", type=int)
    p.add_argument("right")
    p.add_argument("m2", type=int)
    p.add_argument("n2", type=int)
    p.add_argument("--table", default=None)
    p.set_defaults(fn=_cmd_distinguish)

    p = sub.add_parser("batch", help="run distinguish over a CSV of pairs")
    p.add_argument("--table", default=None)
    p.add_argument("--pairs", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_batch)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
