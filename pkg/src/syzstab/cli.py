"""Command-line interface: check families from files, emit the library's
constructed families, print moduli invariants, run searches, and draw
ASCII triangle diagrams of plane families.

Exit codes of ``check`` are the machine contract: 0 = stable,
2 = semistable only, 3 = unstable, 1 = input or usage error.  All JSON
output carries an explicit ``schema_version``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .criterion import (
    Stability,
    StabilityVerdict,
    SubsetWitness,
    check_brute_force,
    check_efficient,
    check_mixed_degrees,
)
from .errors import Error, FamilyFormatError, InvalidFamilyError, MismatchedVariablesError
from .families import generate
from .moduli import cohomology_table
from .monomial import MonomialFamily
from .search import DEFAULT_BUDGET, exhaustive_search

SCHEMA_VERSION = 1

MEMBER_GLYPH = "*"
EMPTY_GLYPH = "o"

_EXIT_BY_STATUS = {
    Stability.STABLE: 0,
    Stability.SEMISTABLE_ONLY: 2,
    Stability.UNSTABLE: 3,
}


# -- triangle rendering -------------------------------------------------

@dataclass(frozen=True)
class RenderedTriangle:
    """ASCII diagram of a degree-d plane family.

    Row l (l = 0 is the apex) shows the monomials X0^a X1^(l-a) X2^(d-l)
    with a descending left to right, so the bottom row runs X0^d ... X1^d
    and the apex is X2^d.  Members are drawn as '*', the rest as 'o'.
    """

    d: int
    member_count: int
    rows: tuple[str, ...]

    def to_text(self) -> str:
        return "\n".join(self.rows) + "\n"


def render_triangle(family: MonomialFamily) -> RenderedTriangle:
    """Draw a family of equal-degree monomials in three variables."""
    if family.var_count != 3:
        raise MismatchedVariablesError(
            f"triangle rendering needs exactly 3 variables, family has "
            f"{family.var_count}"
        )
    degrees = set(family.degrees)
    if len(degrees) != 1:
        raise InvalidFamilyError(
            "triangle rendering needs all members of one degree, got degrees "
            f"{sorted(degrees)}"
        )
    d = degrees.pop()
    members = {m.exponents for m in family.members}
    rows = []
    for l in range(d + 1):
        glyphs = [
            MEMBER_GLYPH if (a, l - a, d - l) in members else EMPTY_GLYPH
            for a in range(l, -1, -1)
        ]
        rows.append(" " * (d - l) + " ".join(glyphs))
    return RenderedTriangle(d=d, member_count=family.n, rows=tuple(rows))


def decode_triangle(text: str) -> MonomialFamily:
    """Parse a triangle diagram back into the family it depicts."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise FamilyFormatError("empty triangle")
    d = len(lines) - 1
    members = []
    for l, line in enumerate(lines):
        glyphs = line.split()
        if len(glyphs) != l + 1:
            raise FamilyFormatError(
                f"triangle row {l}: expected {l + 1} symbols, found {len(glyphs)}"
            )
        for slot, glyph in enumerate(glyphs):
            if glyph not in (MEMBER_GLYPH, EMPTY_GLYPH):
                raise FamilyFormatError(
                    f"triangle row {l}: unexpected symbol {glyph!r}"
                )
            if glyph == MEMBER_GLYPH:
                a = l - slot
                members.append((a, l - a, d - l))
    return MonomialFamily.of(members, var_count=3)


# -- shared helpers -----------------------------------------------------

def _load_family(path: Optional[str], inline: Optional[str]) -> MonomialFamily:
    if inline is not None:
        parts = [p.strip() for p in inline.replace(";", ",").split(",") if p.strip()]
        return MonomialFamily.from_text("\n".join(parts))
    if path == "-":
        return MonomialFamily.from_text(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return MonomialFamily.from_text(fh.read())
    except OSError as exc:
        raise FamilyFormatError(f"cannot read {path}: {exc}") from exc


def _witness_text(
    family: MonomialFamily, label: str, witness: SubsetWitness
) -> str:
    monomials = ", ".join(str(family.members[i]) for i in witness.indices)
    relation = ">" if label == "violation" else "="
    return (
        f"{label}: indices {list(witness.indices)} = {{{monomials}}}; "
        f"gcd {witness.gcd}; quotient {witness.quotient} {relation} "
        f"slope {witness.family_slope}"
    )


def _print_verdict(family: MonomialFamily, verdict: StabilityVerdict) -> None:
    print(f"status: {verdict.status.value}")
    print(f"slope: {verdict.family_slope}")
    if verdict.violation is not None:
        print(_witness_text(family, "violation", verdict.violation))
    if verdict.equality_witness is not None:
        print(_witness_text(family, "equality", verdict.equality_witness))


def _emit_json(payload: dict) -> None:
    print(json.dumps({"schema_version": SCHEMA_VERSION, **payload}))


# -- subcommands --------------------------------------------------------

def cmd_check(args: argparse.Namespace) -> int:
    family = _load_family(args.path, args.inline)
    if args.brute:
        verdict = check_brute_force(family)
    elif args.mixed:
        verdict = check_mixed_degrees(family)
    else:
        verdict = check_efficient(family)
    if verdict.criterion_value_only:
        print(
            "warning: family is not m-primary; reporting the slope criterion "
            "value only, with no bundle interpretation",
            file=sys.stderr,
        )
    if args.json:
        _emit_json(verdict.to_json_dict())
    else:
        _print_verdict(family, verdict)
    return _EXIT_BY_STATUS[verdict.status]


def cmd_generate(args: argparse.Namespace) -> int:
    family, recipe = generate(args.N, args.n, args.d)
    verdict = check_efficient(family) if args.check else None
    triangle = render_triangle(family) if args.render else None
    if args.json:
        payload = {"family": family.to_json_dict(), "recipe": recipe.to_json_dict()}
        if verdict is not None:
            payload["verdict"] = verdict.to_json_dict()
        if triangle is not None:
            payload["triangle"] = list(triangle.rows)
        _emit_json(payload)
        return 0
    sys.stdout.write(family.to_text())
    if verdict is not None:
        _print_verdict(family, verdict)
    if triangle is not None:
        sys.stdout.write(triangle.to_text())
    return 0


def cmd_moduli(args: argparse.Namespace) -> int:
    report = cohomology_table(args.N, args.n, args.d)
    if args.json:
        _emit_json(report.to_json_dict())
        return 0
    print(f"N: {report.N}")
    print(f"n: {report.n}")
    print(f"d: {report.d}")
    print(f"rank: {report.rank}")
    print(f"c1: {report.c1}")
    print(f"slope: {report.slope}")
    print(f"h0: {report.h0}")
    print(f"h1: {report.h1}")
    print(f"h2: {report.h2}")
    print(f"h3: {report.h3}")
    print(f"h1_twist: {report.h1_twist}")
    print(f"ext1: {report.ext1}")
    print(f"component_dim: {report.component_dim}")
    return 0


def _default_jobs() -> Optional[int]:
    raw = os.environ.get("SYZSTAB_JOBS")
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise Error(f"SYZSTAB_JOBS must be an integer, got {raw!r}") from exc


def cmd_search(args: argparse.Namespace) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()

    def emit(record: dict) -> None:
        _emit_json(record)
        sys.stdout.flush()

    report = exhaustive_search(
        args.N,
        args.d,
        args.n,
        budget=args.budget,
        progress=emit,
        resume_token=args.resume,
        jobs=jobs,
    )
    emit({"event": "result", **report.to_json_dict()})
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    family = _load_family(args.path, None)
    triangle = render_triangle(family)
    if args.json:
        _emit_json(
            {
                "d": triangle.d,
                "member_count": triangle.member_count,
                "triangle": list(triangle.rows),
            }
        )
        return 0
    sys.stdout.write(triangle.to_text())
    return 0


# -- parser -------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with code 1.

    The default argparse exit code 2 is taken: for ``check`` it means a
    merely semistable family.
    """

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="syzstab",
        description=(
            "Stability checker and constructor for syzygy bundles of "
            "m-primary monomial ideals."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_check = sub.add_parser(
        "check",
        help="decide (semi)stability of a family read from a file or '-'",
    )
    src = p_check.add_mutually_exclusive_group(required=True)
    src.add_argument("path", nargs="?", help="family file, or '-' for stdin")
    src.add_argument(
        "--inline",
        metavar="MEMBERS",
        help="comma-separated members, e.g. 'x0^5, x1^5, x2^5, x0^4 x1'",
    )
    mode = p_check.add_mutually_exclusive_group()
    mode.add_argument(
        "--brute", action="store_true", help="use the exponential subset scan"
    )
    mode.add_argument(
        "--mixed",
        action="store_true",
        help="force the mixed-degree checker even for equal degrees",
    )
    p_check.add_argument("--json", action="store_true", help="machine output")
    p_check.set_defaults(func=cmd_check)

    p_gen = sub.add_parser(
        "generate", help="construct a (semi)stable family for (N, n, d)"
    )
    p_gen.add_argument("N", type=int, help="projective dimension (N+1 variables)")
    p_gen.add_argument("n", type=int, help="number of monomials")
    p_gen.add_argument("d", type=int, help="common degree")
    p_gen.add_argument(
        "--render",
        action="store_true",
        help="append the triangle diagram (3 variables only)",
    )
    p_gen.add_argument(
        "--check", action="store_true", help="append the checker's verdict"
    )
    p_gen.add_argument("--json", action="store_true", help="machine output")
    p_gen.set_defaults(func=cmd_generate)

    p_mod = sub.add_parser(
        "moduli", help="cohomology and moduli component dimension for (N, n, d)"
    )
    p_mod.add_argument("N", type=int, help="projective dimension")
    p_mod.add_argument("n", type=int, help="number of forms")
    p_mod.add_argument("d", type=int, help="common degree")
    p_mod.add_argument("--json", action="store_true", help="machine output")
    p_mod.set_defaults(func=cmd_moduli)

    p_search = sub.add_parser(
        "search",
        help="exhaust m-primary families for (N, d, n), up to symmetry",
    )
    p_search.add_argument("N", type=int, help="projective dimension")
    p_search.add_argument("d", type=int, help="common degree")
    p_search.add_argument("n", type=int, help="number of monomials")
    p_search.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="max families to enumerate (default %(default)s)",
    )
    p_search.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="parallel partitions (default: SYZSTAB_JOBS or serial)",
    )
    p_search.add_argument(
        "--resume",
        metavar="TOKEN",
        default=None,
        help="resume token from an earlier budget-truncated run",
    )
    p_search.set_defaults(func=cmd_search)

    p_render = sub.add_parser(
        "render", help="draw the triangle diagram of a plane family"
    )
    p_render.add_argument("path", help="family file, or '-' for stdin")
    p_render.add_argument("--json", action="store_true", help="machine output")
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits on usage errors and --help; keep main() returning.
        return int(exc.code or 0)
    try:
        return args.func(args)
    except Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
