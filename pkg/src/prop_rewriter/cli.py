"""``prop-rewriter``: normalize, compare, enumerate, verify and draw.

Exit codes: 0 success or equal, 1 unequal or a failing suite, 2 bad
input (parse errors, unknown suite, unsupported algebra), 3 no canonical
form (braid normalization), 4 resource bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from .core import Element, Kind
from .diagram import render
from .expr import ParseError, format_element, parse
from .groups import all_perms, braid_equal, BraidWord, chi_word_of_perm, Permutation, sym_normalize
from .laws import DEFAULT, MUTATIONS
from .leibniz import leib_basis, leib_normalize, leibop_normalize
from .oracle import BoundExceeded, LEIB, LEIBOP, quotient_dimension_oracle
from .rewrite import enumerate_basis, mag_normalize, simp_normalize, symmag_normalize, symsimp_normalize
from .verify import SUITES, run_suite

ALGEBRAS = ("mag", "simp", "braid", "sym", "symmag", "symsimp", "leib", "leibop", "free")

OK, UNEQUAL, BAD_INPUT, NO_CANONICAL, TOO_BIG = 0, 1, 2, 3, 4

# largest target level per algebra for basis/dim, and per suite for verify
BASIS_BOUNDS = {"mag": 8, "simp": 8, "sym": 6, "symmag": 5, "symsimp": 5, "leib": 5, "leibop": 5}
SUITE_BOUNDS = {
    "zeta-braid": 6, "zeta-simp-sym": 6, "transpositions": 4, "alpha": 5,
    "rho": 5, "main-theorem": 5, "delta-plus": 6,
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _bound(default: int) -> int:
    env = os.environ.get("PROP_REWRITER_MAX_LEVEL")
    if env is None:
        return default
    try:
        return int(env)
    except ValueError:
        raise CliError(f"PROP_REWRITER_MAX_LEVEL must be an integer, got {env!r}", BAD_INPUT)


def _parse(text: str) -> Element:
    try:
        return parse(text)
    except ParseError as e:
        raise CliError(f"parse error: {e}", BAD_INPUT)


def _braid_classes(x: Element) -> list[tuple[BraidWord, object]]:
    classes: list[list] = []
    for w, c in x.terms.items():
        if any(g.kind != Kind.CHI for g in w.gens):
            raise CliError("braid takes crossing-only words", BAD_INPUT)
        bw = BraidWord(w.source, tuple(g.index for g in w.gens))
        for entry in classes:
            if entry[0].level == bw.level and braid_equal(entry[0], bw):
                entry[1] += c
                break
        else:
            classes.append([bw, c])
    return [(b, c) for b, c in classes if c]


def normalize(algebra: str, x: Element) -> Element:
    if algebra == "braid":
        raise CliError("no canonical form for braid; use equal", NO_CANONICAL)
    table = {
        "free": lambda e: e,
        "mag": mag_normalize,
        "simp": simp_normalize,
        "sym": sym_normalize,
        "symmag": symmag_normalize,
        "symsimp": symsimp_normalize,
        "leib": leib_normalize,
        "leibop": leibop_normalize,
    }
    try:
        return table[algebra](x)
    except ValueError as e:
        raise CliError(str(e), BAD_INPUT)


def equal(algebra: str, x: Element, y: Element) -> bool:
    if algebra == "braid":
        return not _braid_classes(x - y)
    return not normalize(algebra, x - y)


def _check_degrees(algebra: str, source: int, target: int) -> None:
    if algebra in ("free", "braid"):
        raise CliError(f"{algebra} has no finite basis at a bidegree", BAD_INPUT)
    if source < 0 or target < source:
        raise CliError("need 0 <= source <= target", BAD_INPUT)
    limit = _bound(BASIS_BOUNDS[algebra])
    if target > limit:
        raise CliError(f"target level {target} exceeds the bound {limit} for {algebra}", TOO_BIG)


def basis(algebra: str, source: int, target: int) -> list[str]:
    _check_degrees(algebra, source, target)
    if algebra == "sym":
        if source != target:
            return []
        return [format_element(Element.word(chi_word_of_perm(Permutation(p)))) for p in all_perms(target)]
    if algebra == "leib":
        words = leib_basis(source, target)
    elif algebra == "leibop":
        words = [p.to_word() for p in enumerate_basis("symsimp", source, target)]
    else:
        items = enumerate_basis(algebra, source, target)
        words = [getattr(w, "to_word", lambda w=w: w)() for w in items]
    return [format_element(Element.word(w)) for w in words]


def dim(algebra: str, source: int, target: int) -> int:
    _check_degrees(algebra, source, target)
    if algebra in (LEIB, LEIBOP):
        try:
            return quotient_dimension_oracle(algebra, source, target, t_max=None)
        except BoundExceeded as e:
            raise CliError(str(e), TOO_BIG)
    if algebra == "sym":
        return factorial(target + 1) if source == target else 0
    return len(enumerate_basis(algebra, source, target))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="prop-rewriter", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def algebra_flag(p, default="free"):
        p.add_argument("--algebra", choices=ALGEBRAS, default=default)

    p = sub.add_parser("normalize", help="print the canonical form")
    algebra_flag(p)
    p.add_argument("expr")

    p = sub.add_parser("equal", help="exit 0 when equal, 1 otherwise")
    algebra_flag(p)
    p.add_argument("expr1")
    p.add_argument("expr2")

    for name in ("basis", "dim"):
        p = sub.add_parser(name, help=f"{name} at a bidegree")
        algebra_flag(p, "mag")
        p.add_argument("--source", type=int, required=True)
        p.add_argument("--target", type=int, required=True)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--json", metavar="PATH", default=None)
    p.add_argument("--mutate", choices=sorted(MUTATIONS), default=None, help=argparse.SUPPRESS)

    p = sub.add_parser("diagram", help="draw strand diagrams")
    p.add_argument("expr")
    p.add_argument("--format", choices=("svg", "tikz"), default="svg")
    p.add_argument("--out", default=None)
    return ap


def _verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise CliError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES + ('all',))}", BAD_INPUT)
    names = SUITES if args.suite == "all" else (args.suite,)
    if args.max_level is not None:
        for name in names:
            limit = _bound(SUITE_BOUNDS[name])
            if args.max_level > limit:
                raise CliError(f"--max-level {args.max_level} exceeds the bound {limit} for {name}", TOO_BIG)
    laws = MUTATIONS[args.mutate] if args.mutate else DEFAULT
    try:
        reports = run_suite(args.suite, args.max_level, laws)
    except BoundExceeded as e:
        raise CliError(str(e), TOO_BIG)
    for r in reports:
        bad = r.failures()
        label = r.suite + (f" [{r.bounds['law']}]" if "law" in r.bounds else "")
        status = "PASS" if r.passed else "FAIL"
        print(f"{label}: {status} ({len(r.checks) - len(bad)}/{len(r.checks)} checks, {r.elapsed_ms:.0f} ms)")
        for c in bad[:3]:
            print(f"  {c.name} {json.dumps(c.params)}: {c.counterexample[0]}  !=  {c.counterexample[1]}")
    if args.json:
        payload = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
        try:
            with open(args.json, "w") as fh:
                json.dump(payload, fh, indent=2)
        except OSError as e:
            raise CliError(f"cannot write {args.json}: {e}", BAD_INPUT)
    return OK if all(r.passed for r in reports) else UNEQUAL


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "normalize":
        print(format_element(normalize(args.algebra, _parse(args.expr))))
        return OK
    if args.command == "equal":
        same = equal(args.algebra, _parse(args.expr1), _parse(args.expr2))
        print("equal" if same else "unequal")
        return OK if same else UNEQUAL
    if args.command == "basis":
        for line in basis(args.algebra, args.source, args.target):
            print(line)
        return OK
    if args.command == "dim":
        print(dim(args.algebra, args.source, args.target))
        return OK
    if args.command == "verify":
        return _verify(args)
    text = render(_parse(args.expr), args.format)
    if args.out is None:
        sys.stdout.write(text)
        return OK
    try:
        with open(args.out, "w") as fh:
            fh.write(text)
    except OSError as e:
        raise CliError(f"cannot write {args.out}: {e}", BAD_INPUT)
    return OK


def main(argv: list[str] | None = None) -> None:
    try:
        code = run(argv)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        code = e.code
    sys.exit(code)


if __name__ == "__main__":
    main()
