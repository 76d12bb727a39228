"""Command-line interface with text and JSON output.

Exit codes: 0 = answered (including proven emptiness), 1 = no solution found
within the search bound (existence undecided), 2 = usage or domain error.

JSON documents serialize every integer as a decimal string so arbitrarily
large values survive any consumer; keys are emitted in sorted order so that
re-serializing a parsed document reproduces the bytes exactly.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice
from typing import Iterable

from .core import (
    Completeness,
    Domain,
    Equation,
    FamilyDescriptor,
    Line,
    SolutionKind,
    SolutionPair,
    SolutionSet,
)
from .oracle import brute_force
from .pell import cf_sqrt, pell_stream
from .solver import DEFAULT_SEARCH_BOUND, classify, normalize, solve

SCHEMA_VERSION = "1"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diopell",
        description="Exact solver for a*x^2 - b*y^2 = c over the integers (z) or naturals (n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_equation_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--a", type=int, required=True, help="coefficient of x^2")
        p.add_argument("--b", type=int, required=True, help="coefficient of y^2 (subtracted)")
        p.add_argument("--c", type=int, required=True, help="right-hand side")

    p_solve = sub.add_parser("solve", help="solve a*x^2 - b*y^2 = c")
    add_equation_args(p_solve)
    p_solve.add_argument("--domain", choices=["z", "n"], default="z")
    p_solve.add_argument("--family-terms", type=int, default=5, help="terms to print per infinite family")
    p_solve.add_argument("--search-bound", type=int, default=DEFAULT_SEARCH_BOUND)
    p_solve.add_argument("--format", choices=["text", "json"], default="text")

    p_pell = sub.add_parser("pell", help="solutions of u^2 - d*v^2 = 1")
    p_pell.add_argument("--d", type=int, required=True)
    p_pell.add_argument("--count", type=int, default=5)
    p_pell.add_argument("--format", choices=["text", "json"], default="text")

    p_cf = sub.add_parser("cf", help="periodic continued fraction of sqrt(d)")
    p_cf.add_argument("--d", type=int, required=True)
    p_cf.add_argument("--format", choices=["text", "json"], default="text")

    p_classify = sub.add_parser("classify", help="normalize and classify an equation")
    add_equation_args(p_classify)
    p_classify.add_argument("--format", choices=["text", "json"], default="text")

    p_oracle = sub.add_parser("oracle", help="brute-force scan for cross-checking")
    add_equation_args(p_oracle)
    p_oracle.add_argument("--bound", type=int, required=True)
    p_oracle.add_argument("--domain", choices=["z", "n"], default="z")
    p_oracle.add_argument("--format", choices=["text", "json"], default="text")

    return parser


def _s(n: int) -> str:
    return str(n)


def _pair_doc(pair: SolutionPair) -> dict:
    return {"x": _s(pair.x), "y": _s(pair.y)}


def _verified_pair(eq: Equation, pair: SolutionPair) -> SolutionPair:
    # belt and braces: nothing leaves the renderer without solving the input
    if not eq.is_solution(pair):
        raise AssertionError(f"internal error: {tuple(pair)} fails {eq}")
    return pair


def _family_doc(eq: Equation, family: FamilyDescriptor, term_count: int) -> dict:
    terms = [_verified_pair(eq, t) for t in family.terms(term_count)]
    return {
        "kind": family.kind.value,
        "seed": _pair_doc(family.seed),
        "pell_modulus": _s(family.pell_modulus),
        "fundamental": {"u": _s(family.fundamental[0]), "v": _s(family.fundamental[1])},
        "terms": [_pair_doc(t) for t in terms],
    }


def _line_doc(line: Line) -> dict:
    return {"base": _pair_doc(line.base), "direction": _pair_doc(line.direction)}


def _result_doc(eq: Equation, result: SolutionSet, term_count: int) -> dict:
    doc = {
        "variant": result.kind.value,
        "solutions": [_pair_doc(_verified_pair(eq, p)) for p in result.solutions],
        "families": [_family_doc(eq, f, term_count) for f in result.families],
        "lines": [_line_doc(line) for line in result.lines],
    }
    if result.reason is not None:
        doc["reason"] = result.reason
    if result.description is not None:
        doc["description"] = result.description
    return doc


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, separators=(",", ":")))


def _render_pairs(pairs: Iterable[SolutionPair]) -> str:
    return ", ".join(f"({p.x}, {p.y})" for p in pairs)


def _cmd_solve(args) -> int:
    eq = Equation(args.a, args.b, args.c)
    domain = Domain(args.domain)
    result = solve(eq, domain, search_bound=args.search_bound)
    code = 1 if result.completeness is Completeness.UNKNOWN_WITHIN_BOUND else 0

    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "solve",
            "inputs": {
                "a": _s(eq.a),
                "b": _s(eq.b),
                "c": _s(eq.c),
                "domain": domain.value,
                "family_terms": _s(args.family_terms),
                "search_bound": _s(args.search_bound),
            },
            "result": _result_doc(eq, result, args.family_terms),
            "completeness": result.completeness.value,
        }
        _emit_json(doc)
        return code

    print(f"equation: {eq}  (domain {domain.value})")
    if result.kind is SolutionKind.EMPTY:
        if result.completeness is Completeness.COMPLETE:
            print(f"no solutions: {result.reason}")
        else:
            print(f"unknown: {result.reason}")
    elif result.kind is SolutionKind.FINITE:
        print(f"solutions ({len(result.solutions)}, complete):")
        for pair in result.solutions:
            _verified_pair(eq, pair)
            print(f"  ({pair.x}, {pair.y})")
    elif result.kind is SolutionKind.DEGENERATE_LINE:
        print(f"solution lines: {result.description}")
    else:
        print(f"{len(result.families)} infinite solution family(ies); the list may be incomplete")
        if result.solutions:
            print(f"sporadic solutions: {_render_pairs(result.solutions)}")
        for i, family in enumerate(result.families, start=1):
            u1, v1 = family.fundamental
            print(
                f"family {i} ({family.kind.value}): seed ({family.seed.x}, {family.seed.y}), "
                f"pell modulus {family.pell_modulus}, fundamental (u, v) = ({u1}, {v1})"
            )
            terms = [_verified_pair(eq, t) for t in family.terms(args.family_terms)]
            print(f"  first terms: {_render_pairs(terms)}")
    print(f"completeness: {result.completeness.value}")
    return code


def _cmd_pell(args) -> int:
    solutions = list(islice(pell_stream(args.d), max(args.count, 0)))
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "pell",
            "inputs": {"d": _s(args.d), "count": _s(args.count)},
            "result": {
                "solutions": [
                    {"index": _s(s.index), "u": _s(s.u), "v": _s(s.v)} for s in solutions
                ]
            },
        }
        _emit_json(doc)
        return 0
    print(f"u^2 - {args.d}v^2 = 1")
    for s in solutions:
        print(f"  {s.index}: ({s.u}, {s.v})")
    return 0


def _cmd_cf(args) -> int:
    expansion = cf_sqrt(args.d)
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "cf",
            "inputs": {"d": _s(args.d)},
            "result": {
                "a0": _s(expansion.a0),
                "period": [_s(a) for a in expansion.period],
            },
        }
        _emit_json(doc)
        return 0
    body = ", ".join(str(a) for a in expansion.period)
    print(f"sqrt({args.d}) = [{expansion.a0}; {body}] (period length {len(expansion.period)})")
    return 0


def _cmd_classify(args) -> int:
    eq = Equation(args.a, args.b, args.c)
    norm = normalize(eq)
    classification = classify(norm.equation)
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "classify",
            "inputs": {"a": _s(eq.a), "b": _s(eq.b), "c": _s(eq.c)},
            "result": {
                "normalized": {
                    "a": _s(norm.equation.a),
                    "b": _s(norm.equation.b),
                    "c": _s(norm.equation.c),
                },
                "swap_xy": norm.swap_xy,
                "negate_applied": norm.negate_applied,
                "class": classification.kind.value,
                "k": None if classification.k is None else _s(classification.k),
                "pell_modulus": None
                if classification.pell_modulus is None
                else _s(classification.pell_modulus),
            },
        }
        _emit_json(doc)
        return 0
    print(f"input:      {eq}")
    flags = []
    if norm.negate_applied:
        flags.append("negated")
    if norm.swap_xy:
        flags.append("variables swapped")
    note = f" ({', '.join(flags)})" if flags else ""
    print(f"normalized: {norm.equation}{note}")
    print(f"class:      {classification.kind.value}")
    if classification.k is not None:
        print(f"k:          {classification.k} (a*b = k^2)")
    if classification.pell_modulus is not None:
        print(f"pell modulus: {classification.pell_modulus}")
    return 0


def _cmd_oracle(args) -> int:
    eq = Equation(args.a, args.b, args.c)
    domain = Domain(args.domain)
    pairs = brute_force(eq, args.bound, domain)
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "oracle",
            "inputs": {
                "a": _s(eq.a),
                "b": _s(eq.b),
                "c": _s(eq.c),
                "bound": _s(args.bound),
                "domain": domain.value,
            },
            "result": {"solutions": [_pair_doc(p) for p in pairs]},
        }
        _emit_json(doc)
        return 0
    print(f"brute force over |x|, |y| <= {args.bound} (domain {domain.value}): {len(pairs)} solutions")
    if pairs:
        print(f"  {_render_pairs(pairs)}")
    return 0


_HANDLERS = {
    "solve": _cmd_solve,
    "pell": _cmd_pell,
    "cf": _cmd_cf,
    "classify": _cmd_classify,
    "oracle": _cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
