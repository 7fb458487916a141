"""Command-line interface.

Subcommands: gen, tutte, eval, invariant, potts, growth, verify.  Results go
to stdout (or --out) and are byte-identical across repeated invocations;
diagnostics go to stderr.  Exit codes: 0 success, 1 verification failure,
2 usage error, 3 resource cap exceeded, 4 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import checks, invariants, oracle, recursion
from .errors import CapExceeded, DomainError
from .lattices import LatticeFamily, build_lattice, to_edge_list

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_DOMAIN = 4


def _family(text: str) -> LatticeFamily:
    try:
        return LatticeFamily(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown family {text!r}; expected one of "
            + ", ".join(f.value for f in LatticeFamily)
        )


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an integer or p/q rational, got {text!r}")


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("generation must be nonnegative")
    return value


def _rational_value(value: Fraction) -> Union[str, dict]:
    if value.denominator == 1:
        return str(value.numerator)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _dumps(record: dict) -> str:
    return json.dumps(record, separators=(",", ":")) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fractal-tutte",
        description="Exact Tutte polynomials and invariants of self-similar lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_n: bool = True) -> None:
        p.add_argument("--family", type=_family, required=True)
        if with_n:
            p.add_argument("--n", type=_nonnegative, required=True)
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")

    p_gen = sub.add_parser("gen", help="emit a lattice generation as a graph")
    add_common(p_gen)
    p_gen.add_argument("--format", choices=("text", "json"), default="text")

    p_tutte = sub.add_parser("tutte", help="full Tutte polynomial of a generation")
    add_common(p_tutte)
    p_tutte.add_argument("--mode", choices=("recursive", "oracle"), default="recursive")
    p_tutte.add_argument("--format", choices=("json", "text"), default="json")
    p_tutte.add_argument("--symbolic-cap", type=int,
                         default=recursion.SYMBOLIC_GENERATION_CAP,
                         help="raise the symbolic generation guard explicitly")

    p_eval = sub.add_parser("eval", help="exact value at a rational point")
    add_common(p_eval)
    p_eval.add_argument("--x", type=_rational, required=True)
    p_eval.add_argument("--y", type=_rational, required=True)

    p_inv = sub.add_parser("invariant", help="closed-form invariant of a generation")
    add_common(p_inv)
    p_inv.add_argument(
        "--quantity",
        choices=("spanning-trees", "acyclic-root-connected",
                 "indegree-sequences", "bicycle-dimension"),
        required=True,
    )

    p_potts = sub.add_parser("potts", help="Potts partition function of a generation")
    add_common(p_potts)
    p_potts.add_argument("--q", type=_rational, required=True)
    p_potts.add_argument("--v", type=_rational, required=True)

    p_growth = sub.add_parser("growth", help="spanning-tree growth constant")
    p_growth.add_argument("--family", type=_family, required=True)
    p_growth.add_argument("--n-max", type=int, default=8)
    p_growth.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="run the oracle and closed-form gates")
    p_verify.add_argument("--n-max", type=int, default=checks.ORACLE_GATE_CAP)
    p_verify.add_argument("--out", default=None)
    return parser


def _cmd_gen(args) -> str:
    g = build_lattice(args.family, args.n)
    if args.format == "text":
        return to_edge_list(g)
    record = {
        "family": args.family.value,
        "n": args.n,
        "vertices": g.vertex_count,
        "special_x": g.special_x,
        "special_y": g.special_y,
        "edges": [[u, v] for u, v in g.edges],
    }
    return _dumps(record)


def _cmd_tutte(args) -> str:
    if args.mode == "recursive":
        poly = recursion.tutte_symbolic(args.family, args.n, args.symbolic_cap)
    else:
        if args.n > checks.ORACLE_GATE_CAP:
            raise CapExceeded(
                f"oracle mode is limited to generation {checks.ORACLE_GATE_CAP}"
            )
        poly = oracle.tutte_subgraph_expansion(build_lattice(args.family, args.n))
    if args.format == "json":
        return poly.to_json() + "\n"
    return str(poly) + "\n"


def _cmd_eval(args) -> str:
    value = recursion.tutte_eval(args.family, args.n, args.x, args.y)
    record = {
        "family": args.family.value,
        "n": args.n,
        "quantity": "tutte-eval",
        "x": str(args.x),
        "y": str(args.y),
        "value": _rational_value(value),
    }
    return _dumps(record)


def _cmd_invariant(args) -> str:
    family = args.family
    if args.quantity == "spanning-trees":
        value = invariants.spanning_tree_count(family, args.n)
    else:
        if family is not LatticeFamily.FRACTAL:
            raise DomainError(
                f"quantity {args.quantity!r} has a closed form only for the fractal family"
            )
        if args.quantity == "acyclic-root-connected":
            value = invariants.acyclic_root_connected_orientations(args.n)
        elif args.quantity == "indegree-sequences":
            value = invariants.strong_orientation_indegree_sequences(args.n)
        else:
            value = invariants.bicycle_space_dimension(args.n)
    record = {
        "family": family.value,
        "n": args.n,
        "quantity": args.quantity,
        "value": str(value),
    }
    return _dumps(record)


def _cmd_potts(args) -> str:
    params = invariants.PottsParams(args.q, args.v)
    value = invariants.potts_lattice(args.family, args.n, params)
    record = {
        "family": args.family.value,
        "n": args.n,
        "quantity": "potts-partition",
        "q": str(params.q),
        "v": str(params.v),
        "value": _rational_value(value),
    }
    return _dumps(record)


def _cmd_growth(args) -> str:
    growth = invariants.growth_constant(args.family, args.n_max)
    record = {
        "family": args.family.value,
        "quantity": "growth-constant",
        "n_max": args.n_max,
        "exact": growth.exact_form,
        "decimal": growth.decimal,
        "sequence": [[n, value] for n, value in growth.sequence],
    }
    return _dumps(record)


def _cmd_verify(args) -> tuple[str, int]:
    results = checks.run_gates(oracle_n_max=args.n_max)
    width = max(len(r.name) for r in results)
    lines = []
    failures = [r for r in results if not r.passed]
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name.ljust(width)}")
    lines.append(f"{len(results) - len(failures)}/{len(results)} gates passed")
    if failures:
        print(f"first failing gate: {failures[0].name}: {failures[0].detail}",
              file=sys.stderr)
    return "\n".join(lines) + "\n", EXIT_VERIFY_FAILED if failures else EXIT_OK


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not 0 <= args.n_max <= checks.ORACLE_GATE_CAP:
        parser.error(f"verify --n-max must lie in 0..{checks.ORACLE_GATE_CAP}")
    if args.command == "growth" and args.n_max < 1:
        parser.error("growth --n-max must be at least 1")

    handlers = {
        "gen": _cmd_gen,
        "tutte": _cmd_tutte,
        "eval": _cmd_eval,
        "invariant": _cmd_invariant,
        "potts": _cmd_potts,
        "growth": _cmd_growth,
    }
    try:
        if args.command == "verify":
            text, code = _cmd_verify(args)
        else:
            text, code = handlers[args.command](args), EXIT_OK
    except CapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    _write(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
