"""Command-line front end.

Exit codes: 0 success (boolean answers are printed, not encoded in the status),
1 a check reported failures, 2 malformed input, 3 precondition violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import crystal, torsion
from .errors import ParseError, PreconditionError, StrandMismatchError
from .perms import Permutation, adjacent_lift
from .selftest import DEFAULT_SEED, run_selftest
from .uvb import check_relations, dumps, normal_form
from .uvp import format_pure, pure_to_records
from .words import BraidWord, infer_strands, parse

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


def _infer(text: str) -> int:
    text = text.strip()
    if text.startswith("["):
        return Permutation.parse(text).n
    return infer_strands(text)


def _element(text: str, n: int) -> BraidWord:
    """A braid word, or a permutation in one-line notation standing for its rho-lift."""
    text = text.strip()
    if text.startswith("["):
        s = Permutation.parse(text)
        if s.n != n:
            raise ParseError(f"permutation {text} has degree {s.n}, expected {n}")
        return adjacent_lift(s)
    return parse(text, n)


def _words(texts: Sequence[str], n: Optional[int]) -> list[BraidWord]:
    if n is None:
        n = max(_infer(t) for t in texts)
    return [_element(t, n) for t in texts]


def _bool(value: bool) -> str:
    return "true" if value else "false"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="strand count (inferred from the words if omitted)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized commands")

    parser = argparse.ArgumentParser(prog="uvbraid", description="Exact computations in unrestricted virtual braid groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    one = [
        ("nf", "normal form of a word"),
        ("order", "order of an element (or 'infinite')"),
        ("conjugate-to-perm", "pure conjugator taking a torsion element to its permutation"),
        ("in-im-eta", "membership in the image of B_n"),
        ("project", "image in the quotient by the normal closure of H_n"),
        ("in-cn", "membership in C_n"),
        ("writhe", "sigma exponent sum"),
    ]
    for name, help_text in one:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("word")
    for name, help_text in [("eq", "equality in UVB_n"), ("crystal-eq", "equality in B_n/[P_n,P_n]")]:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("word1")
        p.add_argument("word2")
    sub.add_parser("check-relations", parents=[common], help="verify every defining relation (n=2..6 if --n omitted)")
    sub.add_parser("selftest", parents=[common], help="presentation checks and seeded property suites")
    return parser


def _dispatch(args: argparse.Namespace) -> tuple[int, str]:
    cmd = args.command
    as_json = args.json

    if cmd in ("eq", "crystal-eq"):
        w1, w2 = _words([args.word1, args.word2], args.n)
        result = crystal.crystal_equals(w1, w2) if cmd == "crystal-eq" else normal_form(w1) == normal_form(w2)
        return EXIT_OK, _bool(result)

    if cmd == "check-relations":
        ns = [args.n] if args.n is not None else list(range(2, 7))
        instances = []
        for n in ns:
            instances.extend((n, inst) for inst in check_relations(n))
        ok = all(inst.passed for _, inst in instances)
        if as_json:
            out = dumps([
                {"n": n, "family": inst.family, "indices": list(inst.indices),
                 "lhs": str(inst.lhs), "rhs": str(inst.rhs), "passed": inst.passed}
                for n, inst in instances
            ])
        else:
            lines = [f"n={n} {inst}" for n, inst in instances]
            lines.append(f"{sum(i.passed for _, i in instances)}/{len(instances)} instances pass")
            out = "\n".join(lines)
        return (EXIT_OK if ok else EXIT_FAILED), out

    if cmd == "selftest":
        results = run_selftest(args.seed)
        ok = all(r.passed for r in results)
        if as_json:
            out = dumps({"seed": args.seed, "passed": ok, "properties": [r.to_dict() for r in results]})
        else:
            out = "\n".join([str(r) for r in results] + [f"seed {args.seed}: {'all properties pass' if ok else 'FAILURES'}"])
        return (EXIT_OK if ok else EXIT_FAILED), out

    (w,) = _words([args.word], args.n)
    if cmd == "writhe":
        return EXIT_OK, str(crystal.writhe(w))
    v = normal_form(w)
    if cmd == "nf":
        return EXIT_OK, dumps(v.to_dict()) if as_json else str(v)
    if cmd == "order":
        order = torsion.order_of(v)
        if as_json:
            return EXIT_OK, dumps({"order": order})
        return EXIT_OK, "infinite" if order is None else str(order)
    if cmd == "conjugate-to-perm":
        conj = torsion.torsion_conjugator(v)
        if as_json:
            return EXIT_OK, dumps({"conjugator": pure_to_records(conj), "perm": list(v.perm.images)})
        return EXIT_OK, f"conjugator: {format_pure(conj)}\nperm: {v.perm}"
    if cmd == "in-im-eta":
        return EXIT_OK, _bool(crystal.in_image_eta(v))
    if cmd == "in-cn":
        return EXIT_OK, _bool(crystal.in_cn(v))
    if cmd == "project":
        q = crystal.project_hn_quotient(v)
        return EXIT_OK, dumps(q.to_dict()) if as_json else str(q)
    raise AssertionError(f"unhandled command {cmd}")


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    """Run one CLI invocation; returns (exit code, standard output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"uvbraid: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE, ""
    except (PreconditionError, StrandMismatchError) as exc:
        print(f"uvbraid: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION, ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out = run_command(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
