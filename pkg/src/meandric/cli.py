"""Command-line interface.

Exit codes: 0 success, 1 invalid input or usage, 2 ``check`` answered "not
meandric", 3 ``compare`` found a divergence between criterion and oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import lru_cache
from pathlib import Path

from . import construct, gaussdiag, meander, permcore
from .errors import OrderCapError, ValidationError
from .permcore import Permutation
from .render import RenderSpec, render_meander

EXIT_OK, EXIT_INVALID, EXIT_NOT_MEANDRIC, EXIT_DIVERGED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _perm(args) -> Permutation:
    if args.cycle:
        body = args.perm.strip().strip("()[]")
        try:
            values = [int(t) for t in body.replace(" ", "").split(",") if t]
        except ValueError:
            raise ValidationError(f"cannot parse cyclic word {args.perm!r}") from None
        return Permutation.from_cycle(values)
    return Permutation.parse(args.perm)


def _verdict(flag: bool) -> str:
    return "meandric" if flag else "not meandric"


def cmd_check(args) -> int:
    mu = _perm(args)
    mode = args.mode
    oracle = meander.oracle_is_meandric(mu)
    if mode == "oracle":
        print(f"oracle: {_verdict(oracle)}")
        return EXIT_OK if oracle else EXIT_NOT_MEANDRIC
    if mode in ("corrected", "strict"):
        key = "corrected" if mode == "corrected" else "strict_paper"
        ok = meander.criterion_is_meandric(mu, key)
        print(f"criterion({mode}): {_verdict(ok)}")
        return EXIT_OK if ok else EXIT_NOT_MEANDRIC
    print(f"oracle: {_verdict(oracle)}")
    if mu.n % 2:
        print("criterion(corrected): undefined for odd size")
        print("criterion(strict): undefined for odd size")
    else:
        corrected = meander.criterion_is_meandric(mu, "corrected")
        strict = meander.criterion_is_meandric(mu, "strict_paper")
        print(f"criterion(corrected): {_verdict(corrected)}")
        print(f"criterion(strict): {_verdict(strict)}; see errata")
    return EXIT_OK if oracle else EXIT_NOT_MEANDRIC


def cmd_rsets(args) -> int:
    pi = _perm(args)
    r = permcore.inversion_set(pi)
    nr = permcore.co_inversion_set(pi)
    d = permcore.delta(pi.n)
    if args.json:
        print(json.dumps({"R": json.loads(r.to_json()), "notR": json.loads(nr.to_json()), "Delta": json.loads(d.to_json())}))
    else:
        print(f"R = {r}")
        print(f"¬R = {nr}")
        print(f"Δ = {d}")
    return EXIT_OK


def cmd_gauss_code(args) -> int:
    cd = gaussdiag.diagram_of_permutation(_perm(args))
    print(cd.to_json() if args.json else str(cd))
    return EXIT_OK


def cmd_realizable(args) -> int:
    body = args.word.strip().strip("()[]")
    try:
        word = [int(t) for t in body.replace(" ", "").split(",") if t]
    except ValueError:
        raise ValidationError(f"cannot parse word {args.word!r}") from None
    verdict = gaussdiag.is_realizable(gaussdiag.make_chord_diagram(word))
    if verdict.realizable:
        d = ",".join(map(str, verdict.witness))
        print(f"realizable; witness D = diag({d})")
    else:
        print(f"not realizable: {verdict.violation}")
    print(verdict.to_json())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    for mu in meander.enumerate_meanders(args.order):
        print(mu)
    return EXIT_OK


def cmd_count(args) -> int:
    print(meander.count_meanders(args.order))
    return EXIT_OK


def cmd_compare(args) -> int:
    report = meander.compare_criterion_oracle(args.order, workers=args.workers)
    text = report.to_json()
    if args.out:
        Path(args.out).write_text(text + "\n")
        print(
            f"order {report.order}: oracle {report.oracle_count}, criterion {report.criterion_count}, "
            f"missed {len(report.missed)}, extra {len(report.extra)}; report written to {args.out}"
        )
    else:
        print(text)
    return EXIT_DIVERGED if report.diverged else EXIT_OK


def cmd_construct(args) -> int:
    trace = [] if args.trace else None
    found = list(construct.algorithm1_generate(args.N, exhaustive=args.all, trace=trace))
    if trace is not None:
        for event in trace:
            print("# " + construct.format_event(event))
    for mu in found:
        print(mu)
    if args.out:
        Path(args.out).write_text(construct.comparison_json(args.N) + "\n")
    return EXIT_OK


def cmd_render(args) -> int:
    spec = RenderSpec(args.format, args.width, args.height, args.spacing)
    text = render_meander(_perm(args), spec)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


@lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="meandric", description="Meandric permutations, Gauss diagrams and GF(2) criteria.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def perm_arg(sp):
        sp.add_argument("perm", help="one-line word such as 1,4,3,2,5,6")
        sp.add_argument("--cycle", action="store_true", help="read PERM as a cyclic order and rotate it to start at 1")

    sp = sub.add_parser("check", help="decide whether a permutation is meandric")
    perm_arg(sp)
    sp.add_argument("--mode", choices=["corrected", "strict", "oracle", "all"], default="all")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("rsets", help="print the inversion set, its complement and the full pair set")
    perm_arg(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_rsets)

    sp = sub.add_parser("gauss-code", help="print the Gauss word of the permutation's chord diagram")
    perm_arg(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_gauss_code)

    sp = sub.add_parser("realizable", help="realizability verdict and diagonal witness for a Gauss word")
    sp.add_argument("word", help="double-occurrence word such as 1,2,3,1,2,3")
    sp.set_defaults(func=cmd_realizable)

    sp = sub.add_parser("enumerate", help="list all meandric permutations of an order")
    sp.add_argument("order", type=int)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("count", help="count meandric permutations of an order")
    sp.add_argument("order", type=int)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("compare", help="audit the matrix criterion against the oracle on all permutations")
    sp.add_argument("order", type=int)
    sp.add_argument("--out", help="write the divergence report JSON here")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("construct", help="run the parity-driven backtracking constructor")
    sp.add_argument("N", type=int)
    sp.add_argument("--all", action="store_true", help="emit every sequence, not just the first")
    sp.add_argument("--trace", action="store_true", help="print every search decision")
    sp.add_argument("--out", help="write the emitted-vs-enumerated comparison JSON here")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("render", help="draw a meander")
    perm_arg(sp)
    sp.add_argument("--format", choices=["svg", "ascii", "dot"], default="svg")
    sp.add_argument("--width", type=int)
    sp.add_argument("--height", type=int)
    sp.add_argument("--spacing", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, OrderCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
