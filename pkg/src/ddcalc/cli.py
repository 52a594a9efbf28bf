"""ddcalc command-line interface."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .combinat import parse_forest, parse_permutation, parse_word
from .families import (
    Expansion,
    InvariantViolation,
    forest_polynomial,
    monomial_to_slide,
    pipe_dreams,
    schubert,
    slide,
    slide_expand,
    slide_product_expand,
)
from .operators import INF, check_multiplicity
from .polyring import Polynomial, parse
from .suites import SUITES, SuiteConfig, run_suite


class UsageError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


def _multiplicity(text: str):
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'inf', got {text!r}") from None
    if m < 1:
        raise argparse.ArgumentTypeError(f"m must be >= 1, got {m}")
    return m


def _poly_json(family: str, index, m, f: Polynomial) -> dict:
    return {
        "family": family,
        "index": list(index),
        "m": "inf" if m == INF else m,
        "polynomial": str(f),
        "terms": [{"exponents": list(mono), "coeff": c} for mono, c in f.items()],
    }


def _emit(args, text: str, data: dict) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=False))
    else:
        print(text)


def _expansion_text(exp: Expansion) -> str:
    if not exp.coeffs:
        return "0"
    return "\n".join(f"{c:+d} {','.join(map(str, k))}" for k, c in exp.sorted_items())


# -- subcommands ----------------------------------------------------------

def cmd_schubert(args) -> int:
    w = parse_permutation(args.perm)
    f = schubert(w)
    _emit(args, str(f), _poly_json("schubert", w.one_line, None, f))
    return 0


def cmd_forest(args) -> int:
    m = 1 if args.m is None else args.m
    if m == INF:
        raise UsageError("forests need a finite m")
    F = parse_forest(args.code, m)
    f = forest_polynomial(F, m)
    _emit(args, str(f), _poly_json("forest", F.code, m, f))
    return 0


def cmd_slide(args) -> int:
    m = 1 if args.m is None else args.m
    a = parse_word(args.word)
    f = slide(a, m)
    _emit(args, str(f), _poly_json("slide", a, m, f))
    return 0


def cmd_pipedreams(args) -> int:
    w = parse_permutation(args.perm)
    dreams = pipe_dreams(w)
    if args.count:
        _emit(args, str(len(dreams)), {"perm": list(w.one_line), "count": len(dreams)})
        return 0
    if args.json:
        data = {
            "perm": list(w.one_line),
            "n": w.n,
            "dreams": [{"crosses": [list(rc) for rc in d.sort_key()], "rows": d.render().split("\n")} for d in dreams],
        }
        print(json.dumps(data))
        return 0
    blocks = [f"# {k}  {d.monomial()}\n{d.render()}" for k, d in enumerate(dreams, start=1)]
    print("\n\n".join(blocks))
    return 0


def _basis_m(basis: str):
    if basis == "slide":
        return 1
    if basis == "monomial":
        return INF
    if basis.startswith("mslide:"):
        try:
            return _multiplicity(basis.split(":", 1)[1])
        except argparse.ArgumentTypeError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError(f"unknown basis {basis!r} (slide, mslide:M or monomial)")


def cmd_expand(args) -> int:
    m = _basis_m(args.basis)
    f = parse(args.poly)
    exp = slide_expand(f, m)
    print(json.dumps(exp.to_json()))
    if args.require_positive and any(c < 0 for c in exp.coeffs.values()):
        print("negative coefficient in expansion", file=sys.stderr)
        return 1
    return 0


def cmd_kostka(args) -> int:
    exp = monomial_to_slide(parse_word(args.word))
    _emit(args, _expansion_text(exp), exp.to_json())
    return 0


def cmd_product_slide(args) -> int:
    a, b = parse_word(args.a), parse_word(args.b)
    try:
        exp = slide_product_expand(a, b)
    except InvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(args, _expansion_text(exp), exp.to_json())
    return 0


def cmd_verify(args) -> int:
    ms = ()
    if args.m is not None:
        check_multiplicity(args.m)
        ms = (args.m,)
    cfg = SuiteConfig(seed=args.seed, trials=args.trials, vars=args.vars, deg=args.deg, ms=ms)
    reports = run_suite(args.suite, cfg)
    print(f"# ddcalc verify {args.suite} {cfg.header()}")
    total = failed = 0
    for report in reports:
        for line in report.lines():
            print(line)
        total += len(report.checks)
        failed += len(report.failures())
    print(f"# {total - failed}/{total} checks passed")
    return 0 if failed == 0 else 1


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--m", type=_multiplicity, default=None, metavar="M|inf", help="multiplicity")

    p = argparse.ArgumentParser(prog="ddcalc", description="Divided-difference operators and their dual polynomial families.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("schubert", parents=[common], help="Schubert polynomial of a permutation")
    s.add_argument("perm", help="one-line notation, e.g. 14253 or [1,4,2,5,3]")
    s.set_defaults(func=cmd_schubert)

    s = sub.add_parser("forest", parents=[common], help="forest polynomial from a code")
    s.add_argument("code", help="forest code, e.g. c=0,2,0,1")
    s.set_defaults(func=cmd_forest)

    s = sub.add_parser("slide", parents=[common], help="(m-)slide polynomial of a word")
    s.add_argument("word", help="comma separated word, e.g. 1,4,3")
    s.set_defaults(func=cmd_slide)

    s = sub.add_parser("pipedreams", parents=[common], help="reduced pipe dreams of a permutation")
    s.add_argument("perm")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true", help="render every dream (default)")
    g.add_argument("--count", action="store_true", help="print only the number of dreams")
    s.set_defaults(func=cmd_pipedreams)

    s = sub.add_parser("expand", parents=[common], help="expand a polynomial in a slide basis (JSON)")
    s.add_argument("poly")
    s.add_argument("--basis", default="slide", help="slide, mslide:M or monomial")
    s.add_argument("--require-positive", action="store_true", help="exit 1 on a negative coefficient")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("kostka", parents=[common], help="signed slide expansion of the monomial x_a")
    s.add_argument("word", help="weakly increasing word")
    s.set_defaults(func=cmd_kostka)

    s = sub.add_parser("product-slide", parents=[common], help="slide expansion of slide(a) * slide(b)")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_product_slide)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=sorted(SUITES) + ["all"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=_positive, default=100)
    s.add_argument("--vars", type=_positive, default=4)
    s.add_argument("--deg", type=_positive, default=4)
    s.set_defaults(func=cmd_verify)
    return p


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"ddcalc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
