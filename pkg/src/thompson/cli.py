"""Command-line front end.

Exit status: 0 for success / equal / pass, 1 for a semantic negative
(unequal, not a member, failing verification), 2 for usage or parse errors.

Arguments naming an element accept either a word (``"x[1]*x[0]^-1"``) or
the path of a map file in the ``domain:/tails:/bp:`` text format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence, Tuple, Union

from .dyadic import Dyadic
from .morphisms import make_h, rho, sigma
from .plmap import GROUP_CLASSES, Interval, PLMap, PLMapError, membership, support
from .verify import DEFAULT_SEED, format_records, format_text, run_suite
from .words import GenSym, Word, WordError, realize, theorem_i_images

Element = Union[Word, PLMap]


class UsageError(Exception):
    pass


def _load(arg: str) -> Element:
    if arg and os.path.isfile(arg):
        with open(arg) as fh:
            return PLMap.from_text(fh.read())
    return Word.parse(arg)


def _as_map(e: Element, domain: Optional[str] = None) -> PLMap:
    return e if isinstance(e, PLMap) else realize(e, domain=domain)


def _pair_maps(a: Element, b: Element) -> Tuple[PLMap, PLMap]:
    # an empty word takes the other side's domain
    if isinstance(a, Word) and not a:
        fb = _as_map(b)
        return _as_map(a, fb.domain), fb
    fa = _as_map(a)
    return fa, _as_map(b, fa.domain)


def _range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from None


def _emit_map(f: PLMap, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_plot_data(f)) + "\n"
    return f.to_text()


def _plot_data(f: PLMap) -> dict:
    data = {"domain": f.domain, "points": [[str(x), str(y)] for x, y in f.points]}
    if f.domain == "real":
        data["tails"] = [f.left_tail, f.right_tail]
    return data


# -- subcommands ---------------------------------------------------------------


def cmd_eval(args) -> int:
    f = _as_map(_load(args.target))
    print(f(Dyadic.parse(args.point)))
    return 0


def cmd_eq(args) -> int:
    fa, fb = _pair_maps(_load(args.a), _load(args.b))
    if fa.domain != fb.domain:
        raise UsageError(f"cannot compare {fa.domain} map with {fb.domain} map")
    equal = fa == fb
    print("equal" if equal else "not equal")
    return 0 if equal else 1


def cmd_mul(args) -> int:
    a, b = _load(args.a), _load(args.b)
    if args.format == "word":
        if not (isinstance(a, Word) and isinstance(b, Word)):
            raise UsageError("--format word needs two words")
        print(a * b)
        return 0
    fa, fb = _pair_maps(a, b)
    sys.stdout.write(_emit_map(fa * fb, args.format))
    return 0


def cmd_inv(args) -> int:
    a = _load(args.target)
    if args.format == "word":
        if not isinstance(a, Word):
            raise UsageError("--format word needs a word")
        print(~a)
        return 0
    sys.stdout.write(_emit_map(_as_map(a).inverse(), args.format))
    return 0


def cmd_member(args) -> int:
    f = _as_map(_load(args.target))
    interval = None
    if args.cls == "F(a,b)":
        if args.interval is None:
            raise UsageError("F(a,b) needs --interval a b")
        interval = Interval(Dyadic.parse(args.interval[0]), Dyadic.parse(args.interval[1]))
    result = membership(f, args.cls, interval)
    print("member" if result else "not a member")
    return 0 if result else 1


def cmd_support(args) -> int:
    s = support(_as_map(_load(args.target)))
    print("empty" if s is None else s)
    return 0


def cmd_convert(args) -> int:
    w = _load(args.word)
    target = args.family
    if target == "map":
        sys.stdout.write(_as_map(w, "unit" if isinstance(w, Word) and not w else None).to_text())
        return 0
    if not isinstance(w, Word):
        raise UsageError("only words can be converted to other alphabets")
    families = {s.family for s in w.symbols()}
    if target == "g":
        if args.n is None:
            raise UsageError("--n is required for conversion to g")
        if families - {"x"}:
            raise UsageError("conversion to g is defined for x-words")
        print(theorem_i_images("x->g", args.n)(w))
        return 0
    if target == "x":
        levels = {s.level for s in w.symbols()}
        if families - {"g"} or len(levels) > 1:
            raise UsageError("conversion to x is defined for g-words of a single level")
        n = levels.pop() if levels else (args.n or 4)
        print(theorem_i_images("g->x", n)(w))
        return 0
    if target == "G":
        if families - {"g"}:
            raise UsageError("conversion to G is defined for g-words")
        print(Word(tuple((GenSym("G", s.index), e) for s, e in w.letters)))
        return 0
    raise UsageError(f"undefined conversion to {target!r}")


def cmd_plot(args) -> int:
    f = _as_map(_load(args.target))
    if args.format == "json":
        print(json.dumps(_plot_data(f)))
        return 0
    lines = [f"# domain\t{f.domain}"]
    if f.domain == "real":
        lines.append(f"# tails\t{f.left_tail}\t{f.right_tail}")
    lines.append("x\ty")
    lines.extend(f"{x}\t{y}" for x, y in f.points)
    print("\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    kwargs = {"seed": args.seed}
    gw = args.g_window or args.window
    if gw is not None:
        kwargs["g_window"] = gw
    for name in ("x_max", "levels", "remark_window", "samples"):
        if getattr(args, name) is not None:
            kwargs[name] = getattr(args, name)
    if args.k is not None:
        kwargs["k_max"] = args.k
    if args.n is not None:
        kwargs["n_max"] = args.n
    if args.range is not None:
        kwargs["r"] = args.range
    try:
        reports = run_suite(args.suite, **kwargs)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.format == "records":
        text = format_records(reports)
    else:
        text = format_text(reports, timing=args.timing, verbose=args.verbose)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.passed for r in reports) else 1


def cmd_rho(args) -> int:
    print(rho(args.shift, Word.parse(args.word)))
    return 0


def cmd_sigma(args) -> int:
    e = _load(args.target)
    if args.format == "word":
        if not isinstance(e, Word):
            raise UsageError("--format word needs a word")
        print(sigma(args.m, e))
        return 0
    sys.stdout.write(_emit_map(sigma(args.m, _as_map(e)), args.format))
    return 0


def cmd_make_h(args) -> int:
    sys.stdout.write(_emit_map(make_h(args.k, args.n), args.format))
    return 0


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thompson", description="Exact computations in Thompson's groups F, F' and D.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", help="evaluate a word or map at a dyadic point")
    s.add_argument("target")
    s.add_argument("point", help="dyadic in p/2^k form")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("eq", help="decide equality of two elements")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_eq)

    s = sub.add_parser("mul", help="product a*b")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--format", choices=("map", "json", "word"), default="map")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("inv", help="inverse")
    s.add_argument("target")
    s.add_argument("--format", choices=("map", "json", "word"), default="map")
    s.set_defaults(func=cmd_inv)

    s = sub.add_parser("member", help="membership in F, F', D, Ft, Ft' or F(a,b)")
    s.add_argument("target")
    s.add_argument("cls", choices=GROUP_CLASSES, metavar="class")
    s.add_argument("--interval", nargs=2, metavar=("A", "B"))
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("support", help="smallest interval outside which the map is the identity")
    s.add_argument("target")
    s.set_defaults(func=cmd_support)

    s = sub.add_parser("convert", help="rewrite a word in another generating set, or realize it")
    s.add_argument("word")
    s.add_argument("--family", required=True, choices=("x", "g", "G", "map"))
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("plot", help="exact breakpoint table")
    s.add_argument("target")
    s.add_argument("--format", choices=("tsv", "json"), default="tsv")
    s.set_defaults(func=cmd_plot)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", help="presentations, isomorphisms, remark-identity, lemma41, h-sigma, cost, noncommute or all")
    s.add_argument("--window", type=_range, help="alias of --g-window")
    s.add_argument("--g-window", type=_range)
    s.add_argument("--x-max", type=int)
    s.add_argument("--levels", type=_range)
    s.add_argument("--remark-window", type=_range)
    s.add_argument("--k", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--range", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--format", choices=("text", "records"), default="text")
    s.add_argument("--timing", action="store_true")
    s.add_argument("--verbose", action="store_true")
    s.add_argument("--output")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("rho", help="shift a G-word by n")
    s.add_argument("shift", type=int)
    s.add_argument("word")
    s.set_defaults(func=cmd_rho)

    s = sub.add_parser("sigma", help="conjugate by h_{m,2m+2}^-1")
    s.add_argument("m", type=int)
    s.add_argument("target")
    s.add_argument("--format", choices=("map", "json", "word"), default="map")
    s.set_defaults(func=cmd_sigma)

    s = sub.add_parser("make-h", help="the conjugator h_{k,n}")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--format", choices=("map", "json"), default="map")
    s.set_defaults(func=cmd_make_h)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, WordError, PLMapError, ValueError) as exc:
        print(f"thompson {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
