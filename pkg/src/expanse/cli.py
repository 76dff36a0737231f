"""``expanse`` command line: expand, derive, build, evaluate and benchmark expressions."""

import argparse
import json
import sys

from . import bench
from .automaton import DEFAULT_STATE_CAP, build, build_lazy
from .errors import NotStarrable, ParseError, StateCapExceeded, UnknownLetter
from .expand import derive_word, expand, validate
from .oracle import assert_equiv
from .syntax import Context

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_CAP = 4


def _int_list(text):
    return [int(x) for x in text.split(",") if x]


def _word_list(text):
    return text.split(",")


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", default="abc", help="letters of the context (default: abc)")
    common.add_argument("--weights", default="b", choices=["b", "z", "q"],
                        help="weight domain: boolean, integer or rational (default: b)")

    p = argparse.ArgumentParser(prog="expanse", description="Weighted rational expressions and their expansions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("expand", parents=[common], help="print the expansion of an expression")
    s.add_argument("expression")

    s = sub.add_parser("derive", parents=[common], help="print the derivative with respect to a word")
    s.add_argument("expression")
    s.add_argument("word")

    s = sub.add_parser("automaton", parents=[common], help="build the derived-term automaton")
    s.add_argument("expression")
    s.add_argument("--deterministic", action="store_true")
    s.add_argument("--normalized", action="store_true",
                   help="factor out the weight norm when determinizing")
    s.add_argument("--lazy", action="store_true", help="only materialize states reached by --eval")
    s.add_argument("--cap", type=int, default=DEFAULT_STATE_CAP, help="state cap for strict builds")
    s.add_argument("--format", choices=["dot", "json"], default="dot")
    s.add_argument("--eval", type=_word_list, default=None, metavar="W1,W2,...",
                   help="evaluate these words and print their weights after the automaton")

    s = sub.add_parser("eval", parents=[common], help="weight of a word")
    s.add_argument("expression")
    s.add_argument("word", nargs="?", default="")
    s.add_argument("--deterministic", action="store_true")
    s.add_argument("--normalized", action="store_true")

    s = sub.add_parser("equiv", parents=[common], help="cross-check expansion, derivative and derivation routes")
    s.add_argument("expression")
    s.add_argument("--max-len", type=int, default=6)

    s = sub.add_parser("bench", help="time automaton construction on a family of expressions")
    s.add_argument("--family", default="ednum", choices=["ednum"])
    s.add_argument("--n", type=_int_list, default=[100], metavar="N1,N2,...")
    s.add_argument("--alphabet-sizes", type=_int_list, default=[2, 254], metavar="S1,S2,...")
    s.add_argument("--algo", choices=["expansion", "derivation", "both"], default="both")
    s.add_argument("--runs", type=int, default=5)
    return p


def _context(args):
    return Context(args.alphabet, args.weights)


def cmd_expand(args, out):
    ctx = _context(args)
    e = ctx.parse(args.expression)
    validate(e, ctx)
    print(expand(e, ctx), file=out)


def cmd_derive(args, out):
    ctx = _context(args)
    e = ctx.parse(args.expression)
    validate(e, ctx)
    if args.word:
        print(derive_word(e, args.word, ctx), file=out)
    else:
        print(f"<{ctx.domain.format(ctx.domain.one)}>{e}", file=out)


def cmd_automaton(args, out):
    ctx = _context(args)
    e = ctx.parse(args.expression)
    if args.lazy:
        aut = build_lazy(e, ctx, args.deterministic, args.normalized)
    else:
        aut = build(e, ctx, args.deterministic, args.normalized, args.cap)
    results = [(w, aut.evaluate(w)) for w in args.eval] if args.eval is not None else []
    fmt = ctx.domain.format
    if args.format == "json":
        d = aut.to_dict()
        if args.eval is not None:
            d["eval"] = {w: fmt(k) for w, k in results}
        print(json.dumps(d, ensure_ascii=False, indent=2), file=out)
    else:
        out.write(aut.to_dot())
        for w, k in results:
            print(f"// {w!r}: {fmt(k)}", file=out)


def cmd_eval(args, out):
    ctx = _context(args)
    e = ctx.parse(args.expression)
    for a in args.word:
        if a not in ctx.alphabet:
            raise UnknownLetter(a)
    aut = build_lazy(e, ctx, args.deterministic, args.normalized)
    print(ctx.domain.format(aut.evaluate(args.word)), file=out)


def cmd_equiv(args, out):
    ctx = _context(args)
    e = ctx.parse(args.expression)
    report = assert_equiv(e, ctx, args.max_len)
    print(report, file=out)
    return EXIT_OK if report.ok else 1


def cmd_bench(args, out):
    algos = bench.ALGORITHMS if args.algo == "both" else (args.algo,)
    cfg = bench.BenchConfig(ns=tuple(args.n), alphabet_sizes=tuple(args.alphabet_sizes),
                            algorithms=algos, runs=args.runs)
    out.write(bench.to_csv(bench.run(cfg)))


COMMANDS = {
    "expand": cmd_expand,
    "derive": cmd_derive,
    "automaton": cmd_automaton,
    "eval": cmd_eval,
    "equiv": cmd_equiv,
    "bench": cmd_bench,
}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = make_parser().parse_args(argv)
    # printing and expanding long products recurse along the spine
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    try:
        code = COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except NotStarrable as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    except StateCapExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CAP
    except ValueError as exc:
        # invalid alphabet or weight domain
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
