"""Command-line interface.

Subcommands: ``insert`` (run decomposition insertion on a word), ``graph``
(build and export a crystal graph), ``enumerate`` (list tableau families),
``character`` (print characters and Schur expansions), ``classes`` (group
words into rewrite-equivalence classes), and ``check`` (run the
verification suites).
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import character, expand_in_schur_q, schur_p, schur_q
from .crystals import ClosureError, CrystalGraph, tableau_ops, word_ops
from .insertion import insert_word, inverse_insertion
from .plactic import equivalence_classes
from .suites import SUITES, run_suite
from .tableaux import (enumerate_dectab, enumerate_primed_dectab,
                       enumerate_shtab, enumerate_standard_recording,
                       parse_shape)
from .words import (FLAVOR_GL, FLAVOR_Q, FLAVOR_QPLUS, parse_word, word_str)

FAMILIES = {
    "shtab": lambda shape, n: enumerate_shtab(shape, n, primed_diagonal=False),
    "shtab+": lambda shape, n: enumerate_shtab(shape, n, primed_diagonal=True),
    "dectab": enumerate_dectab,
    "dectab+": enumerate_primed_dectab,
    "recording": lambda shape, n: enumerate_standard_recording(shape),
}


def _usage_error(message: str):
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(2)


def cmd_insert(args) -> int:
    word = parse_word(args.word)
    p, q = insert_word(word)
    if args.format == "json":
        print(json.dumps({"word": word_str(word), "p": p.to_json(),
                          "q": q.to_json()}))
    else:
        print("P:")
        print(p.ascii())
        print("Q:")
        print(q.ascii())
        print(f"round-trip: {word_str(inverse_insertion(p, q))}")
    return 0


def cmd_graph(args) -> int:
    n = args.n
    if (args.shape is None) == (args.word is None):
        _usage_error("graph needs exactly one of --shape or --word")
    if args.shape is not None:
        shape = parse_shape(args.shape)
        ops = tableau_ops(n, args.flavor)
        vertices = list(enumerate_primed_dectab(shape, n))
        if not vertices:
            _usage_error(f"no tableaux of shape {shape} with entries <= {n}")
        graph = CrystalGraph(vertices, ops)
    else:
        seed = parse_word(args.word)
        ops = word_ops(n, args.flavor)
        try:
            graph = CrystalGraph.closure([seed], ops)
        except ClosureError as exc:
            _usage_error(str(exc))
    print(graph.to_dot() if args.format == "dot" else graph.to_json())
    return 0


def cmd_enumerate(args) -> int:
    shape = parse_shape(args.shape)
    tabs = list(FAMILIES[args.family](shape, args.n))
    if args.format == "json":
        print(json.dumps([t.to_json() for t in tabs]))
    else:
        for t in tabs:
            print(t.ascii())
            print()
        print(f"total: {len(tabs)}")
    return 0


def cmd_character(args) -> int:
    shape = parse_shape(args.shape)
    n = args.n
    if args.family == "p":
        poly = schur_p(shape, n)
    elif args.family == "q":
        poly = schur_q(shape, n)
    else:
        poly = character(
            (t.weight(n) for t in FAMILIES[args.family](shape, n)), n)
    if args.expand:
        expansion = expand_in_schur_q(poly)
        if args.format == "json":
            print(json.dumps([[list(sh), c] for sh, c in sorted(
                expansion.items(), reverse=True)]))
        else:
            for sh, c in sorted(expansion.items(), reverse=True):
                print(f"{c} * Q{list(sh)}")
    elif args.format == "json":
        print(json.dumps(poly.to_json()))
    else:
        print(poly)
    return 0


def cmd_classes(args) -> int:
    from itertools import product
    words = product(range(1, 2 * args.n + 1), repeat=args.length)
    classes = equivalence_classes(words)
    items = sorted(classes.items(), key=lambda kv: kv[0].compact_str())
    if args.format == "json":
        print(json.dumps([{"p": p.to_json(),
                           "words": [word_str(w) for w in sorted(ws)]}
                          for p, ws in items]))
    else:
        for p, ws in items:
            print(f"{p.compact_str()}  ({len(ws)} words)")
            for w in sorted(ws):
                print(f"  {word_str(w)}")
    return 0


def cmd_check(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    kwargs = {}
    if args.max_len is not None:
        kwargs["max_len"] = args.max_len
    failed = 0
    for name in names:
        for check_name, ok, detail in run_suite(name, **kwargs):
            status = "PASS" if ok else "FAIL"
            extra = f"  [{detail}]" if detail else ""
            print(f"{status}  {name}: {check_name}{extra}")
            failed += not ok
    print(f"{'OK' if not failed else 'FAILED'}: "
          f"{failed} failing check(s) across {len(names)} suite(s)")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deccrystal",
        description="Primed decomposition tableaux, queer crystal operators, "
                    "decomposition insertion, and Schur P/Q characters.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", help="insert a word and print (P, Q)")
    p.add_argument("--word", required=True)
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("graph", help="build a crystal graph")
    p.add_argument("--shape", help="strict partition, e.g. '3,2'")
    p.add_argument("--word", help="seed word for a closure graph")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--flavor", choices=(FLAVOR_GL, FLAVOR_Q, FLAVOR_QPLUS),
                   default=FLAVOR_QPLUS)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("enumerate", help="list a tableau family")
    p.add_argument("--family", choices=tuple(FAMILIES), required=True)
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("character", help="print a character polynomial")
    p.add_argument("--family", choices=("p", "q") + tuple(FAMILIES),
                   required=True)
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--expand", action="store_true",
                   help="expand in the Schur Q basis")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("classes",
                       help="rewrite-equivalence classes of all words")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    p.add_argument("--max-len", type=int, default=None,
                   help="cap word lengths in the exhaustive suites")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        _usage_error(str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
