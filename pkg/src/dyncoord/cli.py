"""Command-line interface: ``dyncoord {parse,corpus,substrings,explain}``."""
import argparse
import sys

from dyncoord.corpus import (
    BaseSentenceRejected, CorpusError, Verdict, evaluate, load_corpus,
    reference_corpus, substring_selfcoord,
)
from dyncoord.engine import ParseError, Strategy, explain, parse
from dyncoord.grammar import (
    GrammarError, UnknownWordError, load_complete_grammar, reference_grammar, tokenize,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", "--grammar", metavar="PATH",
                        help="grammar file (default: the bundled reference grammar)")
    common.add_argument("--strategy", choices=[s.value for s in Strategy],
                        default=Strategy.HISTORY.value)
    common.add_argument("--tsv", action="store_true", help="tab-separated output")
    common.add_argument("--verbose", action="store_true", help="print transition diagrams")

    parser = argparse.ArgumentParser(
        prog="dyncoord",
        description="Dynamic-grammar parser with coordination by back-up into the parse history")
    commands = parser.add_subparsers(dest="command", required=True)
    p = commands.add_parser("parse", parents=[common], help="print ACCEPT or REJECT for a sentence")
    p.add_argument("sentence")
    p = commands.add_parser("explain", parents=[common], help="print the transition diagram")
    p.add_argument("sentence")
    p = commands.add_parser("substrings", parents=[common],
                            help="self-coordinate every proper span of a sentence")
    p.add_argument("sentence")
    p = commands.add_parser("corpus", parents=[common], help="evaluate a judgment corpus")
    p.add_argument("corpus", nargs="?", help="corpus file (default: the bundled corpus)")
    return parser


def _read(path):
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _parse(grammar, args, out, err):
    tokens = tokenize(args.sentence)
    try:
        result = parse(grammar, tokens, args.strategy)
    except (UnknownWordError, ParseError) as exc:
        print("REJECT", file=out)
        print(exc, file=err)
        return EXIT_FAIL
    if args.tsv:
        print("%s\t%s" % ("ACCEPT" if result.accepted else "REJECT", " ".join(tokens)), file=out)
    else:
        print("ACCEPT" if result.accepted else "REJECT", file=out)
    if args.verbose and result.accepted:
        print(explain(result), file=out)
    return EXIT_OK if result.accepted else EXIT_FAIL


def _explain(grammar, args, out, err):
    try:
        result = parse(grammar, tokenize(args.sentence), args.strategy)
        print(explain(result), file=out)
    except (UnknownWordError, ParseError) as exc:
        print(exc, file=err)
        return EXIT_FAIL
    return EXIT_OK


def _substrings(grammar, args, out, err):
    tokens = tokenize(args.sentence)
    try:
        rows = substring_selfcoord(grammar, tokens)
    except (UnknownWordError, ParseError, BaseSentenceRejected) as exc:
        print(exc, file=err)
        return EXIT_FAIL
    for (i, j), verdict in rows:
        span = " ".join(tokens[i:j])
        if args.tsv:
            print("%d\t%d\t%s\t%s" % (i, j, span, verdict.value), file=out)
        else:
            print("%2d-%-2d  %-8s  %s" % (i, j, verdict.value, span), file=out)
    return EXIT_OK if all(v is Verdict.ACCEPT for _, v in rows) else EXIT_FAIL


def _corpus(grammar, args, out, err):
    try:
        entries = load_corpus(_read(args.corpus)) if args.corpus else reference_corpus()
    except (OSError, CorpusError) as exc:
        print(exc, file=err)
        return EXIT_USAGE
    report = evaluate(grammar, entries)
    print(report.tsv() if args.tsv else report.table(), file=out)
    for row in report.rows:
        if row.error:
            print("%s: %s" % (row.entry.id, row.error), file=err)
    if args.verbose:
        for row in report.rows:
            if row.history is Verdict.ACCEPT:
                print("\n# %s: %s" % (row.entry.id, row.entry.text), file=out)
                print(explain(parse(grammar, row.entry.tokens)), file=out)
    return EXIT_OK if not report.mismatches else EXIT_FAIL


COMMANDS = {"parse": _parse, "explain": _explain, "substrings": _substrings, "corpus": _corpus}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        grammar = load_complete_grammar(_read(args.grammar)) if args.grammar else reference_grammar()
    except (OSError, GrammarError) as exc:
        print(exc, file=err)
        return EXIT_USAGE
    return COMMANDS[args.command](grammar, args, out, err)


if __name__ == "__main__":
    sys.exit(main())
