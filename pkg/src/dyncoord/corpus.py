"""
Grammaticality-judgment corpus and evaluation harness.

Corpus file lines look like::

    2b|OK|ACCEPT|john gave mary some books and peter some papers
    18a|STARRED|REJECT|the woman spoke to george and man to peter|gapping, not substring coordination

The third column is what the parser is expected to say in HISTORY mode; the
second records the human judgment, which may disagree (the optional fifth
column says why).
"""
import enum
from dataclasses import dataclass, field
from typing import Optional

from dyncoord.engine import ParseError, Strategy, parse
from dyncoord.grammar import UnknownWordError, _read_data, tokenize


class Human(enum.Enum):
    OK = "OK"
    STARRED = "STARRED"
    MARGINAL = "MARGINAL"


class Verdict(enum.Enum):
    ACCEPT = "ACCEPT"
    REJECT = "REJECT"


class CorpusError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


class BaseSentenceRejected(ValueError):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    tokens: tuple
    expected: Verdict
    human: Human = Human.OK
    note: str = ""

    @property
    def text(self):
        return " ".join(self.tokens)


def load_corpus(text):
    entries = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) not in (4, 5):
            raise CorpusError("expected id|HUMAN|EXPECTED|tokens[|note]", lineno)
        ident, human, expected, sentence = fields[:4]
        note = fields[4] if len(fields) == 5 else ""
        if not ident:
            raise CorpusError("empty id", lineno)
        if ident in seen:
            raise CorpusError("duplicate id %r (first on line %d)" % (ident, seen[ident]), lineno)
        try:
            human, expected = Human(human), Verdict(expected)
        except ValueError as exc:
            raise CorpusError(str(exc), lineno) from None
        tokens = tuple(tokenize(sentence))
        if not tokens:
            raise CorpusError("no tokens", lineno)
        if human is Human.STARRED and expected is Verdict.ACCEPT and not note:
            raise CorpusError("entry %r: starred but expected ACCEPT needs a note" % ident, lineno)
        seen[ident] = lineno
        entries.append(CorpusEntry(ident, tokens, expected, human, note))
    return entries


def reference_corpus():
    return load_corpus(_read_data("paper.corpus"))


@dataclass(frozen=True)
class EntryResult:
    entry: CorpusEntry
    got: dict  # Strategy -> Verdict, or None when the parse raised
    error: Optional[str] = None

    @property
    def history(self):
        return self.got.get(Strategy.HISTORY)

    @property
    def stack(self):
        return self.got.get(Strategy.STACK)

    @property
    def mismatch(self):
        return self.history is not self.entry.expected


@dataclass
class Report:
    rows: list = field(default_factory=list)

    @property
    def total(self):
        return len(self.rows)

    @property
    def mismatches(self):
        return [row for row in self.rows if row.mismatch]

    def counts(self, strategy):
        return {v: sum(1 for row in self.rows if row.got.get(strategy) is v) for v in Verdict}

    def table(self):
        width = max([len(r.entry.id) for r in self.rows] + [2])
        header = "%-*s  %-8s  %-8s  %-8s  %-8s  %s" % (
            width, "id", "human", "expected", "history", "stack", "sentence")
        lines = [header, "-" * len(header)]
        for row in self.rows:
            flag = "" if not row.mismatch else "  <-- MISMATCH"
            lines.append("%-*s  %-8s  %-8s  %-8s  %-8s  %s%s" % (
                width, row.entry.id, row.entry.human.value, row.entry.expected.value,
                _show(row.history), _show(row.stack), row.entry.text, flag))
        lines.append("")
        lines.append("%d entries, %d mismatches" % (self.total, len(self.mismatches)))
        return "\n".join(lines)

    def tsv(self):
        return "\n".join("\t".join((row.entry.id, row.entry.expected.value,
                                   _show(row.history), _show(row.stack)))
                         for row in self.rows)


def _show(verdict):
    return "-" if verdict is None else verdict.value


def evaluate(grammar, corpus, strategies=(Strategy.HISTORY, Strategy.STACK)):
    """Parse every entry under every strategy and compare with expectations."""
    report = Report()
    for entry in corpus:
        got, error = {}, None
        for strategy in strategies:
            try:
                accepted = parse(grammar, entry.tokens, strategy).accepted
            except (ParseError, UnknownWordError) as exc:
                got[strategy], error = Verdict.REJECT, str(exc)
                continue
            got[strategy] = Verdict.ACCEPT if accepted else Verdict.REJECT
        if error is not None:
            # an input the parser cannot even read never counts as meeting expectations
            got = dict.fromkeys(got, None)
        report.rows.append(EntryResult(entry, got, error))
    return report


def self_coordinate(tokens, i, j, conjunction="and"):
    """Insert `conjunction` and a copy of ``tokens[i:j]`` right after the span."""
    tokens = list(tokens)
    return tuple(tokens[:j] + [conjunction] + tokens[i:j] + tokens[j:])


def substring_selfcoord(grammar, tokens, conjunction="and"):
    """Self-coordinate every contiguous proper span of an accepted sentence.

    Returns ``[((i, j), Verdict), ...]`` in span order.
    """
    tokens = tuple(tokenize(tokens)) if isinstance(tokens, str) else tuple(tokens)
    base = parse(grammar, tokens)
    if not base.accepted or base.coordinations:
        raise BaseSentenceRejected("base sentence is not accepted without coordination: %s"
                                   % " ".join(tokens))
    n = len(tokens)
    results = []
    for i in range(n):
        for j in range(i + 1, n + 1):
            if (i, j) == (0, n):
                continue
            accepted = parse(grammar, self_coordinate(tokens, i, j, conjunction)).accepted
            results.append(((i, j), Verdict.ACCEPT if accepted else Verdict.REJECT))
    return results
