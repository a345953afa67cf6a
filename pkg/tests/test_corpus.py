import pytest

from dyncoord.corpus import (
    BaseSentenceRejected, CorpusError, Human, Verdict, evaluate, load_corpus,
    reference_corpus, self_coordinate, substring_selfcoord,
)
from dyncoord.engine import Strategy


def test_load_entry():
    [entry] = load_corpus("2b|OK|ACCEPT|john gave mary some books and peter some papers")
    assert entry.id == "2b"
    assert entry.human is Human.OK and entry.expected is Verdict.ACCEPT
    assert entry.tokens[-2:] == ("some", "papers")


def test_load_starred_reject():
    [entry] = load_corpus("andor|STARRED|REJECT|the girl and the or the boy and the adult came")
    assert entry.human is Human.STARRED and entry.expected is Verdict.REJECT


def test_duplicate_id():
    with pytest.raises(CorpusError, match="duplicate id") as info:
        load_corpus("a|OK|ACCEPT|john came\n# x\na|OK|ACCEPT|mary came")
    assert info.value.line == 3


@pytest.mark.parametrize("line", [
    "a|OK|john came",
    "a|FINE|ACCEPT|john came",
    "a|OK|MAYBE|john came",
    "|OK|ACCEPT|john came",
    "a|OK|ACCEPT|   ",
    "a|STARRED|ACCEPT|john came",
])
def test_malformed(line):
    with pytest.raises(CorpusError):
        load_corpus(line)


def test_note_column():
    [entry] = load_corpus("x|STARRED|ACCEPT|john came|a reason")
    assert entry.note == "a reason"


def test_reference_corpus_shape():
    corpus = reference_corpus()
    ids = [e.id for e in corpus]
    assert len(ids) == len(set(ids)) >= 25
    for required in ["1", "2a", "2b", "2c", "3a", "3b", "3c", "4a", "4b", "4c", "walk",
                     "15a", "16a", "19a", "19b", "20a", "20b", "andor", "iter", "7b"]:
        assert required in ids
    for entry in corpus:
        if entry.human is Human.STARRED and entry.expected is Verdict.ACCEPT:
            assert entry.note


def test_reference_corpus_evaluates_cleanly(g_ref):
    report = evaluate(g_ref, reference_corpus())
    assert report.total == len(reference_corpus())
    assert report.mismatches == []


def test_popped_row(g_ref):
    report = evaluate(g_ref, [e for e in reference_corpus() if e.id == "popped"])
    [row] = report.rows
    assert row.history is Verdict.ACCEPT and row.stack is Verdict.REJECT


def test_stack_never_beats_history(g_ref):
    for row in evaluate(g_ref, reference_corpus()).rows:
        if row.stack is Verdict.ACCEPT:
            assert row.history is Verdict.ACCEPT


def test_empty_corpus(g_ref):
    report = evaluate(g_ref, [])
    assert report.total == 0 and report.rows == [] and report.mismatches == []


def test_unknown_word_is_a_mismatch(g_ref):
    report = evaluate(g_ref, load_corpus("x|OK|REJECT|john zzz"))
    [row] = report.rows
    assert row.mismatch and "zzz" in row.error


def test_evaluate_is_idempotent(g_ref):
    corpus = reference_corpus()
    first = evaluate(g_ref, corpus)
    assert evaluate(g_ref, corpus).tsv() == first.tsv()
    reordered = evaluate(g_ref, list(reversed(corpus)))
    assert sorted(reordered.tsv().splitlines()) == sorted(first.tsv().splitlines())


def test_report_formats(g_ref):
    report = evaluate(g_ref, load_corpus("a|OK|ACCEPT|john likes mary\nb|STARRED|REJECT|mary , peter came"))
    assert report.tsv().splitlines() == ["a\tACCEPT\tACCEPT\tACCEPT", "b\tREJECT\tREJECT\tREJECT"]
    table = report.table()
    assert "2 entries, 0 mismatches" in table
    assert report.counts(Strategy.HISTORY) == {Verdict.ACCEPT: 1, Verdict.REJECT: 1}


def test_self_coordinate():
    tokens = "john gave mary some books".split()
    assert " ".join(self_coordinate(tokens, 2, 3)) == "john gave mary and mary some books"


def test_substring_selfcoord(g_ref):
    rows = substring_selfcoord(g_ref, "john gave mary some books")
    assert len(rows) == 14
    assert ((2, 3), Verdict.ACCEPT) in rows
    assert all(v is Verdict.ACCEPT for _, v in rows)


def test_substring_selfcoord_needs_grammatical_base(g_ref):
    with pytest.raises(BaseSentenceRejected):
        substring_selfcoord(g_ref, "gave john mary")
    with pytest.raises(BaseSentenceRejected):
        substring_selfcoord(g_ref, "john and mary came")
