"""
Judged examples
===============

The bundled corpus pairs each sentence with a human judgment and the verdict
the parser is expected to give.  Starred sentences the parser accepts carry
a note explaining why.
"""

from dyncoord import reference_grammar
from dyncoord.corpus import Human, Verdict, evaluate, reference_corpus

g = reference_grammar()
report = evaluate(g, reference_corpus())
print(report.table())

# where the model and the human judgment part ways
print()
for row in report.rows:
    entry = row.entry
    if (entry.human is Human.STARRED) == (row.history is Verdict.ACCEPT):
        print("%-6s %-8s %s\n       %s" % (entry.id, entry.human.value, entry.text, entry.note))
