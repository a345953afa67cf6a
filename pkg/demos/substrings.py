"""
Any substring can be a conjunct
===============================

Coordinating every proper span of a sentence with a copy of itself.
"""

from dyncoord import reference_grammar
from dyncoord.corpus import substring_selfcoord

g = reference_grammar()
tokens = "john gave mary some books".split()

rows = substring_selfcoord(g, tokens)
for (i, j), verdict in rows:
    copy = " ".join(tokens[i:j])
    print("%-12s %-24s %s" % (verdict.value, copy, " ".join(tokens[:j] + ["and", copy] + tokens[j:])))
print(len(rows), "spans")
