"""
Words as transitions between parser states
==========================================

Each word maps one shift-reduce stack to another.  A sentence is accepted
when the composed transition leads from the empty stack to ``<s>``.
"""

from dyncoord import explain, parse, reference_grammar

g = reference_grammar()

# a plain sentence: three words, three transitions
print(explain(parse(g, "john likes mary")))
print()

# the conjunction backs up to an earlier state; both conjuncts must then
# lead from that state to the same target
result = parse(g, "ben gave some books to sue and papers to joe")
print(explain(result))
for span in result.coordinations:
    print("coordination:", span)
