"""
Back-up into a stack or into the whole history
==============================================

With the STACK strategy a conjunct may only start from a state that is still
the bottom of the stack when the conjunction arrives.  The HISTORY strategy
may back up to any state visited on the way.
"""

from dyncoord import Strategy, parse, reference_grammar

g = reference_grammar()

sentences = [
    "john gave some books to peter and some papers to george",
    # "some" has been reduced into an NP by the time "and" arrives, so the
    # state before "books" is gone from the stack
    "john gave some books to mary and papers to george",
]

for text in sentences:
    verdicts = [parse(g, text, s).accepted for s in Strategy]
    print("%-58s history=%-5s stack=%s" % (text, *verdicts))
