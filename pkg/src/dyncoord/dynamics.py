"""
Shift-reduce dynamics: parser states and word transitions.

A state is a stack of categories written front-first, so ``<n, det, v, np>``
has just shifted an N on top of a DET.  A word maps a state to every state
obtained by shifting one of its categories and then reducing any number of
times.  The initial state is ``<>`` and the final state is ``<s>``.
"""
import enum
from dataclasses import dataclass

from dyncoord.grammar import Marker, UnknownWordError, lookup


class Flag(enum.Enum):
    """Iteration feature of a transition: PLUS means 'iterated, not yet closed'."""
    PLUS = "+"
    MINUS = "-"


class MarkerWordError(ValueError):
    def __init__(self, word):
        self.word = word
        super().__init__("%r is a conjunction marker, not an ordinary word" % word)


class TransitionMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class StackState:
    stack: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "stack", tuple(self.stack))

    def __str__(self):
        return "<%s>" % ", ".join(cat.lower() for cat in self.stack)

    def __len__(self):
        return len(self.stack)

    def has_bottom(self, other):
        """True when `other`'s stack is a contiguous bottom segment of ours."""
        n = len(other.stack)
        return n <= len(self.stack) and self.stack[len(self.stack) - n:] == other.stack


INITIAL = StackState()


def state(*categories):
    """Build a state from categories given front-first, case-insensitively."""
    return StackState(tuple(c.upper() for c in categories))


@dataclass(frozen=True)
class TransitionType:
    source: StackState
    target: StackState
    iterated: Flag = Flag.MINUS

    def __str__(self):
        return "%s |-%s %s" % (self.source, self.iterated.value, self.target)


def shift(s, category):
    return StackState((category,) + s.stack)


def reduce_step(s, rule):
    """Apply one reduction, or return None when the rule does not match the front."""
    n = len(rule.rhs)
    if s.stack[:n] == tuple(reversed(rule.rhs)):
        return StackState((rule.lhs,) + s.stack[n:])
    return None


def reduce_closure(s, grammar):
    """All states reachable from `s` by zero or more reductions (includes `s`)."""
    seen = {s}
    agenda = [s]
    while agenda:
        current = agenda.pop()
        if not current.stack:
            continue
        for rule in grammar.rules_ending_with(current.stack[0]):
            reduced = reduce_step(current, rule)
            if reduced is not None and reduced not in seen:
                seen.add(reduced)
                agenda.append(reduced)
    return frozenset(seen)


def step_word(states, word, grammar):
    """Advance a set of states over one ordinary word.

    Returns a dict mapping every resulting state to the set of input states
    that produced it.
    """
    categories, marker = lookup(grammar, word)
    if marker is not Marker.ORDINARY:
        raise MarkerWordError(word)
    out = {}
    for s in states:
        for category in categories:
            for t in reduce_closure(shift(s, category), grammar):
                out.setdefault(t, set()).add(s)
    return {t: frozenset(parents) for t, parents in out.items()}


def compose(first, second):
    if first.target != second.source:
        raise TransitionMismatch("cannot compose %s with %s" % (first, second))
    return TransitionType(first.source, second.target, Flag.MINUS)


def is_final(s, grammar):
    return s.stack == (grammar.start,)


def word_transitions(tokens, grammar, start=INITIAL):
    """Every (path of states) through `tokens` from `start`, by plain word steps.

    Only practical for short inputs; used to check sentence types.
    """
    paths = [(start,)]
    for word in tokens:
        paths = [path + (t,) for path in paths
                 for t in step_word({path[-1]}, word, grammar)]
    return paths


__all__ = [
    "Flag", "StackState", "TransitionType", "INITIAL", "state", "shift",
    "reduce_step", "reduce_closure", "step_word", "compose", "is_final",
    "word_transitions", "MarkerWordError", "TransitionMismatch", "UnknownWordError",
]
