"""Dynamic grammars for coordination: a shift-reduce parser whose words are
transitions between states, with coordination handled by back-up into the
parse history."""
from dyncoord.grammar import (
    Grammar, Lexeme, Marker, Rule, GrammarError, UnknownWordError,
    load_grammar, lookup, reference_grammar, serialize, tokenize, validate,
)
from dyncoord.dynamics import (
    Flag, StackState, TransitionType, INITIAL, compose, is_final, reduce_closure,
    reduce_step, shift, state, step_word,
)
from dyncoord.engine import (
    ParseHistory, ParseResult, ResumptionItem, Strategy, advance_conjunct,
    close_coordination, explain, iterate_flag, open_coordination, parse,
)

__version__ = "0.1.0"
