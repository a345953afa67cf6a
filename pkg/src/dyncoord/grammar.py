"""
Context-free backbone and lexicon.

A grammar file is line based::

    # comment
    S -> NP VP
    john: NP
    drive: VI N
    and: CONJ
    ,: COMMA

Rules and lexical entries induce the state dynamics used by
:mod:`dyncoord.dynamics`.  Conjunctions and commas are *markers*: they never
carry ordinary categories and never enter a parser state.
"""
import enum
import re
import graphlib
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, NamedTuple

CATEGORY_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
MARKER_NAMES = ("CONJ", "COMMA")


class Marker(enum.Enum):
    ORDINARY = "ORDINARY"
    CONJ = "CONJ"
    COMMA = "COMMA"


class GrammarError(ValueError):
    """Raised when a grammar file cannot be loaded."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


class GrammarSyntaxError(GrammarError):
    pass


class EpsilonRuleError(GrammarError):
    pass


class UnaryCycleError(GrammarError):
    pass


class DuplicateFormError(GrammarError):
    pass


class UnknownWordError(LookupError):
    def __init__(self, word):
        self.word = word
        super().__init__("unknown word: %r" % word)

    def __str__(self):
        return self.args[0]


class Rule(NamedTuple):
    lhs: str
    rhs: tuple

    def __str__(self):
        return "%s -> %s" % (self.lhs, " ".join(self.rhs))


@dataclass(frozen=True)
class Lexeme:
    form: str
    categories: frozenset = frozenset()
    marker: Marker = Marker.ORDINARY

    def __str__(self):
        if self.marker is not Marker.ORDINARY:
            return "%s: %s" % (self.form, self.marker.value)
        return "%s: %s" % (self.form, " ".join(sorted(self.categories)))


@dataclass(frozen=True, eq=False)
class Grammar:
    """An immutable grammar: rules, lexicon and start category.

    Rules are indexed by their right-hand side reversed, which is the order
    in which daughters appear at the front of a parser stack.
    """
    rules: tuple
    lexicon: Mapping[str, Lexeme]
    start: str = "S"
    _by_front: Mapping = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "lexicon", MappingProxyType(dict(self.lexicon)))
        index = {}
        for rule in self.rules:
            if rule.rhs:
                index.setdefault(rule.rhs[-1], []).append(rule)
        object.__setattr__(
            self, "_by_front", MappingProxyType({k: tuple(v) for k, v in index.items()}))

    def __eq__(self, other):
        if not isinstance(other, Grammar):
            return NotImplemented
        return (set(self.rules) == set(other.rules)
                and dict(self.lexicon) == dict(other.lexicon)
                and self.start == other.start)

    __hash__ = object.__hash__

    def rules_ending_with(self, category):
        """Rules whose last daughter is `category` (candidates for a reduce)."""
        return self._by_front.get(category, ())

    @property
    def categories(self):
        cats = set()
        for rule in self.rules:
            cats.add(rule.lhs)
            cats.update(rule.rhs)
        for lexeme in self.lexicon.values():
            cats.update(lexeme.categories)
        return frozenset(cats)

    def markers(self, marker):
        return sorted(f for f, lx in self.lexicon.items() if lx.marker is marker)

    def vocabulary(self, marker=Marker.ORDINARY):
        return self.markers(marker)


def tokenize(sentence):
    """Lowercase and split on whitespace; commas must already stand alone."""
    return sentence.lower().split()


def _unary_cycles(rules):
    graph = {}
    for rule in rules:
        if len(rule.rhs) == 1:
            graph.setdefault(rule.lhs, set()).add(rule.rhs[0])
    try:
        tuple(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError as exc:
        return exc.args[1]
    return None


def load_grammar(text, start="S"):
    """Parse grammar-file contents into a :class:`Grammar`.

    Raises on syntax errors, epsilon rules, unary cycles and duplicate forms.
    """
    rules = []
    rule_lines = {}
    lexicon = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" in line:
            lhs, _, rhs = line.partition("->")
            lhs, rhs = lhs.strip(), tuple(rhs.split())
            if not CATEGORY_RE.match(lhs):
                raise GrammarSyntaxError("bad left-hand side %r" % lhs, lineno)
            if not rhs:
                raise EpsilonRuleError("epsilon rule for %s (empty right-hand side)" % lhs, lineno)
            for cat in (lhs,) + rhs:
                if not CATEGORY_RE.match(cat):
                    raise GrammarSyntaxError("bad category name %r" % cat, lineno)
                if cat in MARKER_NAMES:
                    raise GrammarSyntaxError("marker %s used as a category" % cat, lineno)
            rule = Rule(lhs, rhs)
            if rule not in rule_lines:
                rule_lines[rule] = lineno
                rules.append(rule)
        elif ":" in line:
            form, _, cats = line.partition(":")
            form, cats = form.strip().lower(), cats.split()
            if not form or any(c.isspace() for c in form):
                raise GrammarSyntaxError("bad word form %r" % form, lineno)
            if not cats:
                raise GrammarSyntaxError("word %r has no categories" % form, lineno)
            if form in lexicon:
                raise DuplicateFormError("duplicate entry for %r" % form, lineno)
            markers = [c for c in cats if c in MARKER_NAMES]
            if markers:
                if len(cats) != 1:
                    raise GrammarSyntaxError(
                        "marker entry %r may not carry other categories" % form, lineno)
                lexicon[form] = Lexeme(form, frozenset(), Marker(markers[0]))
            else:
                for cat in cats:
                    if not CATEGORY_RE.match(cat):
                        raise GrammarSyntaxError("bad category name %r" % cat, lineno)
                lexicon[form] = Lexeme(form, frozenset(cats))
        else:
            raise GrammarSyntaxError("expected 'LHS -> RHS' or 'form: CATEGORIES'", lineno)

    cycle = _unary_cycles(rules)
    if cycle:
        raise UnaryCycleError("unary cycle " + " -> ".join(reversed(cycle)))
    # completeness (start rule, undeclared categories) is left to validate()
    return Grammar(tuple(rules), lexicon, start)


def serialize(grammar):
    lines = [str(rule) for rule in grammar.rules]
    lines.extend(str(grammar.lexicon[form]) for form in sorted(grammar.lexicon))
    return "\n".join(lines) + "\n"


def lookup(grammar, form):
    """Return ``(categories, marker)`` for a word form."""
    try:
        lexeme = grammar.lexicon[form]
    except KeyError:
        raise UnknownWordError(form) from None
    return lexeme.categories, lexeme.marker


def validate(grammar) -> list:
    """List every violated grammar invariant; empty when the grammar is sound."""
    problems = []
    if not any(rule.lhs == grammar.start for rule in grammar.rules):
        problems.append("start category has no rule")
    defined = {rule.lhs for rule in grammar.rules}
    for lexeme in grammar.lexicon.values():
        defined.update(lexeme.categories)
    undeclared = set()
    for rule in grammar.rules:
        if not rule.rhs:
            problems.append("epsilon rule: %s" % rule)
        for cat in rule.rhs:
            if cat not in defined and cat not in undeclared:
                undeclared.add(cat)
                problems.append("undeclared category %s" % cat)
        for cat in (rule.lhs,) + tuple(rule.rhs):
            if not CATEGORY_RE.match(cat) or cat in MARKER_NAMES:
                problems.append("bad category name %r in rule %s" % (cat, rule))
    cycle = _unary_cycles(grammar.rules)
    if cycle:
        problems.append("unary cycle " + " -> ".join(reversed(cycle)))
    for form, lexeme in grammar.lexicon.items():
        if form != lexeme.form:
            problems.append("lexicon key %r does not match form %r" % (form, lexeme.form))
        if lexeme.marker is Marker.ORDINARY and not lexeme.categories:
            problems.append("word %r has no categories" % form)
        if lexeme.marker is not Marker.ORDINARY and lexeme.categories:
            problems.append("marker %r carries ordinary categories" % form)
        for cat in lexeme.categories:
            if not CATEGORY_RE.match(cat) or cat in MARKER_NAMES:
                problems.append("bad category name %r for word %r" % (cat, form))
    return problems


def _read_data(name):
    from importlib.resources import files
    return files("dyncoord").joinpath("data", name).read_text(encoding="utf-8")


def load_complete_grammar(text, start="S"):
    """Like :func:`load_grammar`, but also raise on any :func:`validate` diagnostic."""
    grammar = load_grammar(text, start)
    problems = validate(grammar)
    if problems:
        raise GrammarError("; ".join(problems))
    return grammar


def reference_grammar():
    """The small English grammar shipped with the package."""
    return load_complete_grammar(_read_data("reference.gram"))
