"""
Incremental parser with coordination by back-up into the parse history.

Ordinary words advance every state in the history by shift plus reduce
closure.  A conjunction (or a comma) opens resumption items: the parser
backs up to an earlier history state ``start``, remembers a state ``target``
reached just before the conjunction, and parses the next conjunct from
``start``.  When the conjunct reaches ``target`` again the two conjuncts
combine into a single transition ``start -> target`` that skips over both of
them, and parsing carries on from ``target``.

The history is a graph of ``(position, state)`` nodes.  Every incoming link
is either a word step or a completed coordination, and each link is a valid
transition on its own.  Because a completed coordination links straight from
its back-up point to its continuation, states inside it are not ancestors of
anything after it along that path, so two coordinations can nest or follow
each other but never interleave.
"""
import enum
from collections import defaultdict, deque
from dataclasses import dataclass, field, replace
from typing import NamedTuple, Optional

from dyncoord.dynamics import (
    INITIAL, Flag, StackState, reduce_closure, step_word,
)
from dyncoord.grammar import Marker, lookup, tokenize


class Strategy(enum.Enum):
    HISTORY = "history"
    STACK = "stack"


class ParseError(ValueError):
    pass


class EmptyInputError(ParseError):
    pass


class ConjunctionFirstError(ParseError):
    pass


class TrailingConjunctionError(ParseError):
    pass


class NotAcceptedError(ParseError):
    pass


class Node(NamedTuple):
    pos: int
    state: StackState


@dataclass(frozen=True)
class ResumptionItem:
    """An open coordination.

    The left conjunct spans tokens ``open_pos:conj_pos`` and maps ``start``
    to ``target``; the right conjunct is being parsed from ``start`` and has
    reached ``current``.
    """
    open_pos: int
    conj_pos: int
    start: StackState
    target: StackState
    current: StackState
    kind: Marker
    left_flag: Flag = Flag.MINUS


@dataclass(frozen=True)
class Coordination:
    open_pos: int
    conj_pos: int
    close_pos: int
    start: StackState
    target: StackState
    kind: Marker
    left_flag: Flag
    flag: Flag


class Link(NamedTuple):
    source: Node
    label: object  # a word, or a Coordination


class CoordinationSpan(NamedTuple):
    left: tuple
    right: tuple
    kind: Marker
    word: str


class DiagramStep(NamedTuple):
    position: int
    word: str
    state: StackState


def iterate_flag(left, kind, right):
    """Flag of ``left KIND right``, or None when the combination is not allowed.

    A conjunction closes a (possibly iterated) left part against a plain right
    part; a comma iterates it.  An iterated right part never combines.
    """
    if right is not Flag.MINUS:
        return None
    if kind is Marker.CONJ:
        return Flag.MINUS
    if kind is Marker.COMMA:
        return Flag.PLUS
    return None


@dataclass
class ParseHistory:
    tokens: tuple
    markers: tuple = ()
    entries: list = field(default_factory=list)
    resumed: list = field(default_factory=list)
    links: dict = field(default_factory=lambda: defaultdict(list))
    plus_links: dict = field(default_factory=lambda: defaultdict(list))
    opaque_spans: set = field(default_factory=set)
    rooted: set = field(default_factory=set)
    active: dict = field(default_factory=lambda: defaultdict(set))

    def __post_init__(self):
        n = len(self.tokens)
        if not self.markers:
            self.markers = (Marker.ORDINARY,) * n
        if not self.entries:
            self.entries = [set() for _ in range(n + 1)]
            self.entries[0].add(INITIAL)
            self.rooted.add(Node(0, INITIAL))
        if not self.resumed:
            self.resumed = [set() for _ in range(n + 1)]

    def parents(self, node):
        return {link.source for link in self.links.get(node, ())}

    def add_link(self, source, target, label, flag=Flag.MINUS):
        table = self.links if flag is Flag.MINUS else self.plus_links
        link = Link(source, label)
        if link in table[target]:
            return False
        table[target].append(link)
        if flag is Flag.MINUS:
            self.entries[target.pos].add(target.state)
            if source in self.rooted:
                self.rooted.add(target)
        return True

    def add_item(self, pos, item):
        bucket = self.active[Node(pos, item.current)]
        if item in bucket:
            return False
        bucket.add(item)
        return True

    def items_at(self, pos):
        found = []
        for node, items in self.active.items():
            if node.pos == pos:
                found.extend(items)
        return found

    def ancestors(self, node):
        """History nodes from which `node` is reachable by one or more links."""
        seen = set()
        agenda = deque([node])
        while agenda:
            for source in self.parents(agenda.popleft()):
                if source not in seen:
                    seen.add(source)
                    agenda.append(source)
        return {a for a in seen if a.state not in self.resumed[a.pos]}

    def plus_nodes(self, pos):
        return [node for node in self.plus_links if node.pos == pos]


def open_coordination(history, j, strategy=Strategy.HISTORY):
    """Resumption items for the conjunction or comma at token position `j`.

    Back-up points are history states with a path to a state at `j`.  In
    STACK mode a back-up point qualifies only if its whole stack is still the
    bottom of the target stack, i.e. nothing it held has been reduced away.
    """
    if j == 0:
        raise ConjunctionFirstError("sentence starts with %r" % history.tokens[0])
    kind = history.markers[j]
    items = set()

    def admit(source, target, left_flag):
        if source.pos >= j:
            return
        if strategy is Strategy.STACK and not target.has_bottom(source.state):
            return
        items.add(ResumptionItem(source.pos, j, source.state, target, source.state,
                                 kind, left_flag))

    for target in history.entries[j]:
        for source in history.ancestors(Node(j, target)):
            admit(source, target, Flag.MINUS)
    for node in history.plus_nodes(j):
        for link in history.plus_links[node]:
            admit(link.source, node.state, Flag.PLUS)
    return items


def advance_conjunct(item, word, grammar):
    return {replace(item, current=t) for t in step_word({item.current}, word, grammar)}


def close_coordination(item, history, pos, grammar):
    """Combine both conjuncts of `item` at token position `pos`.

    Returns the continuation states (the target and its reductions), or an
    empty set when the item cannot close here.  The history gains one link
    per continuation state, from the back-up point straight to `pos`.
    """
    if item.current != item.target or pos <= item.conj_pos + 1:
        return frozenset()
    flag = iterate_flag(item.left_flag, item.kind, Flag.MINUS)
    if flag is None:
        return frozenset()
    coordination = Coordination(item.open_pos, item.conj_pos, pos, item.start,
                                item.target, item.kind, item.left_flag, flag)
    continuation = reduce_closure(item.target, grammar)
    source = Node(item.open_pos, item.start)
    for state in continuation:
        history.add_link(source, Node(pos, state), coordination, flag)
    history.opaque_spans.add((item.open_pos, pos))
    return continuation


@dataclass
class ParseResult:
    tokens: tuple
    strategy: Strategy
    accepted: bool
    final_flag: Optional[Flag] = None
    coordinations: list = field(default_factory=list)
    diagram: list = field(default_factory=list)
    history: Optional[ParseHistory] = field(default=None, repr=False)

    def __bool__(self):
        return self.accepted


def _settle(history, pos, grammar):
    # Close every item that can close at `pos`; closing may move outer items
    # to new nodes at `pos`, which may close in turn.
    agenda = deque(history.items_at(pos))
    while agenda:
        item = agenda.popleft()
        flag = iterate_flag(item.left_flag, item.kind, Flag.MINUS)
        continuation = close_coordination(item, history, pos, grammar)
        if not continuation or flag is not Flag.MINUS:
            continue
        for outer in list(history.active.get(Node(item.open_pos, item.start), ())):
            for state in continuation:
                moved = replace(outer, current=state)
                if history.add_item(pos, moved):
                    agenda.append(moved)


def run(grammar, tokens, strategy=Strategy.HISTORY):
    """Build the full parse history for `tokens`."""
    tokens = tuple(tokens)
    if not tokens:
        raise EmptyInputError("no tokens")
    markers = [lookup(grammar, word)[1] for word in tokens]
    if markers[0] is not Marker.ORDINARY:
        raise ConjunctionFirstError("sentence starts with %r" % tokens[0])
    if markers[-1] is not Marker.ORDINARY:
        raise TrailingConjunctionError("sentence ends with %r" % tokens[-1])

    history = ParseHistory(tokens, tuple(markers))
    for pos, word in enumerate(tokens):
        _settle(history, pos, grammar)
        if markers[pos] is Marker.ORDINARY:
            for s in sorted(history.entries[pos] | history.resumed[pos]):
                for t in step_word({s}, word, grammar):
                    history.add_link(Node(pos, s), Node(pos + 1, t), word)
            for item in history.items_at(pos):
                for moved in advance_conjunct(item, word, grammar):
                    history.add_item(pos + 1, moved)
        else:
            for item in open_coordination(history, pos, strategy):
                history.resumed[pos + 1].add(item.start)
                history.add_item(pos + 1, item)
    _settle(history, len(tokens), grammar)
    return history


def _link_key(link, target_state):
    label = link.label
    if isinstance(label, Coordination):
        return (0, label.open_pos, label.target != target_state, len(label.target),
                str(label.target), str(link.source.state))
    return (1, 0, False, 0, "", str(link.source.state))


def _path(history, source, target):
    """One chain of links from `source` to `target`, preferring coordinations."""
    memo = {}

    def find(node):
        if node == source:
            return []
        if node in memo:
            return memo[node]
        memo[node] = None
        links = sorted(history.links.get(node, ()), key=lambda l: _link_key(l, node.state))
        for link in links:
            if link.source.pos < source.pos:
                continue
            prefix = find(link.source)
            if prefix is not None:
                memo[node] = prefix + [link]
                break
        return memo[node]

    return find(target)


def _conjuncts(history, coordination):
    left_end = Node(coordination.conj_pos, coordination.target)
    left_start = Node(coordination.open_pos, coordination.start)
    if coordination.left_flag is Flag.PLUS:
        left = [link for link in history.plus_links[left_end]
                if link.source == left_start][:1]
    else:
        left = _path(history, left_start, left_end)
    right = _path(history, Node(coordination.conj_pos + 1, coordination.start),
                  Node(coordination.close_pos, coordination.target))
    return left, right


def _render(history, links, spans):
    words = []
    for link in links:
        if isinstance(link.label, Coordination):
            words.append(_render_coordination(history, link.label, spans))
        else:
            words.append(link.label)
    return " ".join(words)


def _render_coordination(history, coordination, spans):
    left, right = _conjuncts(history, coordination)
    word = history.tokens[coordination.conj_pos]
    spans.append(CoordinationSpan((coordination.open_pos, coordination.conj_pos),
                                  (coordination.conj_pos + 1, coordination.close_pos),
                                  coordination.kind, word))
    return "[%s] %s [%s]" % (_render(history, left, spans), word,
                             _render(history, right, spans))


def parse(grammar, tokens, strategy=Strategy.HISTORY):
    """Parse a token list (or a sentence string) and report the verdict."""
    if isinstance(tokens, str):
        tokens = tokenize(tokens)
    strategy = Strategy(strategy)
    history = run(grammar, tokens, strategy)
    n = len(history.tokens)
    final = StackState((grammar.start,))
    goal = Node(n, final)
    result = ParseResult(history.tokens, strategy, goal in history.rooted, history=history)
    if result.accepted:
        result.final_flag = Flag.MINUS
        spans = []
        for link in _path(history, Node(0, INITIAL), goal):
            if isinstance(link.label, Coordination):
                label = _render_coordination(history, link.label, spans)
                end = link.label.close_pos
            else:
                label, end = link.label, link.source.pos + 1
            result.diagram.append(DiagramStep(end, label, None))
        states = [step.source.state for step in _path(history, Node(0, INITIAL), goal)[1:]]
        states.append(final)
        result.diagram = [step._replace(state=s) for step, s in zip(result.diagram, states)]
        result.coordinations = sorted(spans)
    elif any(link.source in history.rooted for link in history.plus_links.get(goal, ())):
        result.final_flag = Flag.PLUS
    return result


def explain(result):
    """Render the transition diagram of an accepted parse."""
    if not result.accepted:
        raise NotAcceptedError("cannot explain a rejected parse: %s" % " ".join(result.tokens))
    lines = []
    previous = INITIAL
    for k, step in enumerate(result.diagram):
        lines.append("c%d %s -%s-> c%d %s" % (k, previous, step.word, k + 1, step.state))
        previous = step.state
    return "\n".join(lines)
