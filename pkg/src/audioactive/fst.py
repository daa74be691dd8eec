"""Nondeterministic finite-state transducers and the algebra on them.

A :class:`Transducer` is an immutable value. Every operation in this module
is a pure function returning a new machine. Symbols are dense integer
indices into a :class:`SymbolTable`; ``EPS`` (``-1``) marks an absent
input or output symbol on a transition.

Recognizers have an empty output table, generators an empty input table.
Minimal deterministic recognizers are returned as :class:`Dfa`, numbered
canonically (breadth-first from the initial state, symbols in table order),
so two recognizers of the same language minimize to identical values.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from ._backend import kernels

EPS = -1
DIAMOND = "◊"
DIAMOND_ASCII = "*"
EPSILON_LABEL = "ε"

Word = tuple[int, ...]
Transition = tuple[int, int, int, int]


class AutomatonError(Exception):
    """Base class for failures raised by automaton operations."""


class ContractError(AutomatonError, ValueError):
    """An operation was called outside its precondition."""


class InfiniteLanguageError(AutomatonError):
    pass


class LimitExceededError(AutomatonError):
    pass


class UnboundedTransductionError(AutomatonError):
    pass


@dataclass(frozen=True)
class SymbolTable:
    """Bijection between symbol indices ``0..n-1`` and printable labels."""

    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if any(not label for label in labels):
            raise ContractError("symbol labels must be nonempty")
        if len(set(labels)) != len(labels):
            raise ContractError(f"duplicate symbol labels in {labels}")
        if DIAMOND_ASCII in labels and DIAMOND in labels:
            raise ContractError(f"{DIAMOND_ASCII!r} is reserved as the ASCII form of {DIAMOND}")
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(labels)})

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def index(self, label: str) -> int:
        if label == DIAMOND_ASCII and DIAMOND in self._index:
            label = DIAMOND
        try:
            return self._index[label]
        except KeyError:
            raise ContractError(f"unknown symbol {label!r}; alphabet is {self.labels}") from None

    def label(self, symbol: int) -> str:
        return self.labels[symbol]

    def encode(self, text: str | Sequence[str]) -> Word:
        """Turn ``"3*2212"`` (one character per symbol) or a label list into a word."""
        return tuple(self.index(label) for label in text)

    def decode(self, word: Iterable[int], ascii: bool = False) -> str:
        labels = (self.labels[s] for s in word)
        if ascii:
            labels = (DIAMOND_ASCII if x == DIAMOND else x for x in labels)
        return "".join(labels)


EMPTY_TABLE = SymbolTable(())


@dataclass(frozen=True, eq=True)
class Transducer:
    input_table: SymbolTable
    output_table: SymbolTable
    num_states: int
    initial: frozenset[int]
    final: frozenset[int]
    transitions: tuple[Transition, ...]

    def __post_init__(self):
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))
        object.__setattr__(self, "transitions", tuple(map(tuple, self.transitions)))
        n = self.num_states
        if n < 0:
            raise ContractError("negative state count")
        for q in self.initial | self.final:
            if not 0 <= q < n:
                raise ContractError(f"state {q} out of range for {n} states")
        n_in, n_out = len(self.input_table), len(self.output_table)
        for src, isym, osym, dst in self.transitions:
            if not (0 <= src < n and 0 <= dst < n):
                raise ContractError(f"transition {src}->{dst} out of range for {n} states")
            if not -1 <= isym < n_in or not -1 <= osym < n_out:
                raise ContractError(f"transition symbol out of range: {(src, isym, osym, dst)}")

    @property
    def is_recognizer(self) -> bool:
        return len(self.output_table) == 0

    @property
    def is_generator(self) -> bool:
        return len(self.input_table) == 0

    @property
    def is_deterministic(self) -> bool:
        if not self.is_recognizer or len(self.initial) != 1:
            return False
        seen = set()
        for src, isym, _osym, _dst in self.transitions:
            if isym == EPS or (src, isym) in seen:
                return False
            seen.add((src, isym))
        return True

    @classmethod
    def _unchecked(cls, input_table, output_table, num_states, initial, final, transitions):
        """Construct without validation; for results of operations on valid machines."""
        obj = object.__new__(cls)
        for name, value in (
            ("input_table", input_table),
            ("output_table", output_table),
            ("num_states", num_states),
            ("initial", frozenset(initial)),
            ("final", frozenset(final)),
            ("transitions", tuple(transitions)),
        ):
            object.__setattr__(obj, name, value)
        return obj

    def _packed(self):
        return (self.num_states, sorted(self.initial), sorted(self.final), list(self.transitions))

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(states={self.num_states}, "
            f"in={''.join(self.input_table.labels) or '-'}, "
            f"out={''.join(self.output_table.labels) or '-'}, "
            f"transitions={len(self.transitions)})"
        )


class Dfa(Transducer):
    """A deterministic, partial recognizer: a missing transition rejects."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_deterministic:
            raise ContractError("not a deterministic recognizer")

    @cached_property
    def _delta(self) -> dict[tuple[int, int], int]:
        return {(src, isym): dst for src, isym, _osym, dst in self.transitions}

    @property
    def start(self) -> int:
        return next(iter(self.initial))

    def step(self, state: int, symbol: int) -> int | None:
        return self._delta.get((state, symbol))

    def run(self, word: Iterable[int]) -> int | None:
        state = self.start
        for symbol in word:
            state = self._delta.get((state, symbol))
            if state is None:
                return None
        return state


def _require_recognizer(t: Transducer, op: str) -> None:
    if not t.is_recognizer:
        raise ContractError(f"{op} needs a recognizer (empty output alphabet), got {t!r}")


def universal(table: SymbolTable) -> Transducer:
    """One-state recognizer of every word over ``table``."""
    return Transducer(table, EMPTY_TABLE, 1, {0}, {0}, [(0, a, EPS, 0) for a in range(len(table))])


def word_filter(table: SymbolTable, word: Sequence[int]) -> Transducer:
    """Linear filter accepting exactly ``word`` and copying it to the output."""
    trans = [(i, a, a, i + 1) for i, a in enumerate(word)]
    return Transducer(table, table, len(word) + 1, {0}, {len(word)}, trans)


def compose(first: Transducer, second: Transducer) -> Transducer:
    """Run ``first`` then ``second``: ``x -> y`` iff ``x ->first z ->second y``.

    In the usual right-to-left notation this is ``second . first``.
    """
    if first.output_table != second.input_table:
        raise ContractError(
            f"cannot compose: output alphabet {first.output_table.labels} "
            f"!= input alphabet {second.input_table.labels}"
        )
    n, initial, final, trans = kernels.compose(first._packed(), second._packed())
    return Transducer._unchecked(first.input_table, second.output_table, n, initial, final, trans)


def trim(t: Transducer) -> Transducer:
    """Drop states that are unreachable or cannot reach a final state."""
    n, initial, final, trans = kernels.trim(*t._packed())
    if n == t.num_states:
        return t
    return Transducer._unchecked(t.input_table, t.output_table, n, initial, final, trans)


def transpose(t: Transducer) -> Transducer:
    """Swap input and output on every transition, inverting the relation."""
    return Transducer._unchecked(
        t.output_table,
        t.input_table,
        t.num_states,
        t.initial,
        t.final,
        [(s, o, i, d) for s, i, o, d in t.transitions],
    )


def reverse(t: Transducer) -> Transducer:
    """Mirror the machine: flip every edge and swap initial with final."""
    return Transducer._unchecked(
        t.input_table,
        t.output_table,
        t.num_states,
        t.final,
        t.initial,
        [(d, i, o, s) for s, i, o, d in t.transitions],
    )


def to_filter(t: Transducer) -> Transducer:
    _require_recognizer(t, "to_filter")
    return Transducer(
        t.input_table,
        t.input_table,
        t.num_states,
        t.initial,
        t.final,
        [(s, i, i, d) for s, i, _o, d in t.transitions],
    )


def identity(table: SymbolTable) -> Transducer:
    return to_filter(universal(table))


def power(t: Transducer, n: int) -> Transducer:
    """``n``-fold self-composition, trimmed after every step."""
    if n < 1:
        raise ContractError("power needs n >= 1; use identity() for n = 0")
    if t.input_table != t.output_table:
        raise ContractError("power needs equal input and output alphabets")
    result = t
    for _ in range(n - 1):
        result = trim(compose(result, t))
    return result


def determinize(t: Transducer) -> Dfa:
    """Subset construction with input-epsilon closure, reachable subsets only."""
    _require_recognizer(t, "determinize")
    n, final, trans = kernels.determinize(*t._packed(), len(t.input_table))
    return Dfa._unchecked(t.input_table, EMPTY_TABLE, n, {0}, final, trans)


def minimize(t: Transducer) -> Dfa:
    """Brzozowski: reverse, determinize, reverse, determinize.

    The result is the minimal partial DFA, trimmed and canonically numbered.
    An empty language gives a single non-final state.
    """
    _require_recognizer(t, "minimize")
    return determinize(reverse(determinize(reverse(t))))


def canonical(d: Dfa) -> Dfa:
    """Renumber a DFA breadth-first from its start state, dropping unreachable states."""
    order = {d.start: 0}
    queue = deque([d.start])
    out = {}
    for src, isym, _o, dst in d.transitions:
        out.setdefault(src, []).append((isym, dst))
    trans = []
    while queue:
        q = queue.popleft()
        for sym, r in sorted(out.get(q, ())):
            if r not in order:
                order[r] = len(order)
                queue.append(r)
            trans.append((order[q], sym, EPS, order[r]))
    final = {order[q] for q in d.final if q in order}
    return Dfa(d.input_table, EMPTY_TABLE, len(order), {0}, final, trans)


def isomorphic(d1: Dfa, d2: Dfa) -> bool:
    """Build the state bijection between two DFAs by a parallel traversal."""
    if d1.input_table != d2.input_table or d1.num_states != d2.num_states:
        return False
    if len(d1.transitions) != len(d2.transitions):
        return False
    out1 = {}
    out2 = {}
    for s, i, _o, d in d1.transitions:
        out1.setdefault(s, {})[i] = d
    for s, i, _o, d in d2.transitions:
        out2.setdefault(s, {})[i] = d
    mapping = {d1.start: d2.start}
    queue = deque([d1.start])
    while queue:
        q1 = queue.popleft()
        q2 = mapping[q1]
        if (q1 in d1.final) != (q2 in d2.final):
            return False
        e1 = out1.get(q1, {})
        e2 = out2.get(q2, {})
        if e1.keys() != e2.keys():
            return False
        for sym, r1 in e1.items():
            r2 = e2[sym]
            if r1 in mapping:
                if mapping[r1] != r2:
                    return False
            else:
                mapping[r1] = r2
                queue.append(r1)
    return len(set(mapping.values())) == len(mapping)


def equivalent(r1: Transducer, r2: Transducer) -> bool:
    """Language equality of two recognizers over the same alphabet."""
    _require_recognizer(r1, "equivalent")
    _require_recognizer(r2, "equivalent")
    if r1.input_table != r2.input_table:
        raise ContractError("equivalent needs recognizers over the same alphabet")
    return isomorphic(minimize(r1), minimize(r2))


def complete(d: Dfa) -> Dfa:
    """Add a single dead state so every (state, symbol) has a transition."""
    n = d.num_states
    dead = n
    trans = list(d.transitions)
    for q in range(n + 1):
        for a in range(len(d.input_table)):
            if q == dead or d.step(q, a) is None:
                trans.append((q, a, EPS, dead))
    return Dfa(d.input_table, EMPTY_TABLE, n + 1, d.initial, d.final, trans)


def complement(t: Transducer) -> Dfa:
    _require_recognizer(t, "complement")
    full = complete(determinize(t))
    flipped = frozenset(range(full.num_states)) - full.final
    return minimize(
        Transducer(full.input_table, EMPTY_TABLE, full.num_states, full.initial, flipped, full.transitions)
    )


def intersect(r1: Transducer, r2: Transducer) -> Transducer:
    """Product recognizer of ``L(r1) & L(r2)``."""
    _require_recognizer(r1, "intersect")
    _require_recognizer(r2, "intersect")
    if r1.input_table != r2.input_table:
        raise ContractError("intersect needs recognizers over the same alphabet")
    return compose(to_filter(r1), r2)


def accepts(t: Transducer, word: Sequence[int]) -> bool:
    """Membership of ``word`` in the input language of ``t``."""
    if isinstance(t, Dfa):
        q = t.run(word)
        return q is not None and q in t.final
    eps = {}
    moves = {}
    for s, i, _o, d in t.transitions:
        if i == EPS:
            eps.setdefault(s, []).append(d)
        else:
            moves.setdefault((s, i), []).append(d)
    current = _closure(t.initial, _Adj(eps))
    for sym in word:
        nxt = [d for q in current for d in moves.get((q, sym), ())]
        if not nxt:
            return False
        current = _closure(nxt, _Adj(eps))
    return not current.isdisjoint(t.final)


class _Adj(dict):
    def __missing__(self, key):
        return ()


def _closure(seed: Iterable[int], eps: _Adj) -> set[int]:
    seen = set(seed)
    stack = list(seen)
    while stack:
        for r in eps[stack.pop()]:
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return seen


def _output_recognizer(t: Transducer) -> Transducer:
    return Transducer(
        t.output_table,
        EMPTY_TABLE,
        t.num_states,
        t.initial,
        t.final,
        [(s, o, EPS, d) for s, _i, o, d in t.transitions],
    )


def enumerate_language(t: Transducer, max_count: int = 10_000) -> list[Word]:
    """All words of a finite language, in shortlex order.

    Generators are transposed first, so their output language is listed.
    """
    if t.is_generator and not t.is_recognizer:
        t = transpose(t)
    d = minimize(t)
    if not d.final:
        return []
    out = {}
    for s, i, _o, dst in d.transitions:
        out.setdefault(s, []).append((i, dst))
    # Every state of a minimal partial DFA is live, so any cycle is productive.
    color = [0] * d.num_states
    stack = [(d.start, iter(out.get(d.start, ())))]
    color[d.start] = 1
    while stack:
        q, it = stack[-1]
        nxt = next(it, None)
        if nxt is None:
            color[q] = 2
            stack.pop()
            continue
        r = nxt[1]
        if color[r] == 1:
            raise InfiniteLanguageError("language is infinite")
        if color[r] == 0:
            color[r] = 1
            stack.append((r, iter(out.get(r, ()))))

    words = []
    stack = [(d.start, ())]
    while stack:
        q, prefix = stack.pop()
        if q in d.final:
            words.append(prefix)
            if len(words) > max_count:
                raise LimitExceededError(f"more than {max_count} words")
        for sym, r in out.get(q, ()):
            stack.append((r, prefix + (sym,)))
    words.sort(key=lambda w: (len(w), w))
    return words


def transduce(t: Transducer, word: Sequence[int], limit: int = 10_000) -> set[Word]:
    """The set ``{v : word -> v}``; raises if that set is infinite."""
    paths = trim(compose(word_filter(t.input_table, word), t))
    if paths.num_states == 0:
        return set()
    try:
        return set(enumerate_language(_output_recognizer(paths), limit))
    except InfiniteLanguageError:
        raise UnboundedTransductionError(
            f"infinitely many outputs for input of length {len(word)}"
        ) from None


def reduce_transducer(t: Transducer) -> Transducer:
    """Shrink a transducer by minimizing it as a recognizer over label pairs.

    Each ``(input, output)`` pair becomes one symbol, ``(eps, eps)`` becomes a
    plain epsilon move. The relation is preserved; minimality is not promised.
    """
    pairs = sorted({(i, o) for _s, i, o, _d in t.transitions if (i, o) != (EPS, EPS)})
    index = {p: k for k, p in enumerate(pairs)}

    def show(table, sym):
        return EPSILON_LABEL if sym == EPS else table.label(sym)

    pair_table = SymbolTable(
        tuple(f"{show(t.input_table, i)}|{show(t.output_table, o)}" for i, o in pairs)
    )
    as_recognizer = Transducer(
        pair_table,
        EMPTY_TABLE,
        t.num_states,
        t.initial,
        t.final,
        [(s, index[(i, o)] if (i, o) != (EPS, EPS) else EPS, EPS, d) for s, i, o, d in t.transitions],
    )
    m = minimize(as_recognizer)
    return Transducer(
        t.input_table,
        t.output_table,
        m.num_states,
        m.initial,
        m.final,
        [(s, *pairs[p], d) for s, p, _o, d in m.transitions],
    )


def minimize_generator(t: Transducer) -> Transducer:
    """Minimize a generator through its transpose."""
    if not t.is_generator:
        raise ContractError("minimize_generator needs a generator (empty input alphabet)")
    return transpose(minimize(transpose(t)))
