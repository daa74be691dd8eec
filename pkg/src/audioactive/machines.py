"""The concrete machines: marks, scissors, counters, sink/source, Audio, Audio+.

Alphabets are ``A = {1, 2, 3, d}`` and ``B = A + {◊}``. ``d`` stands for any
digit of value at least four; here it is just a fourth symbol.
"""

from __future__ import annotations

from .fst import DIAMOND, EMPTY_TABLE, EPS, SymbolTable, Transducer, universal

A = SymbolTable(("1", "2", "3", "d"))
B = SymbolTable(("1", "2", "3", "d", DIAMOND))
MARK = B.index(DIAMOND)

MACHINE_NAMES = (
    "multi", "mark", "scissors",
    "counter1", "counter2", "counter3", "counterd",
    "sink", "src", "audio", "audio+",
    "splitting", "atom", "atomicf",
)


def build_multi() -> Transducer:
    """Insert any number of ◊ anywhere in a word over A."""
    trans = [(0, a, a, 0) for a in range(len(A))]
    trans.append((0, EPS, MARK, 0))
    return Transducer(A, B, 1, {0}, {0}, trans)


def build_mark() -> Transducer:
    """Insert exactly one ◊ strictly inside a nonempty word; keep the empty word."""
    first, left, right, last = range(4)
    trans = []
    for a in range(len(A)):
        trans += [(first, a, a, left), (left, a, a, left), (right, a, a, right), (right, a, a, last)]
    trans.append((left, EPS, MARK, right))
    return Transducer(A, B, 4, {first}, {first, last}, trans)


def build_scissors() -> Transducer:
    """``u◊v◊w -> v`` for ◊-free ``v``."""
    before, inside, after = range(3)
    trans = []
    for b in range(len(B)):
        trans += [(before, b, EPS, before), (after, b, EPS, after)]
        if b != MARK:
            trans.append((inside, b, b, inside))
    trans += [(before, MARK, EPS, inside), (inside, MARK, EPS, after)]
    return Transducer(B, A, 3, {before}, {after}, trans)


def _counter_edges(symbol: int, base: int, table: SymbolTable):
    """Edges of the bounded counter for ``symbol`` using states ``base..base+5``.

    ``base`` is the entry state, ``base + 5`` the exit state.
    """
    one, two, three = (table.index(c) for c in "123")
    entry, n1, n2, n3, n3b, exit_ = range(base, base + 6)
    return [
        (entry, symbol, one, n1),
        (entry, symbol, two, n2),
        (entry, symbol, three, n3),
        (n1, EPS, symbol, exit_),
        (n2, symbol, symbol, exit_),
        (n3, symbol, symbol, n3b),
        (n3b, symbol, EPS, exit_),
    ]


def build_counter(symbol: str) -> Transducer:
    """``a -> 1a``, ``aa -> 2a``, ``aaa -> 3a`` and nothing else."""
    return Transducer(A, A, 6, {0}, {5}, _counter_edges(A.index(symbol), 0, A))


def build_sink(table: SymbolTable = A) -> Transducer:
    return universal(table)


def build_src(table: SymbolTable = A) -> Transducer:
    """Generator of every word over ``table``."""
    return Transducer(EMPTY_TABLE, table, 1, {0}, {0}, [(0, EPS, b, 0) for b in range(len(table))])


def _audio(table: SymbolTable, marks: bool) -> Transducer:
    # Four counter blocks (6 states each) and four connector states.
    heads = [6 * k for k in range(4)]
    exits = [6 * k + 5 for k in range(4)]
    n12, p12, n3d, p3d = 24, 25, 26, 27
    trans = []
    for k in range(4):
        trans += _counter_edges(k, heads[k], table)
    h1, h2, h3, hd = heads
    x1, x2, x3, xd = exits
    for src, dst in [
        (x1, h2), (x2, h1), (x3, hd), (xd, h3),
        (p12, h1), (p12, h2), (p3d, h3), (p3d, hd),
        (x1, n12), (x2, n12), (x3, n3d), (xd, n3d),
        (n12, p3d), (n3d, p12),
    ]:
        trans.append((src, EPS, EPS, dst))
    if marks:
        mark = table.index(DIAMOND)
        trans += [(h, mark, mark, h) for h in heads]
    return Transducer(table, table, 28, {p12, p3d}, set(heads), trans)


def build_audio() -> Transducer:
    """28-state transducer computing one look-and-say step on day-one words."""
    return _audio(A, marks=False)


def build_audio_plus() -> Transducer:
    """Audio over B, copying ◊ when read between two runs."""
    return _audio(B, marks=True)


def build(name: str) -> Transducer:
    """Build a machine by its command-line name."""
    name = name.lower()
    simple = {
        "multi": build_multi,
        "mark": build_mark,
        "scissors": build_scissors,
        "sink": build_sink,
        "src": build_src,
        "audio": build_audio,
        "audio+": build_audio_plus,
        "audioplus": build_audio_plus,
    }
    if name in simple:
        return simple[name]()
    if name.startswith("counter") and name[7:] in A.labels:
        return build_counter(name[7:])
    if name in ("splitting", "atom", "atomicf"):
        from . import theorems

        return theorems.build_named(name)
    raise KeyError(f"unknown machine {name!r}; known: {', '.join(MACHINE_NAMES)}")
