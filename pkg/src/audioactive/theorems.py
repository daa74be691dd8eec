"""Machine-checked Splitting and Cosmological theorems.

The splitting pipeline iterates ``R(n+1) = min(Sink . Audio+^(n+1))`` as
``minimize(compose(Audio+, R(n)))`` until two consecutive recognizers
coincide. The cosmological pipeline does the same for the generators
``AtomicF . Audio^n . Src`` through the shortcut
``AtomicF . Audio . (AtomicF . Audio^(n-1) . Src)``, then lists the
surviving atoms.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from typing import Callable

from . import chemistry, fst
from .fst import Dfa, Transducer
from .machines import (
    A,
    B,
    build_audio,
    build_audio_plus,
    build_mark,
    build_multi,
    build_scissors,
    build_sink,
    build_src,
)

SPLITTING_SIZES = (13, 25, 37, 40, 37, 29, 28, 27, 21)
SPLITTING_FIXED_POINT = 9
SPLITTING_STATES = 21
ATOM_STATES = 26
COSMOLOGY_SIZES = (
    43, 138, 266, 409, 534, 592, 570, 513, 430, 361, 320, 310, 308,
    278, 248, 255, 258, 266, 277, 273, 267, 258, 251, 243, 243,
)
COSMOLOGY_FIXED_POINT = 24
ELEMENT_COUNT = 94
AUDIO_SRC_25_STATES = 194_625

# Hand-entered recognizers, one column per state; "-" is a missing edge.
SPLITTING_TABLE = """
state   S a b c d e f g h i j k l m n o p q r s t
initial x - - - - - - - - - - - - - - - - - - - -
final   x x x x x x x x x x x x x x - x - - x x -
1       a b c - a a a a a a a a a - - p q c b a -
2       d d d d e f - d d d d d d n o - f - e d -
3       g g g g g g g h i - g g g - - r i - - g -
d       j j j j j j j j j j k l - - - s l - k t l
*       S m m m o o o m m m l l l m - o - - m l -
"""

ATOM_TABLE = """
state   S a b c d e f g h i j k l m n o p q r s t u v w x y
initial x - - - - - - - - - - - - - - - - - - - - - - - - -
final   - x x x x x - - x - - - - - x x x x x - - - - x x x
1       a b c - e c - e e j k c - - a a - - - - - - - a e e
2       x d d d g f g h - l - - m h d d - - - - - - - d y h
3       w w w w i u - i i n - - - - o - - - - - - n - n i i
d       p p p p t v - t t s - - - - p p q r - t r - q p t t
"""


class ProofFailure(Exception):
    pass


class ResourceLimitExceeded(Exception):
    pass


def parse_table(text: str, table) -> Dfa:
    """Read a state table laid out one column per state into a DFA."""
    rows = [line.split() for line in text.strip().splitlines()]
    header = rows[0][1:]
    ids = {name: i for i, name in enumerate(header)}
    initial = final = None
    trans = []
    for row in rows[1:]:
        key, cells = row[0], row[1:]
        if key == "initial":
            initial = {ids[s] for s, c in zip(header, cells) if c == "x"}
        elif key == "final":
            final = {ids[s] for s, c in zip(header, cells) if c == "x"}
        else:
            sym = table.index(key)
            trans += [(ids[s], sym, fst.EPS, ids[c]) for s, c in zip(header, cells) if c != "-"]
    return Dfa(table, fst.EMPTY_TABLE, len(header), initial, final, trans)


@dataclass
class SplittingReport:
    sizes: list[int]
    fixed_point_n: int | None
    recognizers: list[Dfa] = field(repr=False)

    @property
    def splitting_recognizer(self) -> Dfa:
        if self.fixed_point_n is None:
            raise ProofFailure("no fixed point, so no splitting recognizer")
        return self.recognizers[self.fixed_point_n - 1]

    def recognizer(self, n: int) -> Dfa:
        """The minimized recognizer of ``Sink . Audio+^n``."""
        return self.recognizers[n - 1]

    def to_json(self) -> dict:
        return {"sizes": self.sizes, "fixed_point_n": self.fixed_point_n}


def sink_audio_plus(n: int) -> Dfa:
    """Minimized ``Sink . Audio+^n``, folding minimization into every step."""
    audio_plus = build_audio_plus()
    r = fst.minimize(build_sink(B))
    for _ in range(n):
        r = fst.minimize(fst.compose(audio_plus, r))
    return r


def prove_splitting(max_n: int = 10) -> SplittingReport:
    """Iterate the splitting recurrence up to ``max_n`` and locate its fixed point.

    One step past the fixed point is computed as well and must agree.
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    audio_plus = build_audio_plus()
    r = fst.minimize(build_sink(B))
    recognizers = []
    fixed = None
    n = 0
    while n < max_n or (fixed is not None and n < fixed + 2):
        r = fst.minimize(fst.compose(audio_plus, r))
        recognizers.append(r)
        n += 1
        if fixed is None and n >= 2 and fst.isomorphic(recognizers[-2], r):
            fixed = n - 1
    if fixed is not None and not fst.isomorphic(recognizers[fixed - 1], recognizers[fixed + 1]):
        raise ProofFailure(f"recognizers agree at {fixed}, {fixed + 1} but not at {fixed + 2}")
    return SplittingReport([x.num_states for x in recognizers[:max_n]], fixed, recognizers)


def day_one_recognizer() -> Dfa:
    """``Sink . Audio``: the words with no run of four."""
    return fst.minimize(fst.compose(build_audio(), build_sink(A)))


def build_atom_recognizer(splitting: Dfa) -> Dfa:
    """Words of day one that admit no interior splitting point."""
    reducible = fst.compose(build_mark(), splitting)
    irreducible = fst.complement(reducible)
    return fst.minimize(fst.compose(fst.to_filter(day_one_recognizer()), irreducible))


def build_atomicf(splitting: Dfa, atom: Dfa) -> Transducer:
    """Transducer mapping a word to each of its atomic factors.

    Marks are inserted anywhere, only splittings survive, one marked-off
    piece is cut out, and only atoms are kept.
    """
    t = fst.compose(build_multi(), fst.to_filter(splitting))
    t = fst.trim(fst.compose(t, build_scissors()))
    t = fst.trim(fst.compose(t, fst.to_filter(atom)))
    return fst.reduce_transducer(t)


@dataclass
class CosmologyReport:
    sizes: list[int]
    fixed_point_n: int | None
    elements: list[str]
    named: dict[str, str]
    recognizers: list[Dfa] = field(repr=False)

    def to_json(self) -> dict:
        return {
            "sizes": self.sizes,
            "fixed_point_n": self.fixed_point_n,
            "elements": self.elements,
            "named": self.named,
        }


def atomicf_audio(atomicf: Transducer) -> Transducer:
    """``AtomicF . Audio`` after pair-alphabet reduction."""
    return fst.reduce_transducer(fst.trim(fst.compose(build_audio(), atomicf)))


def prove_cosmological(
    atomicf: Transducer,
    max_n: int = 25,
    table: chemistry.PeriodicTable = chemistry.PERIODIC_TABLE,
) -> CosmologyReport:
    """Find the first ``n`` where the atoms of day-``n`` words stop changing.

    ``recognizers[n]`` is the minimal DFA of the atomic factors of
    ``C^n(W_day-one)``, index 0 being the atoms themselves.
    """
    step = atomicf_audio(atomicf)
    gen = fst.minimize_generator(fst.trim(fst.compose(build_src(A), atomicf)))
    recognizers = [fst.transpose(gen)]
    fixed = None
    n = 0
    while n < max_n or (fixed is not None and n < fixed + 2):
        gen = fst.minimize_generator(fst.trim(fst.compose(gen, step)))
        recognizers.append(Dfa._unchecked(*_fields(fst.transpose(gen))))
        n += 1
        if fixed is None and n >= 2 and fst.isomorphic(recognizers[-2], recognizers[-1]):
            fixed = n - 1
    elements: list[str] = []
    named: dict[str, str] = {}
    if fixed is not None:
        if not fst.isomorphic(recognizers[fixed], recognizers[fixed + 2]):
            raise ProofFailure(f"atom sets agree at {fixed}, {fixed + 1} but not at {fixed + 2}")
        try:
            words = fst.enumerate_language(recognizers[fixed], max_count=10_000)
        except fst.InfiniteLanguageError:
            raise chemistry.InvariantViolation("the stable atom set is infinite") from None
        elements = [A.decode(w) for w in words]
        for w in elements:
            try:
                named[w] = table.by_word(w).name
            except chemistry.ElementNotFound:
                pass
    sizes = [r.num_states for r in recognizers[1 : max_n + 1]]
    return CosmologyReport(sizes, fixed, elements, named, recognizers)


def _fields(t: Transducer):
    return t.input_table, t.output_table, t.num_states, t.initial, t.final, t.transitions


@dataclass
class Verdict:
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"passed": self.passed, "failures": self.failures}


def automaton_predicates(splitting: Dfa, atom: Dfa) -> tuple[Callable, Callable]:
    """``splits(u, v)`` and ``is_atom(w)`` backed by the two recognizers."""

    def splits(u: str, v: str) -> bool:
        return fst.accepts(splitting, B.encode(u + "◊" + v))

    def is_atom(w: str) -> bool:
        return fst.accepts(atom, A.encode(w))

    return splits, is_atom


def verify_periodic_table(
    report: CosmologyReport,
    table: chemistry.PeriodicTable = chemistry.PERIODIC_TABLE,
    splitting: Dfa | None = None,
    atom: Dfa | None = None,
) -> Verdict:
    """Compare the enumerated atoms and their decays with the element table."""
    failures = []
    found = set(report.elements)
    expected = {e.word for e in table}
    for w in sorted(found - expected):
        failures.append(f"enumerated word {w} is not in the table")
    for w in sorted(expected - found):
        failures.append(f"table word {w} ({table.by_word(w).name}) was not enumerated")
    if splitting is not None and atom is not None:
        splits, is_atom = automaton_predicates(splitting, atom)
    else:
        oracle = chemistry.SplittingOracle()
        splits, is_atom = oracle.splits, oracle.is_atom
    for e in table:
        factors = chemistry.atomic_factorization(chemistry.derive_word(e.word), splits, is_atom)
        names = []
        for f in factors:
            try:
                names.append(table.by_word(f).name)
            except chemistry.ElementNotFound:
                failures.append(f"{e.name} decays into {f}, which is not an element")
                names.append("?")
        if tuple(names) != e.decay:
            failures.append(f"{e.name} decays into {' '.join(names)}, table says {' '.join(e.decay)}")
        for name in e.decay:
            if table.by_name(name).word not in found and found:
                failures.append(f"decay product {name} of {e.name} is not in the stable set")
    return Verdict(failures)


def audit_audio_src(n: int, limit_states: int | None = None) -> int:
    """State count of the minimized generator ``Audio^n . Src``."""
    if not 1 <= n <= 25:
        raise ValueError("n must be between 1 and 25")
    audio = build_audio()
    gen = fst.minimize_generator(fst.trim(fst.compose(build_src(A), audio)))
    for _ in range(n - 1):
        raw = fst.trim(fst.compose(gen, audio))
        if limit_states is not None and raw.num_states > limit_states:
            raise ResourceLimitExceeded(f"{raw.num_states} states exceeds the limit of {limit_states}")
        gen = fst.minimize_generator(raw)
    return gen.num_states


@functools.lru_cache(maxsize=None)
def standard_machines() -> dict[str, Transducer]:
    """Splitting, Atom and AtomicF, built once per process."""
    splitting = prove_splitting(10).splitting_recognizer
    atom = build_atom_recognizer(splitting)
    return {"splitting": splitting, "atom": atom, "atomicf": build_atomicf(splitting, atom)}


def build_named(name: str) -> Transducer:
    return standard_machines()[name]


def report_json(report, verdict: Verdict | None = None) -> str:
    data = report.to_json()
    if verdict is not None:
        data["verdict"] = verdict.to_json()
    return json.dumps(data, indent=2, ensure_ascii=False)
