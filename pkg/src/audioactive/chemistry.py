"""Look-and-say derivation and the element table, without any automata.

Integer words (``IntWord``) are tuples of positive integers, so counts above
nine stay single entries: ten 2s derive to ``(10, 2)``. Words over the
alphabet ``{1, 2, 3, d}`` are plain strings; for derivation ``d`` is read as
the digit 4, which is safe because digits of four or more are only ever
carried along.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from ._periodic import ELEMENTS

IntWord = tuple[int, ...]

D_VALUE = 4
ORACLE_DEPTH = 30


class ChemistryError(Exception):
    pass


class DomainError(ChemistryError, ValueError):
    """Input outside an operation's domain, e.g. a word with a run of four."""


class InvariantViolation(ChemistryError):
    """Internal consistency check failed; indicates a bug, not bad input."""


class ElementNotFound(ChemistryError, KeyError):
    pass


class ConvergenceError(ChemistryError, ArithmeticError):
    pass


def derive(u: Iterable[int]) -> IntWord:
    """One look-and-say step: each maximal run of ``k`` copies of ``v`` becomes ``k, v``."""
    out = []
    for value, run in itertools.groupby(u):
        out.append(sum(1 for _ in run))
        out.append(value)
    return tuple(out)


def derive_n(u: Iterable[int], n: int) -> IntWord:
    if n < 0:
        raise ValueError("n must be >= 0")
    word = tuple(u)
    for _ in range(n):
        word = derive(word)
    return word


def _derive_array(a: np.ndarray) -> np.ndarray:
    if a.size == 0:
        return a
    starts = np.flatnonzero(np.diff(a)) + 1
    starts = np.concatenate(([0], starts))
    out = np.empty(2 * starts.size, dtype=a.dtype)
    out[0::2] = np.diff(np.append(starts, a.size))
    out[1::2] = a[starts]
    return out


def derivation_lengths(u: Iterable[int], n: int) -> list[int]:
    """Lengths of ``u, C(u), ..., C^n(u)``, computed with numpy for long chains."""
    a = np.asarray(tuple(u), dtype=np.int64)
    lengths = [int(a.size)]
    for _ in range(n):
        a = _derive_array(a)
        lengths.append(int(a.size))
    return lengths


_SYMBOL_VALUES = {"1": 1, "2": 2, "3": 3, "d": D_VALUE}


def to_ints(word: str) -> IntWord:
    """``"31d"`` -> ``(3, 1, 4)``."""
    try:
        return tuple(_SYMBOL_VALUES[c] for c in word)
    except KeyError:
        raise DomainError(f"not a word over 1,2,3,d: {word!r}") from None


def to_word(u: Iterable[int]) -> str:
    """Inverse of :func:`to_ints`; values of four or more print as ``d``."""
    return "".join("d" if x >= D_VALUE else str(x) for x in u)


def format_int_word(u: Iterable[int]) -> str:
    """Digits as-is, larger numbers bracketed: ``(10, 2)`` -> ``"[10]2"``."""
    return "".join(str(x) if x < 10 else f"[{x}]" for x in u)


def parse_int_word(text: str) -> IntWord:
    """Inverse of :func:`format_int_word`."""
    out = []
    i = 0
    while i < len(text):
        if text[i] == "[":
            j = text.index("]", i)
            out.append(int(text[i + 1 : j]))
            i = j + 1
        else:
            if not text[i].isdigit() or text[i] == "0":
                raise DomainError(f"bad symbol {text[i]!r} in {text!r}")
            out.append(int(text[i]))
            i += 1
    return tuple(out)


def derive_word(word: str) -> str:
    return to_word(derive(to_ints(word)))


def is_day_one(word: str | Sequence) -> bool:
    """True iff no symbol occurs four times in a row."""
    return all(sum(1 for _ in run) < 4 for _, run in itertools.groupby(word))


class SplittingOracle:
    """Brute-force splitting and atom tests, memoizing derivation ends per instance.

    ``u·v`` splits when ``C^n(uv) = C^n(u) C^n(v)`` for every ``n`` up to
    ``depth``. That holds exactly when the last symbol of ``C^k(u)`` differs
    from the first symbol of ``C^k(v)`` for every ``k < depth``: if they were
    equal at some ``k``, the two runs would merge at step ``k + 1`` and the
    joined derivation would come out two symbols shorter.
    """

    def __init__(self, depth: int = ORACLE_DEPTH):
        self.depth = depth
        self._ends: dict[str, tuple[np.ndarray, np.ndarray]] = {}

    def _chain_ends(self, word: str):
        ends = self._ends.get(word)
        if ends is None:
            a = np.asarray(to_ints(word), dtype=np.int64)
            firsts = np.empty(self.depth, dtype=np.int64)
            lasts = np.empty(self.depth, dtype=np.int64)
            for k in range(self.depth):
                firsts[k] = a[0]
                lasts[k] = a[-1]
                if k + 1 < self.depth:
                    a = _derive_array(a)
            ends = (firsts, lasts)
            self._ends[word] = ends
        return ends

    def splits(self, u: str, v: str) -> bool:
        if not u or not v:
            raise DomainError("split parts must be nonempty")
        if not is_day_one(u + v):
            return False
        return not np.any(self._chain_ends(u)[1] == self._chain_ends(v)[0])

    def boundaries(self, word: str) -> list[int]:
        """Positions ``i`` (``0 < i < len``) where ``word[:i]·word[i:]`` splits."""
        return [i for i in range(1, len(word)) if self.splits(word[:i], word[i:])]

    def is_atom(self, word: str) -> bool:
        return bool(word) and is_day_one(word) and not self.boundaries(word)


def split_oracle(u: str, v: str, depth: int = ORACLE_DEPTH) -> bool:
    return SplittingOracle(depth).splits(u, v)


def split_oracle_literal(u: str, v: str, depth: int = ORACLE_DEPTH) -> bool:
    """The splitting definition verbatim; slow, used to cross-check the oracle."""
    if not is_day_one(u + v):
        return False
    x, y, xy = to_ints(u), to_ints(v), to_ints(u + v)
    for _ in range(depth):
        x, y, xy = derive(x), derive(y), derive(xy)
        if xy != x + y:
            return False
    return True


def atom_oracle(word: str, depth: int = ORACLE_DEPTH) -> bool:
    return SplittingOracle(depth).is_atom(word)


def atomic_factorization(
    word: str,
    splits: Callable[[str, str], bool] | None = None,
    is_atom: Callable[[str], bool] | None = None,
) -> list[str]:
    """Cut ``word`` at every position where it splits.

    ``splits(prefix, suffix)`` and ``is_atom(word)`` default to the
    brute-force oracle; automaton-backed predicates can be passed instead.
    """
    if not word or not is_day_one(word):
        raise DomainError(f"factorization needs a nonempty day-one word, got {word!r}")
    if splits is None or is_atom is None:
        oracle = SplittingOracle()
        splits = splits or oracle.splits
        is_atom = is_atom or oracle.is_atom
    cuts = [i for i in range(1, len(word)) if splits(word[:i], word[i:])]
    edges = [0, *cuts, len(word)]
    factors = [word[a:b] for a, b in zip(edges, edges[1:])]
    for f in factors:
        if not is_atom(f):
            raise InvariantViolation(f"factor {f!r} of {word!r} is not an atom")
    return factors


@dataclass(frozen=True)
class Element:
    name: str
    atomic_number: int
    word: str
    decay: tuple[str, ...]

    @property
    def transuranic(self) -> bool:
        return self.atomic_number > 92


@dataclass(frozen=True)
class PeriodicTable:
    elements: tuple[Element, ...]
    _by_name: dict = field(init=False, repr=False, compare=False)
    _by_word: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_name", {e.name: e for e in self.elements})
        object.__setattr__(self, "_by_word", {e.word: e for e in self.elements})
        if len(self._by_word) != len(self.elements):
            raise InvariantViolation("element words are not distinct")
        for e in self.elements:
            for name in e.decay:
                if name not in self._by_name:
                    raise InvariantViolation(f"{e.name} decays into unknown element {name}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def by_name(self, name: str) -> Element:
        try:
            return self._by_name[name]
        except KeyError:
            raise ElementNotFound(name) from None

    def by_word(self, word: str) -> Element:
        try:
            return self._by_word[word]
        except KeyError:
            raise ElementNotFound(word) from None

    @property
    def common(self) -> tuple[Element, ...]:
        return tuple(e for e in self.elements if not e.transuranic)

    def to_json(self) -> str:
        rows = [
            {"name": e.name, "number": e.atomic_number, "word": e.word, "decay": list(e.decay)}
            for e in self.elements
        ]
        return json.dumps(rows, indent=2)


PERIODIC_TABLE = PeriodicTable(tuple(Element(n, z, w, d) for n, z, w, d in ELEMENTS))


def lookup_element(word: str, table: PeriodicTable = PERIODIC_TABLE) -> Element:
    return table.by_word(word)


def decay_matrix(table: PeriodicTable = PERIODIC_TABLE, transuranic: bool = False) -> np.ndarray:
    """``M[i, j]`` counts element ``j`` in the decay of element ``i``."""
    elements = table.elements if transuranic else table.common
    index = {e.name: i for i, e in enumerate(elements)}
    m = np.zeros((len(elements), len(elements)))
    for i, e in enumerate(elements):
        for name in e.decay:
            m[i, index[name]] += 1
    return m


@dataclass(frozen=True)
class GrowthReport:
    lam: float
    iterations: int
    residual: float


def power_iteration(m: np.ndarray, tol: float = 1e-10, max_iter: int = 100_000) -> GrowthReport:
    """Dominant eigenvalue of a nonnegative matrix.

    Iterates ``x <- M^T x / |M^T x|`` (abundance vectors evolve by ``M^T``)
    and stops once ``|M^T x - lam x| <= tol`` for unit ``x``.
    """
    mt = m.T
    x = np.ones(m.shape[0])
    x /= np.linalg.norm(x)
    for it in range(1, max_iter + 1):
        y = mt @ x
        lam = float(x @ y)
        residual = float(np.linalg.norm(y - lam * x))
        if residual <= tol:
            return GrowthReport(lam, it, residual)
        x = y / np.linalg.norm(y)
    raise ConvergenceError(f"no convergence after {max_iter} iterations (residual {residual:.3g})")


def growth_rate(table: PeriodicTable = PERIODIC_TABLE) -> GrowthReport:
    """Conway's constant from the decay matrix of the 92 common elements."""
    return power_iteration(decay_matrix(table))
