"""D1/D2/D3-directing words: checks, recognizers, shortest words and oracles."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from dirfuzz import _kernels
from dirfuzz.core import (
    Automaton,
    FuzzyAutomaton,
    Nfa,
    Word,
    bits_of,
    indices_of,
    reach_bits,
)

DEFAULT_STATE_CAP = 1_000_000
DEFAULT_ENUMERATION_BUDGET = 2_000_000


class Mode(enum.Enum):
    D1 = 1
    D2 = 2
    D3 = 3

    @classmethod
    def parse(cls, text: "str | Mode") -> "Mode":
        if isinstance(text, Mode):
            return text
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown mode: {text!r} (expected d1, d2 or d3)") from None

    def __str__(self):
        return self.name.lower()


class CapExceededError(RuntimeError):
    """More configurations were discovered than the state cap allows."""

    def __init__(self, cap: int, partial: "DfaRecognizer"):
        self.cap = cap
        self.partial = partial
        super().__init__(f"configuration cap of {cap} exceeded")


class BudgetExceededError(ValueError):
    pass


def holds(sets: Sequence[int], mode: Mode) -> bool:
    """Whether the reachable sets ``F(a_1,w), ..., F(a_n,w)`` satisfy ``mode``.

    Empty sets fail D1 and D3 and compare normally for D2.
    """
    if mode is Mode.D3:
        return reduce(lambda p, q: p & q, sets) != 0
    if any(s != sets[0] for s in sets):
        return False
    if mode is Mode.D2:
        return True
    return len(indices_of(sets[0])) == 1


def check_word(F: FuzzyAutomaton, w: Word | str, mode: Mode | str) -> bool:
    mode = Mode.parse(mode)
    word = F.encode_word(w)
    return holds([reach_bits(F, a, word) for a in range(F.n)], mode)


def nfa_reach(N: Automaton, word: Sequence[int]) -> list[int]:
    sets = [1 << a for a in range(N.n)]
    rows = N.rows
    for x in word:
        sets = [_kernels.image(rows[x], s) for s in sets]
    return sets


def check_word_nfa(N: Nfa, w: Word | str, mode: Mode | str) -> bool:
    mode = Mode.parse(mode)
    return holds(nfa_reach(N, N.encode_word(w)), mode)


@dataclass(frozen=True)
class DfaRecognizer:
    """Deterministic recognizer over configuration vectors.

    State ``i`` is the configuration ``configs[i]``: component ``a`` is the
    bit-set reached from state ``a`` by any word leading to ``i``.  State 0 is
    the initial configuration of singletons.  ``complete`` is False for a
    partial construction cut off by the state cap.
    """

    automaton: Automaton
    mode: Mode
    configs: list[tuple[int, ...]]
    table: list[list[int]]
    finals: frozenset[int]
    complete: bool = True

    initial = 0

    def __len__(self):
        return len(self.configs)

    def run(self, w: Word | str) -> int:
        state = 0
        for x in self.automaton.encode_word(w):
            state = self.table[state][x]
        return state

    def accepts(self, w: Word | str) -> bool:
        if not self.complete:
            raise ValueError("recognizer is partial (state cap exceeded)")
        return self.run(w) in self.finals

    def configuration(self, i: int) -> tuple[frozenset[str], ...]:
        return tuple(self.automaton.decode_states(c) for c in self.configs[i])

    def is_empty(self) -> bool:
        return not self.finals


def _initial(A: Automaton) -> tuple[int, ...]:
    return tuple(1 << a for a in range(A.n))


def build_recognizer(
    A: Automaton, mode: Mode | str, state_cap: int = DEFAULT_STATE_CAP
) -> DfaRecognizer:
    """Recognizer for ``D_mode(A)`` by breadth-first closure from the singletons.

    Raises :class:`CapExceededError`, carrying the partial recognizer, when more
    than ``state_cap`` configurations turn up.
    """
    mode = Mode.parse(mode)
    if state_cap < 1:
        raise ValueError("state_cap must be positive")
    configs, table, _, _, _, truncated = _kernels.explore(
        A.rows, _initial(A), mode.value, state_cap, False
    )
    finals = frozenset(i for i, c in enumerate(configs) if holds(c, mode))
    rec = DfaRecognizer(A, mode, configs, table, finals, complete=not truncated)
    if truncated:
        raise CapExceededError(state_cap, rec)
    return rec


def recognizer_accepts(R: DfaRecognizer, w: Word | str) -> bool:
    return R.accepts(w)


@dataclass(frozen=True)
class DirectabilityReport:
    mode: Mode
    directable: bool
    witness: tuple[str, ...] | None
    explored: int
    truncated: bool


def shortest_directing_word(
    A: Automaton, mode: Mode | str, state_cap: int = DEFAULT_STATE_CAP
) -> DirectabilityReport:
    """Shortlex-least directing word, found by BFS over configurations.

    Letters are tried in declaration order and the search stops at the first
    final configuration discovered, so the witness is shortest and, among the
    shortest, lexicographically least.  ``directable=False`` with
    ``truncated=False`` means there is no directing word at all.
    """
    mode = Mode.parse(mode)
    configs, _, parent, letter, found, truncated = _kernels.explore(
        A.rows, _initial(A), mode.value, state_cap, True
    )
    if found < 0:
        return DirectabilityReport(mode, False, None, len(configs), truncated)
    word = []
    i = found
    while i > 0:
        word.append(letter[i])
        i = parent[i]
    return DirectabilityReport(
        mode, True, A.decode_word(word[::-1]), len(configs), False
    )


def brute_force_directing_words(
    F: FuzzyAutomaton,
    mode: Mode | str,
    max_len: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> set[tuple[str, ...]]:
    """Every directing word of length at most ``max_len``, by plain enumeration."""
    mode = Mode.parse(mode)
    total = sum(F.m**k for k in range(max_len + 1))
    if total > budget:
        raise BudgetExceededError(f"{total} words exceed the enumeration budget of {budget}")
    found = set()
    for k in range(max_len + 1):
        for word in itertools.product(F.alphabet, repeat=k):
            if check_word(F, word, mode):
                found.add(word)
    return found


def bounded_directing_word(
    F: FuzzyAutomaton, mode: Mode | str, max_len: int
) -> tuple[str, ...] | None:
    """A shortest directing word of length at most ``max_len``, or None.

    Enumerates all words length by length but keeps only one representative
    per distinct tuple of reachable sets, which is exact because the mode
    condition depends on nothing else.  Meant as an oracle for horizons far
    beyond what :func:`brute_force_directing_words` can list; it walks the
    sparse weight table rather than the shared kernels.
    """
    mode = Mode.parse(mode)
    start = tuple(1 << a for a in range(F.n))
    layer = {start: ()}
    seen = {start}
    for _ in range(max_len + 1):
        for sets, word in layer.items():
            if holds(sets, mode):
                return F.decode_word(word)
        nxt = {}
        for sets, word in layer.items():
            for x in range(F.m):
                succ = tuple(_fuzzy_image(F, s, x) for s in sets)
                if succ not in seen:
                    seen.add(succ)
                    nxt[succ] = word + (x,)
        if not nxt:
            return None
        layer = nxt
    return None


def _fuzzy_image(F: FuzzyAutomaton, bits: int, x: int) -> int:
    return bits_of(b for a in indices_of(bits) for b, _ in F.successors[x][a])


def powerset_weight(
    F: FuzzyAutomaton, source: Iterable[str], w: Word | str, target: Iterable[str]
) -> Fraction:
    """Degree of the word ``w`` from ``source`` to ``target`` in the power-set automaton.

    Letter steps use ``g(B, x, C) = min{f(b, x, c) | b in B, c in C}``, with the
    minimum over an empty set taken as 0, and words compose by max-min over
    all subsets.  The result does not characterize directing words; it is kept
    to document why configuration vectors are needed.
    """
    n = F.n
    src, dst = F.encode_states(source), F.encode_states(target)
    word = F.encode_word(w)
    weight = {(a, x, b): v for x, per in enumerate(F.successors) for a, row in enumerate(per) for b, v in row}

    def g(B, x, C):
        pairs = [(b, c) for b in indices_of(B) for c in indices_of(C)]
        if not pairs:
            return Fraction(0)
        return min(weight.get((b, x, c), Fraction(0)) for b, c in pairs)

    subsets = range(1 << n)
    vec = {C: Fraction(int(C == src)) for C in subsets}
    for x in word:
        vec = {C: max(min(vec[D], g(D, x, C)) for D in subsets) for C in subsets}
    return vec[dst]
