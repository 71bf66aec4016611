"""Fuzzy automata, NFAs and the max-min extended transition function.

States and letters are identified by their display names.  Internally every
automaton is indexed (states ``0..n-1``, letters ``0..m-1`` in declaration
order) and a set of states is a Python ``int`` used as a bit-set, bit ``i``
standing for state ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from dirfuzz import _kernels

Word = Sequence[Union[str, int]]
Triple = tuple[str, str, str]


class InvalidAutomatonError(ValueError):
    """Raised when an operation receives an automaton that fails validation."""

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("; ".join(violations))


def to_weight(value) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Strings accept decimal (``"0.3"``) and fraction (``"3/10"``) literals.
    Floats go through their shortest ``repr`` so ``0.3`` becomes ``3/10``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def bits_of(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << i
    return bits


def indices_of(bits: int) -> list[int]:
    """Members of a bit-set in ascending order."""
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


class _Indexed:
    """Name/index bookkeeping shared by both automaton kinds."""

    states: tuple[str, ...]
    alphabet: tuple[str, ...]

    @cached_property
    def state_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.states)}

    @cached_property
    def letter_index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.alphabet)}

    @property
    def n(self) -> int:
        return len(self.states)

    @property
    def m(self) -> int:
        return len(self.alphabet)

    def encode_word(self, word: Word | str) -> tuple[int, ...]:
        """Letter indices of ``word``.

        A string is split on whitespace (``"x x y"``); other sequences may mix
        letter symbols and integer indices.
        """
        if isinstance(word, str):
            word = word.split()
        out = []
        for letter in word:
            if isinstance(letter, int):
                if not 0 <= letter < self.m:
                    raise ValueError(f"letter index out of range: {letter}")
                out.append(letter)
            else:
                try:
                    out.append(self.letter_index[letter])
                except KeyError:
                    raise ValueError(f"unknown letter: {letter!r}") from None
        return tuple(out)

    def decode_word(self, word: Sequence[int]) -> tuple[str, ...]:
        return tuple(self.alphabet[x] for x in word)

    def encode_states(self, names: Iterable[str]) -> int:
        try:
            return bits_of(self.state_index[s] for s in names)
        except KeyError as e:
            raise ValueError(f"unknown state: {e.args[0]!r}") from None

    def decode_states(self, bits: int) -> frozenset[str]:
        return frozenset(self.states[i] for i in indices_of(bits))

    @property
    def rows(self) -> list[list[int]]:
        """``rows[x][a]`` is the successor bit-set of state ``a`` under letter ``x``."""
        raise NotImplementedError


@dataclass(frozen=True, eq=True)
class FuzzyAutomaton(_Indexed):
    """A max-min fuzzy automaton ``(A, X, f)`` without initial or final states.

    ``weights`` is sparse: a missing ``(from, letter, to)`` key means weight 0.
    Construction coerces weights to :class:`~fractions.Fraction` but does not
    validate; see :func:`validate`.
    """

    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    weights: Mapping[Triple, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(
            self, "weights", {k: to_weight(v) for k, v in dict(self.weights).items()}
        )

    def __hash__(self):
        return hash((self.states, self.alphabet, frozenset(self.weights.items())))

    def weight(self, a: str, x: str, b: str) -> Fraction:
        return self.weights.get((a, x, b), Fraction(0))

    @cached_property
    def _compiled(self):
        violations = validate(self)
        if violations:
            raise InvalidAutomatonError(violations)
        si, li = self.state_index, self.letter_index
        succ = [[[] for _ in self.states] for _ in self.alphabet]
        for (a, x, b), w in self.weights.items():
            succ[li[x]][si[a]].append((si[b], w))
        for per_letter in succ:
            for row in per_letter:
                row.sort()
        return succ

    @property
    def successors(self) -> list[list[list[tuple[int, Fraction]]]]:
        """``successors[x][a]`` lists ``(b, f(a,x,b))`` for positive weights, by ``b``."""
        return self._compiled

    @cached_property
    def rows(self) -> list[list[int]]:
        return [[bits_of(b for b, _ in row) for row in per_letter] for per_letter in self._compiled]

    @cached_property
    def ranked(self) -> tuple[list[Fraction], list[list[list[tuple[int, int]]]]]:
        """Weights replaced by their rank among the distinct stored weights.

        Max-min composition only compares weights, so the extended transition
        function can run on small integers and be mapped back at the end.
        ``levels[r]`` is the weight of rank ``r``; rank 0 is weight 0.
        """
        levels = [Fraction(0)] + sorted(set(self.weights.values()))
        rank = {w: r for r, w in enumerate(levels)}
        table = [
            [[(b, rank[w]) for b, w in row] for row in per_letter] for per_letter in self._compiled
        ]
        return levels, table


@dataclass(frozen=True, eq=True)
class Nfa(_Indexed):
    """An NFA ``(A, X)`` given by one transition relation per letter.

    ``relation`` maps ``(state, letter)`` to the successor set; pairs left out
    are filled in with the empty set.
    """

    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    relation: Mapping[tuple[str, str], frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        given = {k: frozenset(v) for k, v in dict(self.relation).items()}
        unknown = [k for k in given if k[0] not in self.states or k[1] not in self.alphabet]
        if unknown:
            raise ValueError(f"relation key references unknown state or letter: {unknown[0]}")
        for succ in given.values():
            bad = succ - set(self.states)
            if bad:
                raise ValueError(f"unknown state: {sorted(bad)[0]!r}")
        full = {(a, x): given.get((a, x), frozenset()) for x in self.alphabet for a in self.states}
        object.__setattr__(self, "relation", full)

    def __hash__(self):
        return hash((self.states, self.alphabet, frozenset(self.relation.items())))

    @classmethod
    def from_triples(cls, states, alphabet, triples: Iterable[Triple]) -> "Nfa":
        rel: dict[tuple[str, str], set[str]] = {}
        for a, x, b in triples:
            rel.setdefault((a, x), set()).add(b)
        return cls(states, alphabet, rel)

    def triples(self) -> list[Triple]:
        """All ``(a, x, b)`` with ``b in ax``, sorted by declaration order."""
        si, li = self.state_index, self.letter_index
        out = [(a, x, b) for (a, x), succ in self.relation.items() for b in succ]
        out.sort(key=lambda t: (si[t[0]], li[t[1]], si[t[2]]))
        return out

    @cached_property
    def rows(self) -> list[list[int]]:
        return [
            [self.encode_states(self.relation[a, x]) for a in self.states] for x in self.alphabet
        ]


Automaton = Union[FuzzyAutomaton, Nfa]


def validate(F: FuzzyAutomaton) -> list[str]:
    """Violations of the fuzzy automaton invariants; empty iff well-formed."""
    out = []
    if not F.states:
        out.append("empty state set")
    if not F.alphabet:
        out.append("empty alphabet")
    for kind, names in (("state", F.states), ("letter", F.alphabet)):
        seen = set()
        for s in names:
            if not isinstance(s, str) or not s or any(c.isspace() for c in s):
                out.append(f"malformed {kind} name: {s!r}")
            if s in seen:
                out.append(f"duplicate {kind} name: {s}")
            seen.add(s)
    states, letters = set(F.states), set(F.alphabet)
    for key, w in F.weights.items():
        if not (isinstance(key, tuple) and len(key) == 3):
            out.append(f"malformed transition key: {key!r}")
            continue
        a, x, b = key
        for s in (a, b):
            if s not in states:
                out.append(f"unknown state: {s} in {a} {x} {b}")
        if x not in letters:
            out.append(f"unknown letter: {x} in {a} {x} {b}")
        if w == 0:
            out.append(f"zero weight stored: {a} {x} {b}")
        elif not 0 < w <= 1:
            out.append(f"weight out of range: {a} {x} {b} {w}")
    return out


def letter_support(F: FuzzyAutomaton, a: str, x: str) -> frozenset[str]:
    """States ``b`` with ``f(a, x, b) > 0``."""
    row = F.successors[F.letter_index[x]][F.state_index[a]]
    return frozenset(F.states[b] for b, _ in row)


def _fuzzy_step_bits(F: FuzzyAutomaton, bits: int, word: Sequence[int]) -> int:
    # walks the sparse weight table, deliberately not the bit-set rows
    succ = F.successors
    for x in word:
        nxt = 0
        for a in indices_of(bits):
            for b, _ in succ[x][a]:
                nxt |= 1 << b
        bits = nxt
    return bits


def step_set(F: FuzzyAutomaton, H: Iterable[str], w: Word | str) -> frozenset[str]:
    """``F(H, w)``: every state reachable with positive degree from ``H`` by ``w``."""
    return F.decode_states(_fuzzy_step_bits(F, F.encode_states(H), F.encode_word(w)))


def reach_bits(F: FuzzyAutomaton, a: int, word: Sequence[int]) -> int:
    """``F(a, word)`` as a bit-set, via the shared image kernel."""
    rows = F.rows
    bits = 1 << a
    for x in word:
        bits = _kernels.image(rows[x], bits)
    return bits


def weight_vector(F: FuzzyAutomaton, a: int, word: Sequence[int]) -> list[int]:
    """Ranks of ``f*(a, word, b)`` for every ``b`` (see :attr:`FuzzyAutomaton.ranked`)."""
    _, table = F.ranked
    vec = [0] * F.n
    vec[a] = len(F.ranked[0])  # rank above every stored weight stands in for 1 at epsilon
    for x in word:
        vec = _kernels.maxmin_step(vec, table[x])
    return vec


def extended_weight(F: FuzzyAutomaton, a: str, w: Word | str, b: str) -> Fraction:
    """``f*(a, w, b)`` by the max-min recursion over prefixes of ``w``."""
    word = F.encode_word(w)
    ai, bi = F.state_index[a], F.state_index[b]
    if not word:
        return Fraction(int(ai == bi))
    levels, _ = F.ranked
    return levels[weight_vector(F, ai, word)[bi]]


def to_nfa(F: FuzzyAutomaton) -> Nfa:
    """The associated NFA: keep exactly the positive-weight transitions."""
    rel = {
        (a, x): letter_support(F, a, x) for x in F.alphabet for a in F.states
    }
    return Nfa(F.states, F.alphabet, rel)


def nfa_step_set(N: Nfa, H: Iterable[str], w: Word | str) -> frozenset[str]:
    bits = N.encode_states(H)
    rows = N.rows
    for x in N.encode_word(w):
        bits = _kernels.image(rows[x], bits)
    return N.decode_states(bits)


def incomplete_pair(A: Automaton) -> tuple[str, str] | None:
    """First ``(state, letter)`` with empty support, scanning states then letters."""
    rows = A.rows
    for a in range(A.n):
        for x in range(A.m):
            if not rows[x][a]:
                return A.states[a], A.alphabet[x]
    return None


def is_complete(A: Automaton) -> bool:
    return incomplete_pair(A) is None
