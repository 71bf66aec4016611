"""Pairwise D3-merging: the k-mergeability relations and the worklist test."""

from __future__ import annotations

from dataclasses import dataclass

from dirfuzz import _kernels
from dirfuzz.core import FuzzyAutomaton, Word, incomplete_pair, indices_of, reach_bits


class IncompleteAutomatonError(ValueError):
    """The merge test needs every (state, letter) pair to have a successor."""

    def __init__(self, state: str, letter: str):
        self.state = state
        self.letter = letter
        super().__init__(f"automaton is incomplete: no transition from {state} on {letter}")


def d3_merges(F: FuzzyAutomaton, w: Word | str, a: str, b: str) -> bool:
    word = F.encode_word(w)
    si = F.state_index
    return reach_bits(F, si[a], word) & reach_bits(F, si[b], word) != 0


def _inverted_bits(F: FuzzyAutomaton) -> list[list[int]]:
    inv = [[0] * F.n for _ in range(F.m)]
    for x, per_letter in enumerate(F.rows):
        for i, succ in enumerate(per_letter):
            for a in indices_of(succ):
                inv[x][a] |= 1 << i
    return inv


def inverted_table(F: FuzzyAutomaton) -> dict[tuple[str, str], frozenset[str]]:
    """``I[a, x]``: the states from which ``x`` can lead to ``a``."""
    inv = _inverted_bits(F)
    return {
        (a, x): F.decode_states(inv[xi][ai])
        for xi, x in enumerate(F.alphabet)
        for ai, a in enumerate(F.states)
    }


@dataclass(frozen=True)
class MuRelation:
    """A reflexive, symmetric relation on the states, as ordered name pairs."""

    k: int | None
    pairs: frozenset[tuple[str, str]]

    def __contains__(self, pair):
        return tuple(pair) in self.pairs

    def is_full(self, F: FuzzyAutomaton) -> bool:
        return len(self.pairs) == F.n * F.n


def _mu_step(F: FuzzyAutomaton, rel: set[tuple[int, int]]) -> set[tuple[int, int]]:
    rows = F.rows
    out = set(rel)
    for a in range(F.n):
        for b in range(a + 1, F.n):
            if (a, b) in out:
                continue
            for x in range(F.m):
                sa, sb = indices_of(rows[x][a]), indices_of(rows[x][b])
                if any((p, q) in rel for p in sa for q in sb):
                    out.add((a, b))
                    out.add((b, a))
                    break
    return out


def _named(F: FuzzyAutomaton, k, rel) -> MuRelation:
    return MuRelation(k, frozenset((F.states[a], F.states[b]) for a, b in rel))


def mu(F: FuzzyAutomaton, k: int) -> MuRelation:
    """Pairs D3-merged by some word of length at most ``k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    rel = {(a, a) for a in range(F.n)}
    for _ in range(k):
        nxt = _mu_step(F, rel)
        if nxt == rel:
            break
        rel = nxt
    return _named(F, k, rel)


def mu_chain(F: FuzzyAutomaton) -> list[MuRelation]:
    """``mu(0), mu(1), ...`` up to and including the first repeat."""
    rel = {(a, a) for a in range(F.n)}
    chain = [_named(F, 0, rel)]
    while True:
        nxt = _mu_step(F, rel)
        chain.append(_named(F, len(chain), nxt))
        if nxt == rel:
            return chain
        rel = nxt


def mergeability_closure(F: FuzzyAutomaton) -> MuRelation:
    """The union of all ``mu(k)``.

    Defined for any automaton.  Only for complete automata does a full
    relation mean D3-directable.
    """
    return MuRelation(None, mu_chain(F)[-1].pairs)


@dataclass(frozen=True)
class MergeTestResult:
    directable: bool
    matrix: tuple[tuple[bool, ...], ...]
    pop_count: int
    order: tuple[tuple[str, str], ...]

    def mergeable(self, i: int, j: int) -> bool:
        i, j = min(i, j), max(i, j)
        return i == j or self.matrix[i][j]


def d3_directability_test(F: FuzzyAutomaton) -> MergeTestResult:
    """Decide D3-directability of a complete fuzzy automaton in O(m n^2).

    ``matrix[i][j]`` (``i < j``) is True once states ``i`` and ``j`` are known
    to be D3-mergeable; ``order`` lists pairs as they were queued.  Raises
    :class:`IncompleteAutomatonError` otherwise, because the pairwise criterion
    is unsound without completeness.
    """
    missing = incomplete_pair(F)
    if missing is not None:
        raise IncompleteAutomatonError(*missing)
    n = F.n
    rows, pops, order = _kernels.merge_worklist(_inverted_bits(F), n)
    matrix = tuple(tuple(j > i and bool(rows[i] >> j & 1) for j in range(n)) for i in range(n))
    directable = all(matrix[i][j] for i in range(n) for j in range(i + 1, n))
    named = tuple((F.states[i], F.states[j]) for i, j in order)
    return MergeTestResult(directable, matrix, pops, named)
