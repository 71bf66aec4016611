"""Threshold directability: only transitions with degree strictly above tau count."""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction

from dirfuzz.core import FuzzyAutomaton, Nfa, Word, to_weight, weight_vector
from dirfuzz.directability import Mode, holds


def threshold(tau) -> Fraction:
    tau = to_weight(tau)
    if not 0 <= tau < 1:
        raise ValueError(f"threshold must satisfy 0 <= tau < 1, got {tau}")
    return tau


def tau_cut(F: FuzzyAutomaton, tau) -> Nfa:
    tau = threshold(tau)
    rel: dict[tuple[str, str], set[str]] = {}
    for (a, x, b), w in F.weights.items():
        if w > tau:
            rel.setdefault((a, x), set()).add(b)
    F.successors  # validates F
    return Nfa(F.states, F.alphabet, rel)


def cut_sets(F: FuzzyAutomaton, word, tau: Fraction) -> list[int]:
    """Bit-sets ``{b | f*(a, word, b) > tau}`` for each start state ``a``."""
    levels, _ = F.ranked
    floor = bisect_right(levels, tau) - 1  # highest rank whose weight is <= tau
    out = []
    for a in range(F.n):
        vec = weight_vector(F, a, word)
        out.append(sum(1 << b for b, r in enumerate(vec) if r > floor))
    return out


def check_word_tau(F: FuzzyAutomaton, w: Word | str, tau, mode: Mode | str) -> bool:
    """Mode condition on the sets of states reached with degree above ``tau``.

    Computed from the extended max-min weights, not from :func:`tau_cut`.
    """
    return holds(cut_sets(F, F.encode_word(w), threshold(tau)), Mode.parse(mode))
