"""Seeded random fuzzy automata for fuzzing and experiments."""

from __future__ import annotations

import random
import string
from fractions import Fraction

from dirfuzz.core import FuzzyAutomaton, to_weight

GRID = 8


def state_names(n: int) -> list[str]:
    return [f"q{i}" for i in range(n)]


def letter_names(m: int) -> list[str]:
    if m <= 26:
        return list(string.ascii_lowercase[:m])
    return [f"x{i}" for i in range(m)]


def random_automaton(seed, n: int, m: int, density=Fraction(1, 2), complete: bool = False) -> FuzzyAutomaton:
    """A random automaton determined entirely by its arguments.

    Each transition is present with probability ``density`` and carries a
    weight drawn uniformly from ``{1/8, ..., 8/8}``.  With ``complete=True``
    every empty ``(state, letter)`` row then gets one transition to a random
    state.
    """
    if n < 1 or m < 1:
        raise ValueError("need at least one state and one letter")
    density = to_weight(density)
    if not 0 < density <= 1:
        raise ValueError("density must lie in (0, 1]")
    rng = random.Random(seed)
    states, letters = state_names(n), letter_names(m)
    p, q = density.numerator, density.denominator
    weights = {}
    for a in states:
        for x in letters:
            for b in states:
                if rng.randrange(q) < p:
                    weights[a, x, b] = Fraction(rng.randint(1, GRID), GRID)
    if complete:
        for a in states:
            for x in letters:
                if not any((a, x, b) in weights for b in states):
                    weights[a, x, rng.choice(states)] = Fraction(rng.randint(1, GRID), GRID)
    return FuzzyAutomaton(states, letters, weights)


def random_cover(seed, G: FuzzyAutomaton, n: int, density=Fraction(1, 2)):
    """A random ``F`` on ``n >= |G|`` states with an epimorphism ``phi: F -> G``.

    Returns ``(F, phi)``.  For every state ``a``, letter ``x`` and target
    ``b`` of ``G`` one preimage of ``b`` receives weight ``g(phi(a), x, b)``
    and the other preimages get smaller weights or none, so the defining
    max-equation of a homomorphism holds by construction.
    """
    if n < G.n:
        raise ValueError("cover needs at least as many states as the image")
    density = to_weight(density)
    rng = random.Random(seed)
    states = state_names(n)
    images = list(G.states) + [rng.choice(G.states) for _ in range(n - G.n)]
    rng.shuffle(images)
    phi = dict(zip(states, images))
    fibre = {b: [a for a in states if phi[a] == b] for b in G.states}
    weights = {}
    for a in states:
        for x in G.alphabet:
            for b in G.states:
                top = G.weight(phi[a], x, b)
                if not top:
                    continue
                targets = fibre[b]
                lead = rng.choice(targets)
                weights[a, x, lead] = top
                for t in targets:
                    if t != lead and rng.randrange(density.denominator) < density.numerator:
                        weights[a, x, t] = top * Fraction(rng.randint(1, GRID), GRID)
    return FuzzyAutomaton(states, G.alphabet, weights), phi
