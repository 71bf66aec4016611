"""Subautomata, homomorphisms, congruences, quotients and direct products."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

from dirfuzz.core import FuzzyAutomaton, letter_support

StateMap = Mapping[str, str]
Partition = list[list[str]]

ZERO = Fraction(0)


class AlphabetMismatchError(ValueError):
    pass


class NotClosedError(ValueError):
    """A state set is not closed under the transitions."""

    def __init__(self, state: str, letter: str, escaping: str):
        self.witness = (state, letter, escaping)
        super().__init__(f"not closed: {state} --{letter}--> {escaping} leaves the set")


class NotCongruenceError(ValueError):
    def __init__(self, a: str, a2: str, letter: str, block: Sequence[str]):
        self.witness = (a, a2, letter, tuple(block))
        super().__init__(
            f"not a congruence: {a} and {a2} differ on letter {letter} "
            f"into block {{{','.join(block)}}}"
        )


def _same_alphabet(F: FuzzyAutomaton, G: FuzzyAutomaton):
    if F.alphabet != G.alphabet:
        raise AlphabetMismatchError(f"alphabets differ: {F.alphabet} vs {G.alphabet}")


def is_subautomaton(G: FuzzyAutomaton, F: FuzzyAutomaton, embedding: StateMap | None = None) -> bool:
    """Whether ``G`` sits inside ``F`` via the injective ``embedding``.

    The default embedding is by state name.
    """
    _same_alphabet(F, G)
    if embedding is None:
        embedding = {s: s for s in G.states}
    image = [embedding[b] for b in G.states]
    if len(set(image)) != len(image) or not set(image) <= set(F.states):
        return False
    inside = set(image)
    for b in G.states:
        for x in F.alphabet:
            if not letter_support(F, embedding[b], x) <= inside:
                return False
            for b2 in G.states:
                if G.weight(b, x, b2) != F.weight(embedding[b], x, embedding[b2]):
                    return False
    return True


def closure_violation(F: FuzzyAutomaton, B: Iterable[str]) -> tuple[str, str, str] | None:
    inside = set(B)
    for b in F.states:
        if b not in inside:
            continue
        for x in F.alphabet:
            for c in F.states:
                if F.weight(b, x, c) > 0 and c not in inside:
                    return b, x, c
    return None


def induced_subautomaton(F: FuzzyAutomaton, B: Iterable[str]) -> FuzzyAutomaton:
    inside = set(B)
    if not inside:
        raise ValueError("subautomaton needs at least one state")
    unknown = inside - set(F.states)
    if unknown:
        raise ValueError(f"unknown state: {sorted(unknown)[0]!r}")
    bad = closure_violation(F, inside)
    if bad is not None:
        raise NotClosedError(*bad)
    states = [s for s in F.states if s in inside]
    weights = {k: w for k, w in F.weights.items() if k[0] in inside}
    return FuzzyAutomaton(states, F.alphabet, weights)


def closed_sets(F: FuzzyAutomaton) -> list[frozenset[str]]:
    """Every nonempty state set closed under all letters (exhaustive, small n)."""
    out = []
    for r in range(1, F.n + 1):
        for combo in itertools.combinations(F.states, r):
            if closure_violation(F, combo) is None:
                out.append(frozenset(combo))
    return out


def _preimage_max(F: FuzzyAutomaton, a: str, x: str, targets: Iterable[str]) -> Fraction:
    return max((F.weight(a, x, t) for t in targets), default=ZERO)


def is_homomorphism(phi: StateMap, F: FuzzyAutomaton, G: FuzzyAutomaton) -> bool:
    """Check ``g(a phi, x, b) = max{f(a, x, a2) | a2 phi = b}`` everywhere.

    ``b`` ranges over all of ``G``'s states; an empty preimage gives 0.
    """
    _same_alphabet(F, G)
    if set(phi) != set(F.states) or not set(phi.values()) <= set(G.states):
        return False
    pre = {b: [a for a in F.states if phi[a] == b] for b in G.states}
    for a in F.states:
        for x in F.alphabet:
            for b in G.states:
                if G.weight(phi[a], x, b) != _preimage_max(F, a, x, pre[b]):
                    return False
    return True


def _normalize(theta: Iterable[Iterable[str]], F: FuzzyAutomaton) -> Partition:
    blocks = [list(dict.fromkeys(block)) for block in theta]
    members = [s for block in blocks for s in block]
    if any(not block for block in blocks):
        raise ValueError("partition has an empty block")
    if len(members) != len(set(members)):
        raise ValueError("partition blocks overlap")
    if set(members) != set(F.states):
        raise ValueError("partition does not cover exactly the states")
    order = F.state_index
    for block in blocks:
        block.sort(key=order.__getitem__)
    blocks.sort(key=lambda block: order[block[0]])
    return blocks


def congruence_violation(theta, F: FuzzyAutomaton):
    blocks = _normalize(theta, F)
    for block in blocks:
        rep = block[0]
        for a2 in block[1:]:
            for x in F.alphabet:
                for target in blocks:
                    if _preimage_max(F, rep, x, target) != _preimage_max(F, a2, x, target):
                        return rep, a2, x, target
    return None


def is_congruence(theta: Iterable[Iterable[str]], F: FuzzyAutomaton) -> bool:
    return congruence_violation(theta, F) is None


def block_name(block: Sequence[str]) -> str:
    return block[0] if len(block) == 1 else "[" + ",".join(block) + "]"


def quotient(F: FuzzyAutomaton, theta: Iterable[Iterable[str]]) -> FuzzyAutomaton:
    """``F/theta``; singleton blocks keep their state name, others become ``[p,q]``."""
    blocks = _normalize(theta, F)
    bad = congruence_violation(blocks, F)
    if bad is not None:
        raise NotCongruenceError(*bad)
    names = [block_name(b) for b in blocks]
    if len(set(names)) != len(names):
        raise ValueError("quotient block names collide")
    weights = {}
    for src, sname in zip(blocks, names):
        for x in F.alphabet:
            for dst, dname in zip(blocks, names):
                w = max(_preimage_max(F, a, x, dst) for a in src)
                if w > 0:
                    weights[sname, x, dname] = w
    return FuzzyAutomaton(names, F.alphabet, weights)


def block_map(F: FuzzyAutomaton, theta) -> dict[str, str]:
    """The canonical map ``a -> [a]`` onto the states of ``quotient(F, theta)``."""
    return {a: block_name(b) for b in _normalize(theta, F) for a in b}


def kernel(phi: StateMap, states: Sequence[str] | None = None) -> Partition:
    """Preimage classes of ``phi``, ordered by first member in ``states``."""
    states = list(phi) if states is None else list(states)
    classes: dict[str, list[str]] = {}
    for a in states:
        classes.setdefault(phi[a], []).append(a)
    return list(classes.values())


def epimorphic_image(
    phi: StateMap, F: FuzzyAutomaton, codomain: Sequence[str] | None = None
) -> FuzzyAutomaton:
    """The image automaton ``G`` making ``phi: F -> G`` an epimorphism.

    ``codomain`` defaults to the distinct images in order of first appearance.
    """
    if set(phi) != set(F.states):
        raise ValueError("state map must be total on the source states")
    if codomain is None:
        codomain = list(dict.fromkeys(phi[a] for a in F.states))
    if set(phi.values()) != set(codomain):
        raise ValueError("state map is not surjective onto the codomain")
    blocks = kernel(phi, F.states)
    bad = congruence_violation(blocks, F)
    if bad is not None:
        raise NotCongruenceError(*bad)
    Q = quotient(F, blocks)
    rename = {block_name(b): phi[b[0]] for b in _normalize(blocks, F)}
    weights = {(rename[p], x, rename[q]): w for (p, x, q), w in Q.weights.items()}
    return FuzzyAutomaton(list(codomain), F.alphabet, weights)


def pair_name(p: str, q: str) -> str:
    return f"({p},{q})"


def direct_product(F: FuzzyAutomaton, G: FuzzyAutomaton) -> FuzzyAutomaton:
    _same_alphabet(F, G)
    states = [pair_name(a, b) for a in F.states for b in G.states]
    weights = {}
    for (a, x, a2), v in F.weights.items():
        for (b, y, b2), u in G.weights.items():
            if x == y:
                weights[pair_name(a, b), x, pair_name(a2, b2)] = min(v, u)
    return FuzzyAutomaton(states, F.alphabet, weights)


def product_of(*factors: FuzzyAutomaton) -> FuzzyAutomaton:
    """Left fold of :func:`direct_product` over two or more factors."""
    return reduce(direct_product, factors)


def is_isomorphic(F: FuzzyAutomaton, G: FuzzyAutomaton, max_states: int = 8) -> bool:
    """Exhaustive search for a bijective homomorphism; only for small automata."""
    if F.alphabet != G.alphabet or F.n != G.n:
        return False
    if F.n > max_states:
        raise ValueError(f"isomorphism search limited to {max_states} states")
    for perm in itertools.permutations(G.states):
        if is_homomorphism(dict(zip(F.states, perm)), F, G):
            return True
    return False
