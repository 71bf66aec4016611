"""Text format for fuzzy automata (``fza v1``) and NFAs (``nfa v1``).

::

    fza v1
    states: a b c
    alphabet: x y
    a x b 0.3        # from letter to weight; decimals or p/q
    b x c 2/5

``#`` starts a comment.  Blank and comment-only lines are skipped, but line
numbers in errors always refer to the physical line.
"""

from __future__ import annotations

import re
from fractions import Fraction

from dirfuzz.core import Automaton, FuzzyAutomaton, Nfa

_WEIGHT = re.compile(r"^(\d+(\.\d+)?|\.\d+|\d+/\d+)$")


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class DuplicateTransitionError(ParseError):
    pass


class WeightRangeError(ParseError):
    pass


def parse_weight(token: str, lineno: int = 0) -> Fraction:
    if not _WEIGHT.match(token):
        raise ParseError(lineno, f"malformed weight: {token!r}")
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(lineno, f"zero denominator: {token!r}")
    w = Fraction(token)
    if not 0 < w <= 1:
        raise WeightRangeError(lineno, f"weight out of range (0,1]: {token}")
    return w


def _declaration(lineno: int, line: str, key: str) -> list[str]:
    head, sep, rest = line.partition(":")
    if not sep or head.strip() != key:
        raise ParseError(lineno, f"expected '{key}: ...'")
    names = rest.split()
    if not names:
        raise ParseError(lineno, f"empty {key} declaration")
    if len(set(names)) != len(names):
        raise ParseError(lineno, f"duplicate name in {key} declaration")
    return names


def parse_automaton(text: str) -> Automaton:
    lines = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise ParseError(1, "empty file")
    lineno, header = lines[0]
    if header.split() not in (["fza", "v1"], ["nfa", "v1"]):
        raise ParseError(lineno, f"bad header {header!r}; expected 'fza v1' or 'nfa v1'")
    fuzzy = header.split()[0] == "fza"
    if len(lines) < 3:
        raise ParseError(lines[-1][0], "missing states/alphabet declarations")
    states = _declaration(*lines[1], "states")
    alphabet = _declaration(*lines[2], "alphabet")
    known_states, known_letters = set(states), set(alphabet)
    seen: dict[tuple[str, str, str], int] = {}
    weights: dict[tuple[str, str, str], Fraction] = {}
    for lineno, line in lines[3:]:
        fields = line.split()
        want = 4 if fuzzy else 3
        if len(fields) != want:
            raise ParseError(lineno, f"expected {want} fields, got {len(fields)}")
        a, x, b = fields[:3]
        for s in (a, b):
            if s not in known_states:
                raise ParseError(lineno, f"unknown state: {s}")
        if x not in known_letters:
            raise ParseError(lineno, f"unknown letter: {x}")
        if (a, x, b) in seen:
            raise DuplicateTransitionError(
                lineno, f"duplicate transition {a} {x} {b} (first on line {seen[a, x, b]})"
            )
        seen[a, x, b] = lineno
        weights[a, x, b] = parse_weight(fields[3], lineno) if fuzzy else Fraction(1)
    if fuzzy:
        return FuzzyAutomaton(states, alphabet, weights)
    return Nfa.from_triples(states, alphabet, weights)


def write_automaton(A: Automaton) -> str:
    """Canonical text: declaration order, transitions sorted, reduced fractions."""
    si, li = A.state_index, A.letter_index
    order = lambda t: (si[t[0]], li[t[1]], si[t[2]])  # noqa: E731
    if isinstance(A, FuzzyAutomaton):
        head = "fza v1"
        body = [f"{a} {x} {b} {A.weights[a, x, b]}" for a, x, b in sorted(A.weights, key=order)]
    else:
        head = "nfa v1"
        body = [f"{a} {x} {b}" for a, x, b in A.triples()]
    lines = [head, "states: " + " ".join(A.states), "alphabet: " + " ".join(A.alphabet), *body]
    return "\n".join(lines) + "\n"


def read_automaton(path) -> Automaton:
    with open(path, encoding="utf-8") as fh:
        return parse_automaton(fh.read())
