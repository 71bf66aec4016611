from fractions import Fraction

import pytest
from hypothesis import given, settings

from dirfuzz import FuzzyAutomaton, Nfa, ParseError, is_complete, parse_automaton, to_nfa, write_automaton
from dirfuzz.algebra import direct_product
from dirfuzz.fileformat import DuplicateTransitionError, WeightRangeError
from dirfuzz.generate import random_automaton
from conftest import DATA
from strategies import automata

HEAD = "fza v1\nstates: a b\nalphabet: x\n"


def test_parse_example():
    F = parse_automaton((DATA / "example31.fza").read_text())
    assert isinstance(F, FuzzyAutomaton)
    assert F.states == ("a", "b", "c") and F.alphabet == ("x", "y")
    assert len(F.weights) == 6
    assert F.weight("c", "x", "c") == Fraction(3, 5)


def test_duplicate_transition():
    with pytest.raises(DuplicateTransitionError) as info:
        parse_automaton(HEAD + "a x b 0.30\na x b 3/10\n")
    assert info.value.lineno == 5


@pytest.mark.parametrize("w", ["1.5", "0", "0.0", "2/1"])
def test_weight_out_of_range(w):
    with pytest.raises(WeightRangeError):
        parse_automaton(HEAD + f"a x b {w}\n")


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("fza v2\nstates: a\nalphabet: x\n", 1),
        ("fza v1\nalphabet: x\nstates: a\n", 2),
        (HEAD + "a x c 1\n", 4),
        (HEAD + "a z b 1\n", 4),
        (HEAD + "a x b\n", 4),
        (HEAD + "a x b 1e-1\n", 4),
        (HEAD + "a x b 1/0\n", 4),
        ("fza v1\nstates: a a\nalphabet: x\n", 2),
        ("", 1),
    ],
)
def test_syntax_errors(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_automaton(text)
    assert info.value.lineno == lineno


def test_comments_and_blank_lines():
    F = parse_automaton("fza v1  # header\n\nstates: a b\nalphabet: x\n# note\na x b .5 # half\n")
    assert F.weights == {("a", "x", "b"): Fraction(1, 2)}


def test_nfa_file():
    N = parse_automaton("nfa v1\nstates: p q\nalphabet: x\np x q\nq x q\nq x p\n")
    assert isinstance(N, Nfa)
    assert N.relation["q", "x"] == {"p", "q"}
    assert is_complete(N)
    assert parse_automaton(write_automaton(N)) == N


def test_write_canonical(ex31):
    text = write_automaton(ex31)
    assert text == (DATA / "golden" / "example31_canonical.fza").read_text()
    assert "a x b 3/10" in text
    assert parse_automaton(text) == ex31


def test_write_product_names():
    F, G = random_automaton(1, 2, 1, 1), random_automaton(2, 2, 1, 1)
    text = write_automaton(direct_product(F, G))
    assert "states: (q0,q0) (q0,q1) (q1,q0) (q1,q1)" in text
    assert parse_automaton(text) == direct_product(F, G)


def test_write_nfa_of_example(ex31):
    assert parse_automaton(write_automaton(to_nfa(ex31))) == to_nfa(ex31)


@settings(max_examples=100, deadline=None)
@given(automata())
def test_round_trip(F):
    assert parse_automaton(write_automaton(F)) == F


def test_random_is_deterministic():
    assert random_automaton(7, 4, 2, "1/3") == random_automaton(7, 4, 2, "1/3")
    assert random_automaton(7, 4, 2, "1/3") != random_automaton(8, 4, 2, "1/3")


def test_random_complete():
    for seed in range(20):
        assert is_complete(random_automaton(seed, 5, 3, "1/10", complete=True))


def test_random_saturated():
    F = random_automaton(3, 3, 2, 1)
    assert len(F.weights) == 3 * 3 * 2
    assert all(w.denominator in (1, 2, 4, 8) and 0 < w <= 1 for w in F.weights.values())
