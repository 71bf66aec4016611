import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from dirfuzz import (
    CapExceededError,
    Mode,
    brute_force_directing_words,
    build_recognizer,
    check_word,
    check_word_nfa,
    is_complete,
    recognizer_accepts,
    shortest_directing_word,
    to_nfa,
)
from dirfuzz.directability import BudgetExceededError, bounded_directing_word, powerset_weight
from dirfuzz.generate import random_automaton
from oracles import chain_reach, directing, words
from strategies import automata

MODES = list(Mode)


@pytest.mark.parametrize(
    "word, mode, expected",
    [
        ("x x", Mode.D3, True),
        ("y x x", Mode.D3, False),
        ("x x y", Mode.D3, False),
        ("x x", Mode.D1, False),
        ("x x x", Mode.D2, True),
        ("x x x", Mode.D1, False),
    ],
)
def test_check_word_example(ex31, word, mode, expected):
    assert check_word(ex31, word, mode) is expected


@pytest.mark.parametrize("mode", MODES)
def test_empty_word_on_singleton(singleton, mode):
    assert check_word(singleton, "", mode)
    assert check_word_nfa(to_nfa(singleton), "", mode)


def test_mode_parse():
    assert Mode.parse("d2") is Mode.D2
    assert Mode.parse("D3") is Mode.D3
    with pytest.raises(ValueError):
        Mode.parse("d4")


def test_check_word_nfa_example(ex31):
    N = to_nfa(ex31)
    assert check_word_nfa(N, "x x", "d3")
    assert not check_word_nfa(N, "y", "d2")


def test_recognizer_example(ex31):
    R = build_recognizer(ex31, Mode.D3)
    assert R.configuration(0) == ({"a"}, {"b"}, {"c"})
    assert recognizer_accepts(R, "x x")
    assert not recognizer_accepts(R, "")
    assert not recognizer_accepts(R, "x x y")
    for w in words(ex31.alphabet, 4):
        assert R.accepts(w) == check_word(ex31, w, Mode.D3)


def test_recognizer_singleton(singleton):
    R = build_recognizer(singleton, Mode.D1)
    assert len(R) == 1
    assert R.finals == {0}


def test_recognizer_one_letter(one_letter):
    assert build_recognizer(one_letter, Mode.D3).accepts("x x")


def test_recognizer_cap(ex31):
    with pytest.raises(CapExceededError) as info:
        build_recognizer(ex31, Mode.D2, state_cap=2)
    partial = info.value.partial
    assert not partial.complete
    assert len(partial) == 2
    with pytest.raises(ValueError):
        partial.accepts("x")


def test_shortest_example(ex31):
    rep = shortest_directing_word(ex31, Mode.D3)
    assert rep.directable and rep.witness == ("x", "x") and not rep.truncated
    assert shortest_directing_word(ex31, Mode.D2).witness == ("x", "x", "x")
    d1 = shortest_directing_word(ex31, Mode.D1)
    assert not d1.directable and not d1.truncated


def test_shortest_example_51(ex51):
    rep = shortest_directing_word(ex51, Mode.D3)
    assert not rep.directable and not rep.truncated


@pytest.mark.parametrize("mode", MODES)
def test_shortest_singleton(singleton, mode):
    assert shortest_directing_word(singleton, mode).witness == ()


def test_shortest_truncated():
    F = random_automaton(5, 5, 2, Fraction(1, 3))
    rep = shortest_directing_word(F, Mode.D1, state_cap=1)
    assert rep.truncated or rep.directable


def test_brute_force_example(ex31):
    assert brute_force_directing_words(ex31, Mode.D3, 2) == {("x", "x")}
    assert brute_force_directing_words(ex31, Mode.D3, 0) == set()


def test_brute_force_example_51(ex51):
    assert brute_force_directing_words(ex51, Mode.D3, 4) == set()


def test_brute_force_budget(ex31):
    with pytest.raises(BudgetExceededError):
        brute_force_directing_words(ex31, Mode.D3, 30)


def test_powerset_refutation(one_letter):
    A = one_letter.states
    for r in range(1, 4):
        for B in itertools.combinations(A, r):
            assert powerset_weight(one_letter, A, "x x", B) == 0
    assert check_word(one_letter, "x x", Mode.D3)


def test_incompleteness_caveat(ex31):
    # X* D3 and D3 X* are not contained in D3 for incomplete automata
    assert not is_complete(ex31)
    assert check_word(ex31, "x x", Mode.D3)
    assert not check_word(ex31, "y x x", Mode.D3)
    assert not check_word(ex31, "x x y", Mode.D3)


@settings(max_examples=60, deadline=None)
@given(automata(max_states=4, max_letters=2))
def test_check_word_matches_oracle(F):
    for w in words(F.alphabet, 4):
        sets = [chain_reach(F, {a}, w) for a in F.states]
        for mode in MODES:
            assert check_word(F, w, mode) == directing(sets, str(mode))


@settings(max_examples=60, deadline=None)
@given(automata(max_states=4, max_letters=2))
def test_mode_agreement(F):
    N = to_nfa(F)
    for w in words(F.alphabet, 5):
        for mode in MODES:
            assert check_word(F, w, mode) == check_word_nfa(N, w, mode)


@settings(max_examples=60, deadline=None)
@given(automata(max_states=4, max_letters=2))
def test_inclusions_and_closures(F):
    complete = is_complete(F)
    for w in words(F.alphabet, 4):
        d1, d2, d3 = (check_word(F, w, m) for m in MODES)
        if d1:
            assert d2 and d3
        if complete and d2:
            assert d3
        for x in F.alphabet:
            if d2:
                assert check_word(F, w + (x,), Mode.D2)
            if complete and d1:
                assert check_word(F, (x,) + w, Mode.D1)
            for y in F.alphabet:
                if complete and d2:
                    assert check_word(F, (x,) + w + (y,), Mode.D2)
                if complete and d3:
                    assert check_word(F, (x,) + w + (y,), Mode.D3)


@settings(max_examples=50, deadline=None)
@given(automata(max_states=4, max_letters=2))
def test_recognizer_soundness(F):
    for mode in MODES:
        R = build_recognizer(F, mode)
        for w in words(F.alphabet, 5):
            assert R.accepts(w) == check_word(F, w, mode)


@settings(max_examples=50, deadline=None)
@given(automata(max_states=4, max_letters=2))
def test_shortest_is_shortest(F):
    for mode in MODES:
        rep = shortest_directing_word(F, mode)
        R = build_recognizer(F, mode)
        assert rep.directable == (not R.is_empty())
        if rep.directable:
            assert check_word(F, rep.witness, mode)
            k = len(rep.witness)
            if k <= 6:
                found = brute_force_directing_words(F, mode, k)
                least = min(found, key=lambda w: (len(w), [F.letter_index[x] for x in w]))
                assert least == rep.witness
            assert bounded_directing_word(F, mode, k) is not None
            if k:
                assert bounded_directing_word(F, mode, k - 1) is None
        else:
            assert bounded_directing_word(F, mode, 8) is None


def test_recognizer_on_nfa(ex31):
    N = to_nfa(ex31)
    R = build_recognizer(N, Mode.D3)
    assert R.accepts("x x") and not R.accepts("y x x")


def test_d1_finals_inside_d2_when_complete():
    F = random_automaton(3, 4, 2, Fraction(1, 4), complete=True)
    R1, R2 = build_recognizer(F, Mode.D1), build_recognizer(F, Mode.D2)
    assert R1.configs == R2.configs
    assert R1.finals <= R2.finals
