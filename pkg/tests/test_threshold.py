from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirfuzz import Mode, check_word, check_word_nfa, check_word_tau, tau_cut, to_nfa
from dirfuzz.core import indices_of
from dirfuzz.threshold import cut_sets, threshold
from oracles import chain_weight, words
from strategies import automata

TAUS = [Fraction(k, 8) for k in range(8)]


def relation(N):
    return {k: set(v) for k, v in N.relation.items() if v}


def test_cut_at_zero_is_support(ex31):
    assert tau_cut(ex31, 0) == to_nfa(ex31)


def test_cut_quarter(ex31):
    assert relation(tau_cut(ex31, "1/4")) == {
        ("a", "x"): {"b"},
        ("b", "x"): {"c"},
        ("c", "x"): {"c"},
        ("b", "y"): {"b"},
    }


def test_cut_above_all(ex31):
    assert relation(tau_cut(ex31, "7/10")) == {}


def test_cut_is_strict(ex31):
    assert ("c", "x") not in relation(tau_cut(ex31, "3/5"))


def test_threshold_range():
    with pytest.raises(ValueError):
        threshold(1)
    with pytest.raises(ValueError):
        threshold("-1/8")


def test_check_word_tau_example(ex31):
    assert check_word_tau(ex31, "x x", "1/4", Mode.D3)
    assert not check_word_tau(ex31, "x x", "7/20", Mode.D3)


@pytest.mark.parametrize("mode", list(Mode))
def test_tau_zero_is_plain(ex31, mode):
    for w in words(ex31.alphabet, 4):
        assert check_word_tau(ex31, w, 0, mode) == check_word(ex31, w, mode)


@settings(max_examples=60, deadline=None)
@given(automata(max_states=4, max_letters=2), st.sampled_from(TAUS))
def test_cut_sets_match_chain_oracle(F, tau):
    for w in words(F.alphabet, 3):
        got = cut_sets(F, F.encode_word(w), tau)
        for a, bits in zip(F.states, got):
            expected = {b for b in F.states if chain_weight(F, a, w, b) > tau}
            assert {F.states[i] for i in indices_of(bits)} == expected


@settings(max_examples=60, deadline=None)
@given(automata(max_states=4, max_letters=2), st.sampled_from(TAUS))
def test_cut_reduction(F, tau):
    N = tau_cut(F, tau)
    for w in words(F.alphabet, 4):
        for mode in Mode:
            assert check_word_tau(F, w, tau, mode) == check_word_nfa(N, w, mode)


@settings(max_examples=60, deadline=None)
@given(automata(max_states=4, max_letters=2), st.sampled_from(TAUS), st.sampled_from(TAUS))
def test_cut_sets_shrink_with_tau(F, t1, t2):
    lo, hi = min(t1, t2), max(t1, t2)
    for w in words(F.alphabet, 3):
        word = F.encode_word(w)
        for small, big in zip(cut_sets(F, word, hi), cut_sets(F, word, lo)):
            assert small & ~big == 0
