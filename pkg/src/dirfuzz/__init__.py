"""Directability of fuzzy and nondeterministic finite automata."""

from dirfuzz.core import (
    FuzzyAutomaton,
    InvalidAutomatonError,
    Nfa,
    extended_weight,
    is_complete,
    letter_support,
    nfa_step_set,
    step_set,
    to_nfa,
    validate,
)
from dirfuzz.directability import (
    CapExceededError,
    DfaRecognizer,
    DirectabilityReport,
    Mode,
    brute_force_directing_words,
    build_recognizer,
    check_word,
    check_word_nfa,
    recognizer_accepts,
    shortest_directing_word,
)
from dirfuzz.mergetest import (
    IncompleteAutomatonError,
    d3_directability_test,
    d3_merges,
    inverted_table,
    mergeability_closure,
    mu,
)
from dirfuzz.threshold import check_word_tau, tau_cut
from dirfuzz.fileformat import ParseError, parse_automaton, write_automaton
from dirfuzz.generate import random_automaton
from dirfuzz._kernels import backend

__all__ = [
    "FuzzyAutomaton", "InvalidAutomatonError", "Nfa", "extended_weight", "is_complete",
    "letter_support", "nfa_step_set", "step_set", "to_nfa", "validate",
    "CapExceededError", "DfaRecognizer", "DirectabilityReport", "Mode",
    "brute_force_directing_words", "build_recognizer", "check_word", "check_word_nfa",
    "recognizer_accepts", "shortest_directing_word",
    "IncompleteAutomatonError", "d3_directability_test", "d3_merges", "inverted_table",
    "mergeability_closure", "mu", "check_word_tau", "tau_cut",
    "ParseError", "parse_automaton", "write_automaton", "random_automaton", "backend",
]
