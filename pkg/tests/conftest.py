import os
import sys
from pathlib import Path

import pytest

from dirfuzz import FuzzyAutomaton
from dirfuzz.fileformat import read_automaton

DATA = Path(__file__).parent / "data"
sys.path.insert(0, os.path.dirname(__file__))


def load(name):
    return read_automaton(DATA / name)


@pytest.fixture
def ex31():
    return load("example31.fza")


@pytest.fixture
def ex51():
    return load("example51.fza")


@pytest.fixture
def one_letter():
    """a -x-> b -x-> c, c -x-> c, all with weight 1."""
    return load("oneletter.fza")


@pytest.fixture
def singleton():
    return FuzzyAutomaton(["s"], ["x", "y"], {("s", "x", "s"): 1, ("s", "y", "s"): 1})


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
