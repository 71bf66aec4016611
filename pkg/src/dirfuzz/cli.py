"""``dirfuzz`` command line.

Reports go to standard output as ``key: value`` lines in a fixed order.
Exit codes: 0 analysis done (whatever the answer), 1 usage or parse error,
2 precondition failed, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from dirfuzz import algebra, core, directability, mergetest, threshold
from dirfuzz.core import FuzzyAutomaton
from dirfuzz.directability import Mode
from dirfuzz.fileformat import ParseError, read_automaton, write_automaton
from dirfuzz.generate import random_automaton

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class PreconditionError(Exception):
    pass


class CapError(Exception):
    pass


class Report:
    """Ordered ``key: value`` lines; keys may repeat (e.g. ``row``, ``word``)."""

    def __init__(self, command: str):
        self.items: list[tuple[str, str]] = [("command", command)]

    def add(self, key: str, value) -> "Report":
        if isinstance(value, bool):
            value = "true" if value else "false"
        self.items.append((key, str(value)))
        return self

    def render(self) -> str:
        return "".join(f"{k}: {v}\n" for k, v in self.items)


def format_word(word: Sequence[str] | None) -> str:
    if word is None:
        return "none"
    return " ".join(word) if word else "eps"


def format_set(names) -> str:
    return "{" + ",".join(names) + "}"


def _ratio(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(path: str):
    try:
        A = read_automaton(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except ParseError as e:
        raise UsageError(f"{path}: {e}") from None
    if isinstance(A, FuzzyAutomaton):
        violations = core.validate(A)
        if violations:
            raise UsageError(f"{path}: " + "; ".join(violations))
    return A


def _as_fuzzy(A) -> FuzzyAutomaton:
    if isinstance(A, FuzzyAutomaton):
        return A
    return FuzzyAutomaton(A.states, A.alphabet, {t: 1 for t in A.triples()})


def _word(A, text: str) -> tuple[int, ...]:
    tokens = text.split()
    if tokens == ["eps"]:
        tokens = []
    try:
        return A.encode_word(tokens)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _emit_automaton(A, out_path: str | None, report: Report, out: TextIO):
    text = write_automaton(A)
    if out_path is None:
        out.write(text)
        return
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    report.add("states", A.n).add("letters", A.m)
    report.add("transitions", len(A.weights) if isinstance(A, FuzzyAutomaton) else len(A.triples()))
    report.add("output", out_path)
    out.write(report.render())


def cmd_validate(args, out):
    A = read_automaton(args.file)
    r = Report("validate").add("format", "fza" if isinstance(A, FuzzyAutomaton) else "nfa")
    violations = core.validate(A) if isinstance(A, FuzzyAutomaton) else []
    r.add("states", A.n).add("letters", A.m)
    r.add("complete", not violations and core.is_complete(A))
    r.add("result", "invalid" if violations else "valid")
    for v in violations:
        r.add("violation", v)
    out.write(r.render())


def cmd_to_nfa(args, out):
    A = _load(args.file)
    N = core.to_nfa(A) if isinstance(A, FuzzyAutomaton) else A
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(write_automaton(N))
    r = Report("to-nfa").add("states", N.n).add("letters", N.m)
    for x in N.alphabet:
        for a in N.states:
            succ = sorted(N.relation[a, x], key=N.state_index.__getitem__)
            r.add("row", f"{a} {x} {format_set(succ)}")
    if args.output:
        r.add("output", args.output)
    out.write(r.render())


def cmd_check_word(args, out):
    A = _load(args.file)
    mode = Mode.parse(args.mode)
    word = _word(A, args.word)
    r = Report("check-word").add("mode", mode)
    if args.tau is not None:
        if not isinstance(A, FuzzyAutomaton):
            raise UsageError("--tau needs a fuzzy automaton")
        try:
            tau = threshold.threshold(args.tau)
        except ValueError as e:
            raise UsageError(str(e)) from None
        r.add("tau", tau)
        result = threshold.check_word_tau(A, word, tau, mode)
    elif isinstance(A, FuzzyAutomaton):
        result = directability.check_word(A, word, mode)
    else:
        result = directability.check_word_nfa(A, word, mode)
    r.add("word", format_word(A.decode_word(word))).add("result", result)
    out.write(r.render())


def _search(name, args, out):
    A = _load(args.file)
    rep = directability.shortest_directing_word(A, args.mode, args.cap)
    r = Report(name).add("mode", rep.mode)
    r.add("result", "unknown" if rep.truncated else rep.directable)
    r.add("witness", format_word(rep.witness))
    r.add("length", len(rep.witness) if rep.witness is not None else "none")
    r.add("explored", rep.explored).add("truncated", rep.truncated)
    out.write(r.render())
    if rep.truncated:
        raise CapError(f"configuration cap {args.cap} exceeded")


def cmd_directable(args, out):
    _search("directable", args, out)


def cmd_shortest(args, out):
    _search("shortest", args, out)


def cmd_d3_test(args, out):
    F = _as_fuzzy(_load(args.file))
    r = Report("d3-test")
    try:
        res = mergetest.d3_directability_test(F)
    except mergetest.IncompleteAutomatonError as e:
        r.add("result", "error").add("error", "incomplete").add("witness", f"{e.state} {e.letter}")
        out.write(r.render())
        raise PreconditionError(str(e)) from None
    merged = sum(res.mergeable(i, j) for i in range(F.n) for j in range(i + 1, F.n))
    r.add("result", res.directable).add("merged-pairs", merged)
    r.add("total-pairs", F.n * (F.n - 1) // 2).add("pops", res.pop_count)
    out.write(r.render())


def cmd_product(args, out):
    F, G = _as_fuzzy(_load(args.first)), _as_fuzzy(_load(args.second))
    try:
        P = algebra.direct_product(F, G)
    except algebra.AlphabetMismatchError as e:
        raise PreconditionError(str(e)) from None
    _emit_automaton(P, args.output, Report("product"), out)


def _precondition_report(name, error, witness, out):
    r = Report(name).add("result", "error").add("error", str(error)).add("witness", witness)
    out.write(r.render())
    raise PreconditionError(str(error))


def cmd_quotient(args, out):
    F = _as_fuzzy(_load(args.file))
    blocks = [b.split() for b in args.partition.split("|")]
    try:
        Q = algebra.quotient(F, blocks)
    except algebra.NotCongruenceError as e:
        a, a2, x, block = e.witness
        _precondition_report("quotient", "not a congruence", f"{a} {a2} {x} {format_set(block)}", out)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit_automaton(Q, args.output, Report("quotient"), out)


def cmd_subautomaton(args, out):
    F = _as_fuzzy(_load(args.file))
    try:
        G = algebra.induced_subautomaton(F, args.states.split())
    except algebra.NotClosedError as e:
        _precondition_report("subautomaton", "not closed", " ".join(e.witness), out)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit_automaton(G, args.output, Report("subautomaton"), out)


def cmd_oracle(args, out):
    F = _as_fuzzy(_load(args.file))
    mode = Mode.parse(args.mode)
    try:
        words = directability.brute_force_directing_words(F, mode, args.max_len)
    except directability.BudgetExceededError as e:
        out.write(Report("oracle").add("mode", mode).add("result", "error").add("error", e).render())
        raise CapError(str(e)) from None
    idx = F.letter_index
    ordered = sorted(words, key=lambda w: (len(w), [idx[x] for x in w]))
    r = Report("oracle").add("mode", mode).add("max-len", args.max_len)
    r.add("result", bool(ordered)).add("count", len(ordered))
    for w in ordered:
        r.add("word", format_word(w))
    out.write(r.render())


def cmd_random(args, out):
    if args.states < 1 or args.letters < 1:
        raise UsageError("--states and --letters must be positive")
    if not 0 < args.density <= 1:
        raise UsageError("--density must lie in (0,1]")
    F = random_automaton(args.seed, args.states, args.letters, args.density, args.complete)
    _emit_automaton(F, args.output, Report("random"), out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dirfuzz", description="Directability of fuzzy and nondeterministic automata")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        return sp

    def mode(sp):
        sp.add_argument("--mode", required=True, type=str.lower, choices=["d1", "d2", "d3"])

    sp = add("validate", cmd_validate, "check an automaton file")
    sp.add_argument("file")

    sp = add("to-nfa", cmd_to_nfa, "associated NFA of a fuzzy automaton")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")

    sp = add("check-word", cmd_check_word, "test one word")
    mode(sp)
    sp.add_argument("--word", required=True, help='space-separated letters, "eps" for the empty word')
    sp.add_argument("--tau", type=_ratio)
    sp.add_argument("file")

    for name, func, help in (
        ("directable", cmd_directable, "decide directability"),
        ("shortest", cmd_shortest, "shortest directing word"),
    ):
        sp = add(name, func, help)
        mode(sp)
        sp.add_argument("--cap", type=int, default=directability.DEFAULT_STATE_CAP)
        sp.add_argument("file")

    sp = add("d3-test", cmd_d3_test, "pairwise merge test (complete automata)")
    sp.add_argument("file")

    sp = add("product", cmd_product, "direct product")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("-o", "--output")

    sp = add("quotient", cmd_quotient, "quotient by a congruence")
    sp.add_argument("file")
    sp.add_argument("--partition", required=True, help='blocks separated by "|", e.g. "a|b c"')
    sp.add_argument("-o", "--output")

    sp = add("subautomaton", cmd_subautomaton, "subautomaton on a closed state set")
    sp.add_argument("file")
    sp.add_argument("--states", required=True)
    sp.add_argument("-o", "--output")

    sp = add("oracle", cmd_oracle, "enumerate directing words up to a length")
    mode(sp)
    sp.add_argument("--max-len", required=True, type=int)
    sp.add_argument("file")

    sp = add("random", cmd_random, "generate a random fuzzy automaton")
    sp.add_argument("--seed", required=True, type=int)
    sp.add_argument("--states", required=True, type=int)
    sp.add_argument("--letters", required=True, type=int)
    sp.add_argument("--density", required=True, type=_ratio)
    sp.add_argument("--complete", action="store_true")
    sp.add_argument("-o", "--output")
    return p


def run_command(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(list(argv))
        if getattr(args, "cap", 1) < 1:
            raise UsageError("--cap must be positive")
        if getattr(args, "max_len", 0) < 0:
            raise UsageError("--max-len must be nonnegative")
        args.func(args, out)
    except UsageError as e:
        err.write(f"dirfuzz: {e}\n")
        return EXIT_USAGE
    except ParseError as e:
        err.write(f"dirfuzz: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        err.write(f"dirfuzz: {e}\n")
        return EXIT_USAGE
    except PreconditionError as e:
        err.write(f"dirfuzz: {e}\n")
        return EXIT_PRECONDITION
    except CapError as e:
        err.write(f"dirfuzz: {e}\n")
        return EXIT_CAP
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
