"""Compare the compiled and pure-Python kernels on the library's hot paths.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit
from fractions import Fraction

from dirfuzz import Mode, _kernels, build_recognizer, check_word, d3_directability_test
from dirfuzz.generate import random_automaton


def workloads():
    recog = [random_automaton(s, 8, 2, Fraction(1, 4)) for s in range(6)]
    merge = [random_automaton(s, 60, 3, Fraction(1, 20), complete=True) for s in range(6)]
    words = [random_automaton(s, 40, 2, Fraction(1, 8)) for s in range(6)]
    long_word = ("a b " * 200).split()
    return {
        "recognizer d2 (n=8)": lambda: [build_recognizer(F, Mode.D2) for F in recog],
        "merge test (n=60)": lambda: [d3_directability_test(F) for F in merge],
        "check-word len 400 (n=40)": lambda: [check_word(F, long_word, Mode.D3) for F in words],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = _kernels.available_backends()
    jobs = workloads()
    for job in jobs.values():
        job()  # warm caches on the automata
    print(f"{'workload':<28}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, job in jobs.items():
        times = []
        for b in backends:
            with _kernels.use_backend(b):
                times.append(min(timeit.repeat(job, number=1, repeat=args.repeat)))
        row = f"{name:<28}" + "".join(f"{t * 1000:>10.1f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
