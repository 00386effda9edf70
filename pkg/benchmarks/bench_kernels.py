#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled backend.

Times the three hot loops (sparse multiply, diagonal Kronecker, scalar
product) on realistic inputs -- the named series S, G and Modd expanded to
the requested degree -- plus one end-to-end table verification.  Both
backends must produce identical results; this script asserts that too.

Usage: python benchmarks/bench_kernels.py [--degree N] [--repeat R]
"""

import argparse
import time

from symkron import _kernels as kernels
from symkron import exp_series, expand, named, verify


def _time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=16)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "c" not in backends:
        print("note: compiled backend not built; timing pure Python only")

    degree = args.degree
    s_terms = expand("S", degree).terms
    g_terms = expand("G", degree).terms
    m_terms = expand("Modd", degree).terms
    s_exponent = named.exponent("S", degree)

    cases = [
        (f"mul_terms   S*Modd   ({len(s_terms)}x{len(m_terms)} terms)",
         lambda: kernels.mul_terms(s_terms, m_terms, degree)),
        (f"mul_terms   G*G      ({len(g_terms)}x{len(g_terms)} terms)",
         lambda: kernels.mul_terms(g_terms, g_terms, degree)),
        (f"kron_terms  S(x)S    ({len(s_terms)} terms)",
         lambda: kernels.kron_terms(s_terms, s_terms)),
        (f"scalar      <S,S>    ({len(s_terms)} terms)",
         lambda: kernels.scalar_terms(s_terms, s_terms)),
        ("exp_series  exp(log S)",
         lambda: exp_series(s_exponent)),
        ("verify      S(x)S=G*Modd",
         lambda: verify.verify_table_entry("S", "S", degree).status),
    ]

    print(f"degree {degree}, best of {args.repeat} runs, times in ms\n")
    header = f"{'case':44s}" + "".join(f"{b:>12s}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)

    original = kernels.backend_name()
    try:
        for label, fn in cases:
            times = {}
            results = {}
            for backend in backends:
                kernels.set_backend(backend)
                times[backend], results[backend] = _time(fn, args.repeat)
            if len(backends) == 2 and results["python"] != results["c"]:
                raise AssertionError(f"backend results differ for {label}")
            row = f"{label:44s}" + "".join(
                f"{1000 * times[b]:>12.2f}" for b in backends)
            if len(backends) == 2:
                row += f"{times['python'] / times['c']:>9.1f}x"
            print(row)
    finally:
        kernels.set_backend(original)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
