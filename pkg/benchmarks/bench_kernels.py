"""Compiled kernels against their numpy fallbacks.

Times the Demazure step, the raising step and the trace count on fixed random inputs,
checks that both backends return identical arrays, and prints one line per kernel.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from kostka_shoji._jit import HAVE_NUMBA
from kostka_shoji.kernels import (_table_for, demazure_numba, demazure_numpy, monomial_basis,
                                  raise_numba, raise_numpy, space_size, trace_numba, trace_numpy)
from kostka_shoji.wreath import brute_force_group


def demazure_case(rng):
    n, d = 8, 6
    exps = monomial_basis(n, d)
    coeffs = rng.integers(0, 4, size=(space_size(n, d), 8)).astype(np.int64)
    binom = _table_for(n, d)
    return (lambda f: [f(coeffs, exps, i, binom) for i in range(n - 1)])


def raise_case(rng):
    n, d = 8, 6
    exps = monomial_basis(n, d)
    coeffs = rng.integers(0, 4, size=(space_size(n, d), 8)).astype(np.int64)
    binom_out = _table_for(n, d + 1)
    # mu_last = d keeps every shift non-negative, so the whole array is processed
    return (lambda f: f(coeffs, exps, d, binom_out, 8 + d)[0])


def trace_case(rng):
    group = brute_force_group(4, 3)
    perms = np.array([g.perm for g in group.elements], dtype=np.int64)
    colors = np.array([g.colors for g in group.elements], dtype=np.int64)
    monos = np.ascontiguousarray(monomial_basis(4, 8))
    return (lambda f: f(perms, colors, monos, 3))


CASES = {
    "demazure": (demazure_case, demazure_numba, demazure_numpy),
    "raise": (raise_case, raise_numba, raise_numpy),
    "trace": (trace_case, trace_numba, trace_numpy),
}


def same(a, b):
    if isinstance(a, list):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if not HAVE_NUMBA:
        print("numba is disabled or missing: the first column times the plain Python loop")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<10}{'numba (ms)':>12}{'numpy (ms)':>12}{'speed-up':>10}")
    for name, (build, fast, slow) in CASES.items():
        call = build(rng)
        assert same(call(fast), call(slow)), name      # also compiles the numba version
        t_fast = min(timeit.repeat(lambda: call(fast), number=1, repeat=args.repeat))
        t_slow = min(timeit.repeat(lambda: call(slow), number=1, repeat=args.repeat))
        print(f"{name:<10}{t_fast * 1e3:>12.2f}{t_slow * 1e3:>12.2f}{t_slow / t_fast:>9.1f}x")


if __name__ == "__main__":
    main()
