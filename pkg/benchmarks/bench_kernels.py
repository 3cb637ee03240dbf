"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the three hot kernels on truncation-sized workloads plus one
end-to-end regularity sweep, once per available backend, and prints a
timing table.  JIT compilation is excluded by a warmup pass.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import statistics
import time

import numpy as np

from borelreg import RingContext, borel_closure, is_stable, reg_via_truncation
from borelreg import kernels
from borelreg.ideal import gens_matrix


def _workload_ideal():
    ring = RingContext(5)
    seeds = [ring.monomial(0, 1, 1, 1, 1), ring.monomial(0, 0, 2, 0, 3)]
    return borel_closure(seeds)


def _bench(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    ideal = _workload_ideal()
    n = ideal.ring.n
    e_big = 14

    tasks = {}

    def task(name):
        def wrap(fn):
            tasks[name] = fn
            return fn

        return wrap

    @task(f"degree_vectors(n={n}, d={e_big})")
    def run_vectors():
        kernels.degree_vectors(n, e_big)

    gens = gens_matrix(ideal)
    rows = kernels.degree_vectors(n, e_big)

    @task(f"divisible_mask({gens.shape[0]} gens x {rows.shape[0]} rows)")
    def run_mask():
        kernels.divisible_mask(gens, rows)

    truncated = ideal.truncate(e_big)
    tg = gens_matrix(truncated)
    tdeg = tg.sum(axis=1)

    @task(f"first_unstable({tg.shape[0]} generators)")
    def run_stability():
        kernels.first_unstable(tg, tdeg)

    @task("end-to-end: truncate+stability sweep (reg_via_truncation)")
    def run_end_to_end():
        reg_via_truncation(ideal)

    @task(f"is_stable(truncation at e={e_big})")
    def run_is_stable():
        is_stable(truncated)

    results = {}
    original = kernels.active_backend()
    try:
        for backend in kernels.available_backends():
            kernels.set_backend(backend)
            for fn in tasks.values():  # warmup / JIT compile
                fn()
            for name, fn in tasks.items():
                results[(backend, name)] = _bench(fn, args.repeat)
    finally:
        kernels.set_backend(original)

    backends = list(kernels.available_backends())
    width = max(len(name) for name in tasks)
    header = f"{'task':<{width}}" + "".join(f"  {b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>9}"
    print(f"workload ideal: {len(ideal.gens)} generators in {n} variables, "
          f"truncation at {e_big} has {len(truncated.gens)} generators")
    print(header)
    print("-" * len(header))
    for name in tasks:
        cells = []
        for b in backends:
            best, _ = results[(b, name)]
            cells.append(f"{best * 1e3:>10.2f}ms")
        line = f"{name:<{width}}" + "".join(f"  {c}" for c in cells)
        if len(backends) == 2:
            slow = results[(backends[0], name)][0]
            fast = results[(backends[1], name)][0]
            ratio = slow / fast if fast > 0 else float("inf")
            line += f"  {ratio:>8.1f}x" if backends[0] == "numpy" else f"  {1/ratio:>8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
