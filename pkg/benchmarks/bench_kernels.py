#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernel backends on real workloads.

Each workload is drawn from what the library actually does: streaming
minimalization, power expansion, the socle test, certificate probes, and
witness search.  Times are best-of-N wall clock.

Usage:
    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from cnideals.families import base_graph_ni, certificate_ni, chain_ni
from cnideals.ideals import ni_ideal
from cnideals.kernels import get_backend, socle_quotient

BIG = 10**9


def _workloads():
    base = ni_ideal(base_graph_ni())
    base_vecs = list(base.vectors())

    rng = random.Random(7)
    rand = [tuple(rng.randint(0, 4) for _ in range(12)) for _ in range(5000)]

    chain = ni_ideal(chain_ni(2))
    chain_vecs = list(chain.vectors())
    cert = certificate_ni(2).vector(chain.ring_vars)

    cube = get_backend("python").expand_power(base_vecs, 3, BIG)

    def minimalize_stream(k):
        return k.minimal_vectors(rand)

    def expand_cube(k):
        return k.expand_power(base_vecs, 3, BIG)

    def socle_cube(k):
        return socle_quotient(cube, BIG, impl=k)

    def certificate_probes(k):
        if k.power_divides(chain_vecs, 3, cert):
            raise AssertionError("certificate should lie outside the cube")
        for i in range(len(cert)):
            bumped = cert[:i] + (cert[i] + 1,) + cert[i + 1 :]
            if not k.power_divides(chain_vecs, 3, bumped):
                raise AssertionError(f"bump at {i} should land inside the cube")

    def witness_search(k):
        w = k.search_witness(base_vecs, 2, 12, BIG)
        if w is None:
            raise AssertionError("the base graph has a witness at t=2")

    return [
        ("minimalize 5000 random vectors (12 vars)", minimalize_stream),
        ("expand NI(base)^3 (10 gens -> 220)", expand_cube),
        ("socle test on NI(base)^3", socle_cube),
        ("25 certificate probes, 2-chain at t=3", certificate_probes),
        ("witness search, base graph at t=2", witness_search),
    ]


def _best_of(fn, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--repeat", type=int, default=5, metavar="N", help="best of N runs (default 5)"
    )
    args = parser.parse_args(argv)

    py = get_backend("python")
    try:
        cy = get_backend("cython")
    except ImportError:
        cy = None
        print("compiled extension not available; timing the pure backend only\n")

    name_w = max(len(name) for name, _ in _workloads())
    header = f"{'workload':<{name_w}}  {'python':>10}"
    if cy is not None:
        header += f"  {'cython':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, fn in _workloads():
        t_py = _best_of(fn, py, args.repeat)
        line = f"{name:<{name_w}}  {t_py * 1000:>8.2f}ms"
        if cy is not None:
            t_cy = _best_of(fn, cy, args.repeat)
            line += f"  {t_cy * 1000:>8.2f}ms  {t_py / t_cy:>7.1f}x"
        print(line)

    return 0


if __name__ == "__main__":
    raise SystemExit(main())
