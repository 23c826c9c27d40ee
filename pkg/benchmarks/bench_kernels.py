"""Compare the numba and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--weights 8 10 12] [--repeat 3]

With ``CHIY_DISABLE_NUMBA=1`` only the numpy backend is timed.
"""

from __future__ import annotations

import argparse
import random
import time

from chiy import _kernels
from chiy.partitions import partitions


def time_call(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def e_to_m_matrix(w: int, backend: str) -> int:
    ps = partitions(w)
    return sum(_kernels.count_01_matrices(mu, lam, backend=backend) for mu in ps for lam in ps)


def monomial_values(w: int, backend: str, points) -> int:
    return sum(_kernels.eval_monomial_symmetric(lam, x, backend=backend) for lam in partitions(w) for x in points)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--weights", type=int, nargs="+", default=[8, 10, 12])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = _kernels.available_backends()
    print(f"backends: {', '.join(backends)} (default {_kernels.default_backend()})")
    if "numba" in backends:
        # compile outside the timed region
        e_to_m_matrix(3, "numba")
        monomial_values(3, "numba", [[1, 2, 3]])

    rng = random.Random(0)
    print(f"{'kernel':<22}{'w':>4}" + "".join(f"{b:>12}" for b in backends) + "  checksum")
    for w in args.weights:
        results = {}
        times = {}
        for b in backends:
            times[b] = time_call(lambda: results.__setitem__(b, e_to_m_matrix(w, b)), args.repeat)
        assert len(set(results.values())) == 1, results
        row = "".join(f"{times[b] * 1e3:>10.1f}ms" for b in backends)
        print(f"{'e->m matrix':<22}{w:>4}{row}  {results[backends[0]]}")

        points = [[rng.randint(-2, 2) for _ in range(w)] for _ in range(2)]
        results, times = {}, {}
        for b in backends:
            times[b] = time_call(lambda: results.__setitem__(b, monomial_values(w, b, points)), args.repeat)
        assert len(set(results.values())) == 1, results
        row = "".join(f"{times[b] * 1e3:>10.1f}ms" for b in backends)
        print(f"{'m_lambda at points':<22}{w:>4}{row}  {results[backends[0]]}")


if __name__ == "__main__":
    main()
