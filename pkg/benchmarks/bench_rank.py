"""Compare the compiled and numpy modular-rank kernels.

    python benchmarks/bench_rank.py [--repeat N]

Inputs are disjointness matrices and refined catalecticants (all full rank),
plus a random dense matrix. Both backends must report the same rank.
"""

import argparse
import random
import time

import numpy as np

from waringsym import kernels
from waringsym.apolar import disjointness_matrix, refined_catalecticant
from waringsym.linalg import PRIMES


def cases():
    for r, n in [(4, 8), (5, 10), (6, 12)]:
        yield f"D_{r}^{n}", np.array(disjointness_matrix(r, n).rows, dtype=np.int64)
    yield "refined (7,10,3)", np.array(refined_catalecticant(7, 10, 3).rows, dtype=np.int64)
    rng = random.Random(1)
    yield "random 400x400", np.array([[rng.randrange(-50, 50) for _ in range(400)] for _ in range(400)],
                                     dtype=np.int64)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return out, min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; timing the numpy fallback only")
    p = PRIMES[0]
    print(f"{'matrix':<18} {'shape':>10} {'rank':>5}  " + "  ".join(f"{b:>10}" for b in backends)
          + ("  speedup" if len(backends) == 2 else ""))
    for name, a in cases():
        ranks, secs = [], []
        for b in backends:
            rk, s = best_of(lambda: kernels.rank_mod_p_array(a, p, backend=b), args.repeat)
            ranks.append(rk)
            secs.append(s)
        if len(set(ranks)) != 1:
            raise SystemExit(f"backends disagree on {name}: {ranks}")
        line = f"{name:<18} {'x'.join(map(str, a.shape)):>10} {ranks[0]:>5}  " \
               + "  ".join(f"{s * 1e3:>8.1f}ms" for s in secs)
        if len(secs) == 2:
            line += f"  {secs[1] / secs[0]:>6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
