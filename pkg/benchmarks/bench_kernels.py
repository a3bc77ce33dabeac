"""Compare the numba and numpy kernel paths on the word-map hot loops.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--batch 2000]

Prints the best wall time per call for each kernel and path, the speedup, and
the relative deviation between the two paths (they must agree to round-off).
"""

import argparse
import time

import numpy as np

from repvar import matnum
from repvar.matnum import _kernels
from repvar.matnum.core import word_arrays
from repvar.words import parse_word


def best_time(fn, repeat):
    fn()  # warm-up, includes JIT compilation
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--batch", type=int, default=2000, help="points per eval_batch call")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if _kernels.NumbaKernels is None:
        raise SystemExit("numba is not importable; nothing to compare")
    rng = np.random.default_rng(args.seed)
    word = parse_word("[a,b]^3 [c,d]^2 a^5 c^-4 [a,c][b,d]", ["a", "b", "c", "d"])
    gens, exps = word_arrays(word)
    point = matnum.random_point(4, rng)
    batch = np.stack([matnum.random_point(4, rng) for _ in range(args.batch)])

    cases = {
        "eval_word": lambda k: k.eval_word(gens, exps, point),
        "eval_batch": lambda k: k.eval_batch(gens, exps, batch),
        "word_jacobian": lambda k: k.word_jacobian(gens, exps, point)[1],
    }
    print(f"word: {len(word.letters)} syllables, batch {args.batch}, best of {args.repeat}")
    print(f"{'kernel':15s} {'numpy':>12s} {'numba':>12s} {'speedup':>9s} {'rel diff':>10s}")
    for name, call in cases.items():
        t_np = best_time(lambda: call(_kernels.NumpyKernels), args.repeat)
        t_nb = best_time(lambda: call(_kernels.NumbaKernels), args.repeat)
        ref, got = call(_kernels.NumpyKernels), call(_kernels.NumbaKernels)
        diff = np.max(np.abs(ref - got)) / np.max(np.abs(ref))
        print(f"{name:15s} {t_np * 1e3:10.3f}ms {t_nb * 1e3:10.3f}ms {t_np / t_nb:8.1f}x "
              f"{diff:10.1e}")


if __name__ == "__main__":
    main()
