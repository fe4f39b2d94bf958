"""Compare the compiled and the pure-Python GF(p) elimination kernels.

    python benchmarks/bench_kernel.py [--sizes 8 32 64 128] [--prime 10007]
"""

import argparse
import random
import timeit

from divlin import _pykernel

try:
    from divlin import _ckernel
except ImportError:
    _ckernel = None


def random_rows(n, p, rng):
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n)]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 32, 64, 128])
    parser.add_argument("--prime", type=int, default=10007)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    rng = random.Random(1)
    if _ckernel is None:
        print("compiled kernel not built; only the pure kernel is timed")
    print(f"{'n':>5} {'pure (ms)':>12} {'compiled (ms)':>14} {'speedup':>8}")
    for n in args.sizes:
        rows = random_rows(n, args.prime, rng)
        number = max(1, 2000 // (n * n))
        t_py = min(timeit.repeat(lambda: _pykernel.rref_mod_p(rows, n, args.prime),
                                 number=number, repeat=args.repeat)) / number
        if _ckernel is None:
            print(f"{n:>5} {t_py * 1e3:>12.3f} {'-':>14} {'-':>8}")
            continue
        assert _ckernel.rref_mod_p(rows, n, args.prime) == _pykernel.rref_mod_p(rows, n, args.prime)
        t_c = min(timeit.repeat(lambda: _ckernel.rref_mod_p(rows, n, args.prime),
                                number=number, repeat=args.repeat)) / number
        print(f"{n:>5} {t_py * 1e3:>12.3f} {t_c * 1e3:>14.3f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
