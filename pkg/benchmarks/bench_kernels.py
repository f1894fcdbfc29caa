"""Compare the compiled matrix kernels against the pure-Python fallback.

Times mat_mul, kron and mat_vec on dense and structure-map-shaped inputs
over the rationals and a prime field, checks that both backends return
identical tuples, and prints one line per workload with the speedup.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeats 9
"""

import argparse
import random
import time

from homcat import KERNEL_BACKEND
from homcat.exact_tensor import GF, QQ
from homcat import _kernels_py

try:
    from homcat import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _dense(rng, field, rows, cols, span=9):
    return tuple(field.coerce(rng.randint(-span, span))
                 for _ in range(rows * cols))


def _sparse(rng, field, rows, cols):
    # one nonzero per row, the shape of a basis-permuting structure map
    data = [field.zero] * (rows * cols)
    for i in range(rows):
        data[i * cols + rng.randrange(cols)] = field.coerce(
            rng.choice([1, 2, 3, -1]))
    return tuple(data)


def _workloads(rng):
    f97 = GF(97)
    out = []
    a = _dense(rng, QQ, 40, 40)
    b = _dense(rng, QQ, 40, 40)
    out.append(("mat_mul dense 40x40 over Q", "mat_mul",
                (a, 40, 40, b, 40, 40, QQ.zero, QQ.modulus)))
    a = _dense(rng, f97, 70, 70, span=96)
    b = _dense(rng, f97, 70, 70, span=96)
    out.append(("mat_mul dense 70x70 over F97", "mat_mul",
                (a, 70, 70, b, 70, 70, f97.zero, f97.modulus)))
    a = _sparse(rng, QQ, 120, 120)
    b = _dense(rng, QQ, 120, 90)
    out.append(("mat_mul sparse 120x120 @ dense 120x90 over Q", "mat_mul",
                (a, 120, 120, b, 120, 90, QQ.zero, QQ.modulus)))
    a = _dense(rng, QQ, 12, 12)
    b = _dense(rng, QQ, 12, 12)
    out.append(("kron 12x12 (x) 12x12 over Q", "kron",
                (a, 12, 12, b, 12, 12, QQ.zero, QQ.modulus)))
    a = _dense(rng, f97, 16, 16, span=96)
    b = _dense(rng, f97, 16, 16, span=96)
    out.append(("kron 16x16 (x) 16x16 over F97", "kron",
                (a, 16, 16, b, 16, 16, f97.zero, f97.modulus)))
    a = _dense(rng, QQ, 90, 90)
    v = _dense(rng, QQ, 90, 1)
    out.append(("mat_vec dense 90x90 over Q", "mat_vec",
                (a, 90, 90, v, QQ.zero, QQ.modulus)))
    return out


def _best(fn, args, repeats):
    best = None
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5,
                    help="timing repetitions per workload, best one counts")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    print(f"active package backend: {KERNEL_BACKEND}")
    if _kernels_c is None:
        print("compiled extension not importable, timing the fallback only")
    rng = random.Random(args.seed)
    width = 46
    header = f"{'workload':<{width}} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, op, payload in _workloads(rng):
        t_py, r_py = _best(getattr(_kernels_py, op), payload, args.repeats)
        if _kernels_c is None:
            print(f"{name:<{width}} {t_py * 1e3:>8.2f}ms {'-':>10} {'-':>8}")
            continue
        t_c, r_c = _best(getattr(_kernels_c, op), payload, args.repeats)
        if tuple(r_py) != tuple(r_c):
            raise SystemExit(f"backend outputs disagree on: {name}")
        print(f"{name:<{width}} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms "
              f"{t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
