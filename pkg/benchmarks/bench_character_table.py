"""Time the character-table build with the numba kernel and with the numpy fallback.

    python benchmarks/bench_character_table.py --n 15 20 25 --repeat 3
"""
import argparse
import time

import numpy as np

from symcoef import _accel
from symcoef.characters import clear_table_cache, raw_table


def best_time(n: int, use_numba: bool, repeat: int) -> tuple[float, np.ndarray]:
    best, table = float("inf"), None
    for _ in range(repeat):
        clear_table_cache()
        start = time.perf_counter()
        table = raw_table(n, use_numba=use_numba)
        best = min(best, time.perf_counter() - start)
    return best, table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[12, 16, 20, 24])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _accel.HAVE_NUMBA:
        raw_table(6, use_numba=True)  # JIT warm-up, excluded from timings
    print(f"{'n':>4} {'numpy (s)':>11} {'numba (s)':>11} {'speedup':>8}")
    for n in args.n:
        t_np, ref = best_time(n, False, args.repeat)
        if not _accel.HAVE_NUMBA:
            print(f"{n:>4} {t_np:>11.3f} {'n/a':>11} {'n/a':>8}")
            continue
        t_nb, table = best_time(n, True, args.repeat)
        if not np.array_equal(ref, table):
            raise SystemExit(f"kernels disagree at n={n}")
        print(f"{n:>4} {t_np:>11.3f} {t_nb:>11.3f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
