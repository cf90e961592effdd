"""Compare the numba-jitted rank kernels against the pure-python/numpy path.

The fallback is selected by BIGRADE_NO_NUMBA=1, which must be set before the
package is imported, so this script re-executes itself once with the flag:

    python bench/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time


def bench(label):
    from bigrade import kernels

    rng = random.Random(0)
    sizes = [(8, 8), (20, 20), (40, 60)]
    print(f"[{label}] numba_enabled={kernels.numba_enabled()}")
    for nr, nc in sizes:
        mats = [
            [[rng.choice([-1, 0, 0, 1]) for _ in range(nc)] for _ in range(nr)]
            for _ in range(200)
        ]
        # warm up (jit compilation must not count)
        kernels.rank_char0(mats[0])
        kernels.rank_mod_p(mats[0], 7)

        t0 = time.perf_counter()
        for a in mats:
            kernels.rank_char0(a)
        t_q = time.perf_counter() - t0

        t0 = time.perf_counter()
        for a in mats:
            kernels.rank_mod_p(a, 7)
        t_p = time.perf_counter() - t0
        print(
            f"[{label}] {nr}x{nc}: char0 {1000 * t_q / len(mats):.3f} ms/rank, "
            f"mod 7 {1000 * t_p / len(mats):.3f} ms/rank"
        )


def main():
    if os.environ.get("_BENCH_CHILD"):
        bench("fallback" if os.environ.get("BIGRADE_NO_NUMBA") else "numba")
        return
    for flag in ("", "1"):
        env = dict(os.environ, _BENCH_CHILD="1")
        if flag:
            env["BIGRADE_NO_NUMBA"] = flag
        else:
            env.pop("BIGRADE_NO_NUMBA", None)
        subprocess.run([sys.executable, os.path.abspath(__file__)], env=env, check=True)


if __name__ == "__main__":
    main()
