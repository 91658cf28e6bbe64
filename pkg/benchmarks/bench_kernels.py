"""Benchmark the compiled polynomial kernels against the pure-Python ones.

Measures the hot primitive (fused multiply-reduce of dense coefficient
vectors mod p) at the widths the factorization sweep actually hits, then
times one end-to-end factorization in each backend via subprocesses.

Run: python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import os
import random
import subprocess
import sys
import time

from scrimkit import _pykernels

try:
    from scrimkit import _ckernels
except ImportError:
    _ckernels = None

# (p, width): F_2 base work, the deepest big fields per characteristic
CASES = [(2, 32), (2, 128), (2, 246), (3, 64), (3, 164), (5, 96), (7, 96)]
TARGET_SECONDS = 0.4


def _bench(fn, a, b, m, p) -> float:
    """Calls per second, measured over ~TARGET_SECONDS."""
    n, elapsed = 0, 0.0
    batch = 8
    while elapsed < TARGET_SECONDS:
        t0 = time.perf_counter()
        for _ in range(batch):
            fn(a, b, m, p)
        elapsed += time.perf_counter() - t0
        n += batch
        batch *= 2
    return n / elapsed


def bench_kernels() -> None:
    rng = random.Random(20240814)
    print(f"{'p':>3} {'width':>6} {'pure ops/s':>12} {'c ops/s':>12} {'speedup':>8}")
    for p, width in CASES:
        a = tuple(rng.randrange(p) for _ in range(width))
        b = tuple(rng.randrange(p) for _ in range(width))
        m = tuple(rng.randrange(p) for _ in range(width)) + (1,)
        py_rate = _bench(_pykernels.mulrem_mod, a, b, m, p)
        if _ckernels is None:
            print(f"{p:>3} {width:>6} {py_rate:>12.0f} {'n/a':>12} {'n/a':>8}")
            continue
        c_rate = _bench(_ckernels.mulrem_mod, a, b, m, p)
        print(
            f"{p:>3} {width:>6} {py_rate:>12.0f} {c_rate:>12.0f} "
            f"{c_rate / py_rate:>7.1f}x"
        )


END_TO_END = (
    "import time; from scrimkit import scrim, kernels; "
    "t0 = time.monotonic(); scrim.factor_xn_minus_1(8, 83); "
    "print(f'  backend={kernels.BACKEND}: {time.monotonic() - t0:.2f} s')"
)


def bench_end_to_end() -> None:
    print(
        "\nfactor x^83 - 1 over GF(8^2)  (extension field of size 2^246):",
        flush=True,
    )
    for pure in ("0", "1"):
        env = dict(os.environ, SCRIMKIT_PURE=pure)
        subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True)


if __name__ == "__main__":
    bench_kernels()
    if _ckernels is not None:
        bench_end_to_end()
    else:
        print("\ncompiled kernels unavailable; end-to-end comparison skipped")
