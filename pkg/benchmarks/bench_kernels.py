"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 200]

Each kernel is warmed up once per backend so numba compile time is not
counted.  A whole attack run is timed too.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from ccattack import _accel
from ccattack.attack import AttackConfig, run_attack
from ccattack.editmatrix import compute_matrix
from ccattack.generators import SgInstance, shrink
from ccattack.lfsr import LfsrState, generate
from ccattack.polys import primitive
from ccattack.searchgraph import count_shortest_paths


def _timed(fn, repeat: int) -> float:
    fn()
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(1)
    x = rng.integers(0, 2, 120).astype(np.uint8)
    y = rng.integers(0, 2, 80).astype(np.uint8)
    matrix = compute_matrix(x, y, 3)
    state = LfsrState.of(primitive(16), rng.integers(0, 2, 16).astype(np.uint8) | 1)
    inst = SgInstance(LfsrState.of(primitive(3), "101"), LfsrState.of(primitive(9), "100110101"))
    ks, _ = shrink(inst, 8 * 36)
    cfg = AttackConfig(generator="sg", target_poly=primitive(9), selector_poly=primitive(3), H=3, m=36,
                       exhaustive_fallback=True)

    cases = [
        ("compute_matrix N=120 M=80 kmax=3", lambda: compute_matrix(x, y, 3), args.repeat),
        ("generate 100k bits, L=16", lambda: generate(state, 100_000), args.repeat),
        ("count_shortest_paths N=120 M=80", lambda: count_shortest_paths(matrix), max(args.repeat // 10, 1)),
        ("run_attack L_A=9 M=36", lambda: run_attack(cfg, ks), 3),
    ]
    if not _accel.HAVE_NUMBA:
        print("numba is not importable; only the numpy path can be timed")
    saved = _accel.USE_NUMBA
    print(f"{'kernel':<36}{'numba ms':>12}{'numpy ms':>12}{'speed-up':>10}")
    try:
        for name, fn, rep in cases:
            times = {}
            for backend in ("numba", "numpy"):
                if backend == "numba" and not _accel.HAVE_NUMBA:
                    continue
                _accel.USE_NUMBA = backend == "numba"
                times[backend] = _timed(fn, rep) * 1000
            nb = times.get("numba")
            np_ms = times["numpy"]
            ratio = f"{np_ms / nb:9.1f}x" if nb else "      n/a"
            print(f"{name:<36}{nb if nb is not None else float('nan'):12.3f}{np_ms:12.3f}{ratio:>10}")
    finally:
        _accel.USE_NUMBA = saved


if __name__ == "__main__":
    main()
