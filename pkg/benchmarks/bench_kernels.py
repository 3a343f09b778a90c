"""Compare the numba and pure-numpy kernel backends.

    python benchmarks/bench_kernels.py [--n 8 16 32] [--repeat 5]

Kernel timings call both backend modules in-process. The end-to-end row runs a
small Haar sweep in a subprocess per backend, since the backend is fixed at
import time by LOOPMESH_DISABLE_NUMBA.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from loopmesh import kernels
from loopmesh.architectures import ArchitectureConfig, build_diagram
from loopmesh.mesh import decompose_reck
from loopmesh.numerics import RandomSource, haar_unitary

SWEEP_SNIPPET = """
import time
from loopmesh.architectures import ArchitectureConfig
from loopmesh.runner import SweepConfig, run_haar_sweep
cfg = SweepConfig(ArchitectureConfig("chain_loop", 0.7, 0.8), {ns}, trials={trials})
run_haar_sweep(SweepConfig(cfg.architecture, (4,), trials=1))  # warm-up / JIT
t = time.perf_counter()
run_haar_sweep(cfg)
print(time.perf_counter() - t)
"""


def best_of(fn, repeat):
    number = max(1, int(0.2 / max(timeit.timeit(fn, number=1), 1e-7)))
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def bench_kernels(sizes, repeat):
    mods = kernels.backends()
    print(f"{'kernel':<16}{'N':>4}" + "".join(f"{name:>14}" for name in mods) + f"{'speedup':>10}")
    for n in sizes:
        u = haar_unitary(n, RandomSource(n))
        mesh = decompose_reck(u)
        arrays = build_diagram(mesh, ArchitectureConfig("dual_loop", 0.9, 0.95, 0.9, 0.999)).element_arrays()
        cases = {
            "reck_null": lambda m: m.reck_null(u.copy()),
            "apply_elements": lambda m: m.apply_elements(np.eye(n, dtype=np.complex128), *arrays),
        }
        for label, call in cases.items():
            for m in mods.values():
                call(m)  # compile
            times = {name: best_of(lambda m=m: call(m), repeat) for name, m in mods.items()}
            cells = "".join(f"{times[name] * 1e6:>12.1f}us" for name in mods)
            speed = times["numpy"] / times["numba"] if "numba" in times else float("nan")
            print(f"{label:<16}{n:>4}{cells}{speed:>9.1f}x")


def bench_sweep(ns, trials):
    print(f"\nend-to-end chain-loop sweep, N={ns}, {trials} trials each")
    for name, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, LOOPMESH_DISABLE_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", SWEEP_SNIPPET.format(ns=tuple(ns), trials=trials)],
                             env=env, capture_output=True, text=True, check=True)
        print(f"  {name:<6} {float(out.stdout):8.3f} s")


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=int, nargs="+", default=[4, 8, 16, 32])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--sweep-trials", type=int, default=20)
    p.add_argument("--skip-sweep", action="store_true")
    args = p.parse_args()
    print(f"default backend: {kernels.BACKEND}\n")
    bench_kernels(args.n, args.repeat)
    if not args.skip_sweep:
        bench_sweep(args.n, args.sweep_trials)


if __name__ == "__main__":
    main()
