"""Time the numba kernels against the numpy fallback.

Each backend runs in its own process (the choice is made at import).
The first numba call compiles; a warm-up run keeps that out of the timings.

    python3 benchmarks/bench_backends.py [--systems cyclic5,katsura5] [--strategies arri,ggv]
"""
import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time
from siggb import kernels
from siggb.engine import incremental_gb
from siggb.systems import named_system
systems, strategies, repeat = json.loads(sys.argv[1])
incremental_gb(named_system("cyclic4").polys, "ggv")  # warm-up / JIT
out = []
for name in systems:
    F = named_system(name).polys
    for s in strategies:
        best = float("inf")
        for _ in range(repeat):
            t = time.perf_counter()
            r = incremental_gb(F, s)
            best = min(best, time.perf_counter() - t)
        out.append([name, s, r.stats.pairs_reduced, r.stats.zero_reductions, best])
print(json.dumps({"backend": kernels.BACKEND, "rows": out}))
"""


def measure(backend, systems, strategies, repeat):
    env = dict(os.environ, SIGGB_BACKEND=backend)
    res = subprocess.run([sys.executable, "-c", CHILD,
                          json.dumps([systems, strategies, repeat])],
                         env=env, check=True, capture_output=True, text=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--systems", default="cyclic5,katsura5,eco6,cyclic6")
    ap.add_argument("--strategies", default="f5,ggv,arri")
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    systems, strategies = a.systems.split(","), a.strategies.split(",")
    nb = measure("numba", systems, strategies, a.repeat)
    np_ = measure("numpy", systems, strategies, a.repeat)
    print(f"{'system':<10} {'strategy':<8} {'pairs;zero':>11} {'numba s':>9} "
          f"{'numpy s':>9} {'speedup':>8}")
    for r1, r2 in zip(nb["rows"], np_["rows"]):
        same = r1[2:4] == r2[2:4]
        flag = "" if same else "  COUNTS DIFFER"
        print(f"{r1[0]:<10} {r1[1]:<8} {f'{r1[2]};{r1[3]}':>11} {r1[4]:9.3f} "
              f"{r2[4]:9.3f} {r2[4] / max(r1[4], 1e-9):7.1f}x{flag}")


if __name__ == "__main__":
    main()
