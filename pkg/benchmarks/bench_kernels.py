"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times each kernel directly on both backends, then the end-to-end solve in a
subprocess per backend (the backend is fixed at import).
"""
import argparse
import os
import subprocess
import sys
import timeit
from fractions import Fraction

from adomian import _kernels_py

try:
    from adomian import _ckernels
except ImportError:
    _ckernels = None

SOLVE_SNIPPET = (
    "import time; from adomian import PRESETS, solve, BACKEND;"
    "from adomian.polynomials import generate_adomian;"
    "t=time.perf_counter(); solve(PRESETS['problem1'], {order}); a=time.perf_counter()-t;"
    "generate_adomian.cache_clear();"
    "t=time.perf_counter(); [generate_adomian(6, n) for n in range({gen_order})]; b=time.perf_counter()-t;"
    "print(BACKEND, a, b)"
)


def kernel_cases():
    a = [Fraction(k * k + 1, k + 3) for k in range(60)]
    b = [Fraction(7 - k, 2 * k + 1) for k in range(60)]
    return {
        "trunc_convolve 60x60": lambda m: m.trunc_convolve(a, b, -1),
        "trunc_convolve 60x60 @30": lambda m: m.trunc_convolve(a, b, 30),
        "weighted_multisets(6, 40)": lambda m: m.weighted_multisets(6, 40),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--order", type=int, default=40)
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the pure-Python backend only")

    print(f"{'kernel':32s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn in kernel_cases().items():
        times = []
        for _, mod in backends:
            n, _ = timeit.Timer(lambda: fn(mod)).autorange()
            times.append(min(timeit.repeat(lambda: fn(mod), number=n, repeat=args.repeat)) / n)
        row = f"{label:32s}" + "".join(f"{t * 1e3:10.3f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:10.2f}x"
        print(row)

    print(f"\nend to end: solve(problem1, {args.order}), generate_adomian(6, 0..39)")
    for name, _ in backends:
        env = dict(os.environ)
        env["ADOMIAN_PURE_PYTHON"] = "1" if name == "python" else "0"
        code = SOLVE_SNIPPET.format(order=args.order, gen_order=40)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, solve_t, gen_t = out.stdout.split()
        print(f"  {backend:8s} solve {float(solve_t):.3f}s   generate {float(gen_t):.3f}s")


if __name__ == "__main__":
    main()
