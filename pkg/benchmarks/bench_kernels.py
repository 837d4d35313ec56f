"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--lengths 50 100 200 400] [--strands 5]

Kernel timings call both modules directly on the same inputs.  The
end-to-end row runs a small success-rate experiment in a subprocess per
backend (``BRAIDTWIST_PURE`` forces the fallback).
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from braidtwist import _pykernels

try:
    from braidtwist import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_rows(mod, n, length, rng, repeat):
    signed = [rng.randint(1, n - 1) * rng.choice((1, -1)) for _ in range(length)]
    positive = [abs(g) for g in signed]
    return {
        "normalize": best_of(lambda: mod.lexmin(mod.delta_form(signed, n)[1], n), repeat),
        "extract_left": best_of(
            lambda: [mod.extract_left(positive, i) for i in range(1, n)], repeat),
        "suffix_descents": best_of(lambda: mod.suffix_descents(positive, n), repeat),
        "strand_trace": best_of(lambda: mod.strand_trace(signed, n), repeat),
    }


END_TO_END = (
    "import time;"
    "from braidtwist.bench import ExperimentConfig, run_experiment;"
    "from braidtwist.kernels import BACKEND;"
    "t=time.perf_counter();"
    "run_experiment(ExperimentConfig(5,[1,2],{samples},(5,60),seed=1));"
    "print(BACKEND, time.perf_counter()-t)"
)


def end_to_end(pure: bool, samples: int) -> tuple[str, float]:
    env = dict(os.environ)
    env.pop("BRAIDTWIST_PURE", None)
    if pure:
        env["BRAIDTWIST_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", END_TO_END.format(samples=samples)],
                         env=env, capture_output=True, text=True, check=True).stdout.split()
    return out[0], float(out[1])


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--lengths", type=int, nargs="+", default=[50, 100, 200, 400])
    parser.add_argument("--strands", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--samples", type=int, default=40, help="per power, end-to-end row")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels are not built; only the fallback can be timed", file=sys.stderr)

    print(f"{'kernel':<16}{'length':>7}{'python ms':>12}{'compiled ms':>13}{'speedup':>9}")
    for length in args.lengths:
        rows_py = kernel_rows(_pykernels, args.strands, length, random.Random(args.seed),
                              args.repeat)
        rows_c = (kernel_rows(_ckernels, args.strands, length, random.Random(args.seed),
                              args.repeat) if _ckernels else {})
        for name, t_py in rows_py.items():
            t_c = rows_c.get(name)
            c_txt = f"{t_c * 1e3:13.3f}" if t_c is not None else f"{'-':>13}"
            s_txt = f"{t_py / t_c:9.1f}" if t_c else f"{'-':>9}"
            print(f"{name:<16}{length:>7}{t_py * 1e3:12.3f}{c_txt}{s_txt}")

    print()
    for pure in (True, False):
        if not pure and _ckernels is None:
            break
        backend, secs = end_to_end(pure, args.samples)
        print(f"run_experiment B_5, 2x{args.samples} trials, {backend:>8} backend: {secs:.2f} s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
