"""Compare the compiled and pure-Python kernels on the real pipelines.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--audit-n 18]

Each workload runs under both backends; the script checks that the results
agree and prints best-of-N wall times and the speedup.
"""

import argparse
import time

from audioactive import _backend, fst, theorems


def splitting():
    return theorems.prove_splitting(10).sizes


def cosmology():
    theorems.standard_machines.cache_clear()
    m = theorems.standard_machines()
    return theorems.prove_cosmological(m["atomicf"], 25).sizes


def audit(n):
    return lambda: theorems.audit_audio_src(n)


def best_of(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--audit-n", type=int, default=18)
    args = ap.parse_args()
    if _backend.compiled_kernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

    workloads = [
        ("splitting", splitting),
        ("cosmology (n=1..25)", cosmology),
        (f"Audio^{args.audit_n} . Src", audit(args.audit_n)),
    ]
    backends = [("cython", _backend.compiled_kernels), ("python", _backend.python_kernels)]
    original = fst.kernels
    print(f"{'workload':<24}{'cython':>10}{'python':>10}{'speedup':>10}")
    try:
        for name, fn in workloads:
            row, results = {}, []
            for label, mod in backends:
                fst.kernels = mod
                row[label], res = best_of(fn, args.repeat)
                results.append(res)
            if results[0] != results[1]:
                raise SystemExit(f"{name}: backends disagree")
            print(f"{name:<24}{row['cython']:>9.3f}s{row['python']:>9.3f}s{row['python'] / row['cython']:>9.1f}x")
    finally:
        fst.kernels = original
        theorems.standard_machines.cache_clear()


if __name__ == "__main__":
    main()
