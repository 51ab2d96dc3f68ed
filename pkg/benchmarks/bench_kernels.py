"""Times the compiled enumeration kernel against the pure-Python fallback.

Both backends share one scan order and produce identical results, so the
same high-level calls are timed with the kernel swapped underneath. Run
from a checkout with the package installed:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --quick --repeat 1
"""

from __future__ import annotations

import argparse
import time

from iasi import (
    IDENTICAL_BIARITHMETIC,
    SearchBounds,
    backend,
    count_labelings,
    edge_condition_agreement,
    named_graph,
    search_labeling,
)
from iasi import _pykernel


def _workloads(quick: bool):
    shrink = 1 if quick else 0

    def count(name, **kw):
        g = named_graph(name)
        b = SearchBounds(**kw)
        return lambda: count_labelings(g, b)

    k3_bounds = SearchBounds(
        a_max=6 - shrink * 3,
        d_max=8 - shrink * 5,
        n_min=3,
        n_max=4 - shrink,
        target_class=IDENTICAL_BIARITHMETIC,
    )
    k3 = named_graph("K3")
    p3 = named_graph("P3")
    agree_max = 3 if quick else 4
    return [
        ("count P3, a<=5 d<=5 n=3..4", count("P3", a_max=5 - shrink * 2, d_max=5 - shrink * 2, n_max=4)),
        ("count C4, a<=4 d<=4 n=3", count("C4", a_max=4 - shrink * 2, d_max=4 - shrink * 2, n_max=3)),
        ("exhaust K3 identical, a<=6 d<=8 n=3..4", lambda: search_labeling(k3, k3_bounds)),
        (
            f"edge agreement P3, a,d<={agree_max} n=3..4",
            lambda: edge_condition_agreement(p3, agree_max, agree_max, 3, 4),
        ),
    ]


def _best_of(fn, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    ap.add_argument("--quick", action="store_true", help="shrink every workload")
    args = ap.parse_args(argv)

    kernels = [("python", _pykernel.enumerate_labelings)]
    try:
        from iasi import _kernel

        kernels.insert(0, ("compiled", _kernel.enumerate_labelings))
    except ImportError:
        print("compiled extension not built; timing pure Python only")

    original = backend.enumerate_labelings
    rows = []
    try:
        for name, fn in _workloads(args.quick):
            timings = {}
            results = {}
            for label, kernel in kernels:
                backend.enumerate_labelings = kernel
                timings[label], results[label] = _best_of(fn, args.repeat)
            if len(results) == 2 and results["compiled"] != results["python"]:
                raise SystemExit(f"backends disagree on {name!r}")
            rows.append((name, timings))
    finally:
        backend.enumerate_labelings = original

    width = max(len(name) for name, _ in rows)
    header = f"{'workload':<{width}}  {'compiled':>10}  {'python':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, timings in rows:
        compiled = timings.get("compiled")
        python = timings["python"]
        ctext = f"{compiled * 1000:8.1f}ms" if compiled is not None else " " * 10
        stext = f"{python / compiled:7.1f}x" if compiled else " " * 8
        print(f"{name:<{width}}  {ctext}  {python * 1000:8.1f}ms  {stext}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
