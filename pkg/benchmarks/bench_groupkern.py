"""Compare the compiled group kernels against the numpy fallback.

Run from the repository root after an editable install:

    python3 benchmarks/bench_groupkern.py [--repeats N]

Times the kernel entry points on subgroups of several sizes.  The
cython column reads "-" when the extension did not build.
"""

import argparse
import time

from opendp4 import _groupkern_py
from opendp4 import groupkern
from opendp4 import weyl_d5 as wd

try:
    from opendp4 import _groupkern
except ImportError:
    _groupkern = None


def _subject_subgroups():
    """A spread of subgroup sizes, keyed by a short label."""
    fig2 = wd.SignedPerm((1, 0, 2, 3, 4), (1, -1, -1, 1, 1))
    fig6 = wd.SignedPerm((0, 2, 3, 4, 1), (-1, 1, 1, 1, -1))
    cyc3 = wd.SignedPerm((1, 2, 0, 3, 4), (1, 1, 1, 1, 1))
    dic = wd.SignedPerm.from_images([-1, -3, -2, 5, -4])
    tau = wd.SignedPerm.from_images([-1, -2, -3, 5, -4])
    swap12 = wd.SignedPerm((1, 0, 2, 3, 4), (1, 1, 1, 1, 1))
    cyc5 = wd.SignedPerm((1, 2, 3, 4, 0), (1, 1, 1, 1, 1))
    pairs = [
        ("order 4", [fig2]),
        ("order 8", [fig6]),
        ("order 12", [cyc3, dic]),
        ("order 24", [swap12, cyc3, tau]),
        ("order 120", [swap12, cyc5]),
    ]
    return [(label, wd.Subgroup.from_generators(gens)) for label, gens in pairs]


def _time(fn, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5,
                        help="repetitions per measurement (best is kept)")
    args = parser.parse_args()

    w = wd._weyl()
    table, inv = w.table, w.inv

    jobs = []
    for label, sub in _subject_subgroups():
        jobs.append(("closure, %s" % label,
                     lambda m, g=sub.generators: m.closure(table, g)))
        jobs.append(("canonical_key, %s" % label,
                     lambda m, e=sub.elements: m.canonical_key(table, inv, e)))
        jobs.append(("normalizer, %s" % label,
                     lambda m, e=sub.elements: m.normalizer(table, inv, e)))
    all_ids = tuple(range(1920))
    jobs.append(("conj_min_reps, 1920 conjugators",
                 lambda m: m.conj_min_reps(table, inv, all_ids)))

    print("active backend: %s%s" % (
        groupkern.BACKEND,
        "" if _groupkern is not None else " (cython extension unavailable)"))
    print()
    header = "%-32s %12s %12s %8s" % ("kernel", "numpy", "cython", "ratio")
    print(header)
    print("-" * len(header))
    for name, job in jobs:
        t_py = _time(lambda: job(_groupkern_py), args.repeats)
        if _groupkern is None:
            print("%-32s %9.3f ms %12s" % (name, t_py * 1e3, "-"))
            continue
        t_cy = _time(lambda: job(_groupkern), args.repeats)
        print("%-32s %9.3f ms %9.3f ms %7.2fx" % (
            name, t_py * 1e3, t_cy * 1e3,
            t_py / t_cy if t_cy else float("inf")))

    t0 = time.perf_counter()
    n = len(wd.subgroup_conjugacy_classes())
    dt = time.perf_counter() - t0
    print()
    print("full census: %d classes in %.1f s" % (n, dt))


if __name__ == "__main__":
    main()
