"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times ``freudenthal_grid`` over a range of highest weights and ``convolve`` on
two dense characters, for every importable backend, and checks the outputs
agree before reporting.
"""
import argparse
import timeit

import numpy as np

from w3cft import kernels, sl3

CASES = {
    "freudenthal (4,4)": ("freudenthal_grid", (4, 4)),
    "freudenthal (8,6)": ("freudenthal_grid", (8, 6)),
    "freudenthal (12,12)": ("freudenthal_grid", (12, 12)),
}
CONV = [((3, 2), (2, 3)), ((6, 4), (5, 5))]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    mods = kernels.backends()
    cases = dict(CASES)
    for lam, mu in CONV:
        a, b = sl3.dense_character(lam)[0], sl3.dense_character(mu)[0]
        cases[f"convolve {lam}x{mu}"] = ("convolve", (a, b))

    names = sorted(mods)
    print(f"{'case':28}" + "".join(f"{n + ' (ms)':>16}" for n in names) + f"{'speedup':>10}")
    for label, (fn, argv) in cases.items():
        outs = [getattr(mods[n], fn)(*argv) for n in names]
        assert all(np.array_equal(outs[0], o) for o in outs[1:]), label
        times = []
        for n in names:
            f = getattr(mods[n], fn)
            t = min(timeit.repeat(lambda: f(*argv), number=1, repeat=args.repeat))
            times.append(t * 1e3)
        t = dict(zip(names, times))
        speed = f"{t['python'] / t['compiled']:.0f}x" if "compiled" in t else "-"
        print(f"{label:28}" + "".join(f"{t:16.3f}" for t in times) + f"{speed:>10}")


if __name__ == "__main__":
    main()
