"""Benchmark the two orbit-closure engines against each other.

The compiled union-find and the numpy label-propagation sweep must give
identical component labels; this script times both on a ladder of group
sizes so the fallback's cost is visible before anyone reaches for the
RADICAL_RAM_NO_NUMBA escape hatch.

Run:  python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from radical_ram._kernels import _HAVE_NUMBA, _orbit_roots_numpy, _orbit_roots_uf
from radical_ram.holomorph import GroupDesc
from radical_ram.oracle import _conj_perms

LADDER = [
    GroupDesc(3, 2, 2),
    GroupDesc(5, 2, 2),
    GroupDesc(7, 2, 2),
    GroupDesc(3, 3, 3),
    GroupDesc(5, 3, 2),
    GroupDesc(5, 3, 3),
    GroupDesc(7, 3, 2),
]


def timed(fn, perms, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(perms)
        best = min(best, time.perf_counter() - t0)
    return out, best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = ap.parse_args()

    if _HAVE_NUMBA:
        # throwaway call so JIT compilation is not billed to the first row
        _orbit_roots_uf(_conj_perms(LADDER[0]))

    header = f"{'group':>14s} {'|G|':>8s} {'numba':>10s} {'numpy':>10s} {'ratio':>7s}"
    print(header)
    print("-" * len(header))
    for G in LADDER:
        perms = _conj_perms(G)
        roots_np, t_np = timed(_orbit_roots_numpy, perms, args.repeat)
        if _HAVE_NUMBA:
            roots_nb, t_nb = timed(_orbit_roots_uf, perms, args.repeat)
            assert np.array_equal(roots_nb, roots_np), "engines disagree"
            nb_cell, ratio = f"{t_nb * 1e3:8.2f}ms", f"{t_np / t_nb:6.1f}x"
        else:
            nb_cell, ratio = "     n/a", "   n/a"
        label = f"({G.p},{G.r},{G.s})"
        print(f"{label:>14s} {G.order:>8d} {nb_cell:>10s} {t_np * 1e3:8.2f}ms {ratio:>7s}")

    n_orbits = len(set(_orbit_roots_numpy(_conj_perms(LADDER[-1])).tolist()))
    print(f"\nsanity: {LADDER[-1]} has {n_orbits} conjugation orbits")


if __name__ == "__main__":
    main()
