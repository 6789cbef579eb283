"""Time each hot kernel under numba and pure numpy.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from lejacircle import _kernels as K


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    ang = np.random.default_rng(0).uniform(0, 2, 2048)
    pts = ang[:256]
    where = np.linspace(0, 2, 1 << 14, endpoint=False)
    return [
        ("prefix_energies N=2048 s=0.5",
         lambda: K._prefix_energies_nb(ang, 0.5), lambda: K._prefix_energies_np(ang, 0.5)),
        ("potential 256 pts x 16384 angles",
         lambda: K._potential_nb(pts, 1.0, where), lambda: K._potential_np(pts, 1.0, where)),
        ("scan_theta h_lower (10, 20)",
         lambda: K._scan_nb(0, 0.5, 10, 20), lambda: K._scan_np(0, 0.5, 10, 20)),
        ("scan_theta kappa (10, 20)",
         lambda: K._scan_nb(2, 0.0, 10, 20), lambda: K._scan_np(2, 0.0, 10, 20)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':<36} {'numba [s]':>10} {'numpy [s]':>10} {'speedup':>8}")
    for name, nb, npf in cases():
        nb()  # compile outside the timing
        t_nb = best_of(nb, args.repeat)
        t_np = best_of(npf, args.repeat)
        print(f"{name:<36} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
